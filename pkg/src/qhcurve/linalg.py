"""Exact linear algebra over Q.

Pivoting is deterministic: leftmost nonzero column first, and within that
column the smallest remaining row index.  Over Q no magnitude heuristics
are needed.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from gmpy2 import mpq


class RationalMatrix:
    """Dense immutable matrix of ``mpq`` entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int = None):
        self.rows = tuple(tuple(mpq(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and (
            self.rows, self.ncols) == (other.rows, other.ncols)

    def __repr__(self):
        return "RationalMatrix(%r)" % [[str(x) for x in r] for r in self.rows]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self.rows[i][j] for i in range(self.nrows)]
                               for j in range(self.ncols)], self.nrows)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)


def rref(M: RationalMatrix) -> Tuple[RationalMatrix, List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    A = [list(r) for r in M.rows]
    nrows, ncols = M.nrows, M.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        row = A[r]
        inv = 1 / row[c]
        if inv != 1:
            row[:] = [x * inv for x in row]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                Ai = A[i]
                for j in range(c, ncols):
                    if row[j]:
                        Ai[j] -= f * row[j]
        pivots.append(c)
        r += 1
    return RationalMatrix(A, ncols), pivots


def rank(M: RationalMatrix) -> int:
    return len(rref(M)[1])


def nullspace_basis(M: RationalMatrix) -> List[Tuple]:
    """Basis of {v : M v = 0}, one vector per free column, in column order.

    The vector for free column j has a 1 in position j and zeros in the other
    free positions.
    """
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for j in range(M.ncols):
        if j in pivset:
            continue
        v = [mpq(0)] * M.ncols
        v[j] = mpq(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R.rows[i][j]
        basis.append(tuple(v))
    return basis


class EchelonSpace:
    """Incrementally built subspace of Q^n kept in fully reduced echelon form.

    Vectors are sparse dicts ``{column: value}``.  Column indices are ordered
    so that smaller index = more significant; the pivot of a vector is its
    smallest column.
    """

    def __init__(self):
        self.rows: Dict[int, Dict[int, object]] = {}   # pivot column -> row

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Dict[int, object]) -> Dict[int, object]:
        v = dict(vec)
        if not self.rows:
            return v
        for col in sorted(c for c in v if c in self.rows):
            a = v.get(col)
            if not a:
                continue
            for j, b in self.rows[col].items():
                x = v.get(j, 0) - a * b
                if x:
                    v[j] = x
                else:
                    v.pop(j, None)
        return v

    def add(self, vec: Dict[int, object]) -> bool:
        """Insert ``vec``; return False if it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v)
        inv = 1 / v[piv]
        v = {j: x * inv for j, x in v.items()}
        for p, row in self.rows.items():
            a = row.get(piv)
            if a:
                for j, b in v.items():
                    x = row.get(j, 0) - a * b
                    if x:
                        row[j] = x
                    else:
                        row.pop(j, None)
        self.rows[piv] = v
        return True

    def basis(self) -> List[Dict[int, object]]:
        return [self.rows[p] for p in sorted(self.rows)]
