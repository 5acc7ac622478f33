"""Syzygies, minimal graded free resolutions and mdr.

Resolutions are built level by level.  At each level the current columns
get a module Groebner basis with representations, Schreyer's theorem turns
the S-pair reductions into a generating set of the syzygy module, a graded
Buchberger pass picks a minimal subset degree by degree, and the surviving
columns are put into a canonical echelon form so the whole resolution only
depends on the module, not on the route taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .groebner import (COMP, DEFAULT_STEP_CAP, ONE_OFFSET, Ideal, Ring, _axpy,
                       _Basis, _mul_ring_vec, grevlex, reduced_basis, run_buchberger)
from .linalg import EchelonSpace, RationalMatrix, nullspace_basis, rank
from .poly import NVARS, Polynomial, gradient, monomials_of_degree
from .points import ProjectivePoint


def dim_R(t: int, nvars: int = NVARS) -> int:
    return comb(t + nvars - 1, nvars - 1) if t >= 0 else 0


@dataclass(frozen=True)
class FreeModuleVector:
    """Element of a graded free module R(-w_0) + ... ; ``twists`` are the
    degrees of the basis vectors."""

    entries: Tuple[Polynomial, ...]
    twists: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "twists", tuple(self.twists))
        if len(self.entries) != len(self.twists):
            raise ValueError("one twist per entry required")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def degrees(self):
        return {p.degree() + w for p, w in zip(self.entries, self.twists) if p}

    def is_homogeneous(self) -> bool:
        return all(p.is_homogeneous() for p in self.entries) and len(self.degrees()) <= 1

    def degree(self) -> Optional[int]:
        if not self.is_homogeneous():
            raise ValueError("vector is not homogeneous")
        degs = self.degrees()
        return degs.pop() if degs else None

    def dot(self, gens: Sequence[Polynomial]) -> Polynomial:
        nv = self.entries[0].nvars
        total = Polynomial.zero(nv)
        for a, g in zip(self.entries, gens):
            if a:
                total = total + a * g
        return total

    def __str__(self):
        return "(%s)" % ", ".join(str(p) for p in self.entries)


class GradedMatrix:
    """Matrix of homogeneous polynomials; entry (i, j) has degree
    ``col_twists[j] - row_twists[i]`` (or is zero)."""

    def __init__(self, rows: Sequence[Sequence[Polynomial]], row_twists, col_twists):
        self.rows = tuple(tuple(r) for r in rows)
        self.row_twists = tuple(row_twists)
        self.col_twists = tuple(col_twists)
        if len(self.rows) != len(self.row_twists):
            raise ValueError("row twist count mismatch")
        for r in self.rows:
            if len(r) != len(self.col_twists):
                raise ValueError("column twist count mismatch")
        for i, r in enumerate(self.rows):
            for j, p in enumerate(r):
                if p and (not p.is_homogeneous()
                          or p.degree() != self.col_twists[j] - self.row_twists[i]):
                    raise ValueError("entry (%d,%d) has the wrong degree" % (i, j))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Polynomial]], row_twists, col_twists):
        n = len(row_twists)
        return cls([[c[i] for c in columns] for i in range(n)], row_twists, col_twists)

    @property
    def nrows(self):
        return len(self.row_twists)

    @property
    def ncols(self):
        return len(self.col_twists)

    def entry(self, i, j) -> Polynomial:
        return self.rows[i][j]

    def column(self, j) -> Tuple[Polynomial, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def column_degrees(self) -> Tuple[int, ...]:
        """Degrees of the columns relative to the smallest row twist."""
        base = min(self.row_twists) if self.row_twists else 0
        return tuple(c - base for c in self.col_twists)

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        nv = self._nvars()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = Polynomial.zero(nv)
                for k in range(self.ncols):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(out, self.row_twists, other.col_twists)

    def _nvars(self):
        for r in self.rows:
            for p in r:
                return p.nvars
        return NVARS

    def is_zero(self) -> bool:
        return all(not p for r in self.rows for p in r)

    def has_unit_entries(self) -> bool:
        return any(p and p.is_constant() for r in self.rows for p in r)

    def evaluate(self, point) -> RationalMatrix:
        coords = point.coords if isinstance(point, ProjectivePoint) else point
        return RationalMatrix([[p.evaluate(coords) for p in r] for r in self.rows], self.ncols)

    def rank_at(self, point) -> int:
        return rank(self.evaluate(point))

    def entries(self) -> List[Polynomial]:
        return [p for r in self.rows for p in r]

    def to_json(self):
        return {"row_twists": list(self.row_twists), "col_twists": list(self.col_twists),
                "entries": [[str(p) for p in r] for r in self.rows]}

    def __str__(self):
        return "\n".join("[ " + ", ".join(str(p) for p in r) + " ]" for r in self.rows)


class BettiTable:
    """Graded Betti numbers: ``(homological index, internal degree) -> rank``.

    Index 0 counts the generators of the ideal, index 1 the first syzygies."""

    def __init__(self, data: Dict[Tuple[int, int], int]):
        self.data = {k: v for k, v in sorted(data.items()) if v}

    def __getitem__(self, key):
        return self.data.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.data == other.data

    def total(self, i: int) -> int:
        return sum(v for (h, _), v in self.data.items() if h == i)

    def degrees(self, i: int) -> List[int]:
        """Internal degrees at index ``i`` with multiplicity, ascending."""
        out = []
        for (h, j), v in self.data.items():
            if h == i:
                out += [j] * v
        return out

    def length(self) -> int:
        return max((h for h, _ in self.data), default=-1)

    def hilbert_function(self, t: int, nvars: int = NVARS) -> int:
        """HF of R/I in degree t implied by the table (I = image of index 0)."""
        val = dim_R(t, nvars)
        for (h, j), v in self.data.items():
            val += (-1) ** (h + 1) * v * dim_R(t - j, nvars)
        return val

    def to_json(self):
        return [[h, j, v] for (h, j), v in self.data.items()]

    def __str__(self):
        parts = []
        for i in range(self.length() + 1):
            degs = {}
            for j in self.degrees(i):
                degs[j] = degs.get(j, 0) + 1
            parts.append(" + ".join("R(-%d)^%d" % (j, v) if v > 1 else "R(-%d)" % j
                                    for j, v in sorted(degs.items())))
        return " <- ".join(parts)


@dataclass
class FreeResolution:
    """``maps[0]`` is the 1 x b0 row of ideal generators, ``maps[k]`` the
    b_{k-1} x b_k matrix of k-th syzygies."""

    maps: List[GradedMatrix]
    exact: bool = False

    @property
    def length(self) -> int:
        return len(self.maps) - 1

    def betti(self) -> BettiTable:
        data = {}
        for i, m in enumerate(self.maps):
            for w in m.col_twists:
                data[(i, w)] = data.get((i, w), 0) + 1
        return BettiTable(data)

    def check_products(self) -> bool:
        return all((self.maps[i] @ self.maps[i + 1]).is_zero() for i in range(len(self.maps) - 1))

    def is_minimal(self) -> bool:
        return not any(m.has_unit_entries() for m in self.maps[1:])


# ---------------------------------------------------------------------------
# Schreyer


def _schreyer(raw, coord_ring: Ring) -> List[Dict[int, object]]:
    """Syzygies of the inputs behind ``raw`` (tracked run) from the minimal
    Schreyer pairs of its basis, mapped back through the representations."""
    b: _Basis = raw.reducer()
    ring = raw.ring
    n = len(b)
    out = []
    for j in range(n):
        cands = []
        for i in range(j):
            if b.lcomp[i] != b.lcomp[j]:
                continue
            m = tuple(max(x, y) - y for x, y in zip(b.lexps[i], b.lexps[j]))
            cands.append((m, i))
        chosen = []
        for m, i in cands:
            dominated = False
            for m2, i2 in cands:
                if i2 == i:
                    continue
                if all(a <= c for a, c in zip(m2, m)) and (m2 != m or i2 < i):
                    dominated = True
                    break
            if not dominated:
                chosen.append((m, i))
        for m, i in chosen:
            lcm = tuple(max(x, y) for x, y in zip(b.lexps[i], b.lexps[j]))
            lcm_code = ring.term(lcm, b.lcomp[j])
            si = lcm_code - b.lts[i]
            sj = lcm_code - b.lts[j]
            s = {}
            _axpy(s, 1, b.elems[i], si)
            _axpy(s, -1, b.elems[j], sj)
            quots: Dict[int, Dict[int, object]] = {}
            rem, _ = b.reduce(s, quotients=quots)
            if rem:
                raise RuntimeError("S-vector of a Groebner basis did not reduce to zero")
            syz = {}
            _axpy(syz, 1, b.reps[i], si)
            _axpy(syz, -1, b.reps[j], sj)
            for k in sorted(quots):
                q = quots[k]
                if q:
                    _mul_ring_vec(syz, {key: -c for key, c in q.items()}, b.reps[k])
            if syz:
                out.append(syz)
    return out


def _vector_degree(vec: Sequence[Polynomial], twists) -> int:
    degs = {p.degree() + w for p, w in zip(vec, twists) if p}
    if len(degs) != 1:
        raise ValueError("vector is zero or not homogeneous")
    return degs.pop()


def syzygy_basis(gens, *, step_cap: int = DEFAULT_STEP_CAP) -> List[FreeModuleVector]:
    """Generating set of the syzygies of ``gens`` (polynomials or module
    vectors).  Not minimal in general."""
    gens = list(gens)
    if not gens:
        raise ValueError("no generators")
    if isinstance(gens[0], FreeModuleVector):
        twists = gens[0].twists
        vectors = [tuple(g.entries) for g in gens]
    else:
        twists = (0,)
        vectors = [(g,) for g in gens]
    if any(not any(v) for v in vectors):
        raise ValueError("generators must be nonzero")
    nv = vectors[0][0].nvars if vectors[0][0] else NVARS
    homog = all(all(p.is_homogeneous() for p in v) and len({p.degree() + w for p, w in zip(v, twists) if p}) == 1
                for v in vectors)
    ring = Ring(grevlex(nv), twists)
    coord_twists = tuple(_vector_degree(v, twists) if homog else 0 for v in vectors)
    raw = run_buchberger(ring, [ring.from_vector(v) for v in vectors], track=True,
                         step_cap=step_cap, product_criterion=False)
    cring = ring.with_twists(coord_twists)
    syz = _schreyer(raw, cring) + list(raw.input_syzygies)
    out = []
    seen = set()
    for s in syz:
        vec = tuple(cring.to_vector(s, len(vectors)))
        if vec in seen:
            continue
        seen.add(vec)
        out.append(FreeModuleVector(vec, coord_twists))
    return out


# ---------------------------------------------------------------------------
# canonical columns


def _coord_index(n: int, twists) -> Dict[Tuple[int, Tuple[int, ...]], int]:
    idx = {}
    for c, w in enumerate(twists):
        for e in monomials_of_degree(n - w):
            idx[(c, e)] = len(idx)
    return idx


def _to_coords(vec, idx, shift=None) -> Dict[int, object]:
    out = {}
    for c, p in enumerate(vec):
        for e, coef in p.terms.items():
            if shift is not None:
                e = tuple(a + b for a, b in zip(e, shift))
            out[idx[(c, e)]] = coef
    return out


def _primitive(coords: Dict[int, object]) -> Dict[int, object]:
    den = 1
    for v in coords.values():
        d = int(v.denominator)
        den = den * d // gcd(den, d)
    nums = {k: int(v * den) for k, v in coords.items()}
    g = 0
    for v in nums.values():
        g = gcd(g, v)
    if nums[min(nums)] < 0:
        g = -g
    return {k: mpq(v, g) for k, v in nums.items()}


def canonical_columns(columns: Sequence[Sequence[Polynomial]], twists) -> List[Tuple[Polynomial, ...]]:
    """Canonical minimal generators spanning the same module as ``columns``
    (assumed minimal and homogeneous).

    Degree by degree, each new column is reduced modulo the monomial
    multiples of the lower-degree canonical columns and the degree-n block
    is brought to reduced echelon form; coordinates are ordered by component
    and then by descending grevlex monomial.  Each column is scaled to be
    integral and primitive with positive pivot coefficient.
    """
    by_deg: Dict[int, List] = {}
    for col in columns:
        by_deg.setdefault(_vector_degree(col, twists), []).append(col)
    done: List[Tuple[int, Tuple[Polynomial, ...]]] = []
    nv = NVARS
    for n in sorted(by_deg):
        idx = _coord_index(n, twists)
        rev = {v: k for k, v in idx.items()}
        low = EchelonSpace()
        for dcol, col in done:
            for mono in monomials_of_degree(n - dcol):
                low.add(_to_coords(col, idx, mono))
        new = EchelonSpace()
        for col in by_deg[n]:
            if not new.add(low.reduce(_to_coords(col, idx))):
                raise RuntimeError("columns are not a minimal generating set")
        for row in new.basis():
            row = _primitive(row)
            parts: List[Dict] = [{} for _ in twists]
            for k, v in row.items():
                c, e = rev[k]
                parts[c][e] = v
            done.append((n, tuple(Polynomial(p, nv) for p in parts)))
    return [col for _, col in done]


# ---------------------------------------------------------------------------
# resolution


def _minimal_subset(ring: Ring, vectors: List[Dict], step_cap) -> List[int]:
    raw = run_buchberger(ring, vectors, step_cap=step_cap)
    return sorted(raw.kept)


class SubmoduleBasis:
    """Groebner basis of a submodule of a graded free module, used for
    membership tests (e.g. Koszul relations inside Syz(J_f))."""

    def __init__(self, columns: Sequence[Sequence[Polynomial]], twists, step_cap=DEFAULT_STEP_CAP):
        nv = NVARS
        for col in columns:
            for p in col:
                if p:
                    nv = p.nvars
        self.twists = tuple(twists)
        self.ring = Ring(grevlex(nv), self.twists)
        raw = run_buchberger(self.ring, [self.ring.from_vector(c) for c in columns],
                             step_cap=step_cap, product_criterion=False)
        self.basis = _Basis(self.ring, False)
        for v in reduced_basis(raw):
            self.basis.append(v)

    def normal_form(self, vec: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
        rem, _ = self.basis.reduce(self.ring.from_vector(vec))
        return tuple(self.ring.to_vector(rem, len(self.twists)))

    def contains(self, vec: Sequence[Polynomial]) -> bool:
        return not any(self.normal_form(vec))

    def hilbert_function(self, n: int) -> int:
        """dim of the submodule in degree n."""
        total = 0
        for c, w in enumerate(self.twists):
            lead = [e for e, cc in zip(self.basis.lexps, self.basis.lcomp) if cc == c]
            for mono in monomials_of_degree(n - w, self.ring.nvars):
                if any(all(a <= b for a, b in zip(le, mono)) for le in lead):
                    total += 1
        return total


def minimal_free_resolution(I: Ideal, max_length: int = 4, *, step_cap: int = DEFAULT_STEP_CAP,
                            keep_generators: bool = True) -> Tuple[FreeResolution, BettiTable]:
    """Minimal graded free resolution of a homogeneous ideal.

    With ``keep_generators`` the minimal generators of I are the given ones
    that survive a graded pass, in their original order (so the Jacobian
    ideal keeps the partials in the order d0, d1, d2); later levels are
    canonicalized.
    """
    if not I.homogeneous:
        raise ValueError("resolution needs a homogeneous ideal")
    gens = list(I.generators)
    if not gens:
        raise ValueError("zero ideal")
    nv = I.nvars
    ring = Ring(grevlex(nv), (0,))
    kept = _minimal_subset(ring, [ring.from_poly(g) for g in gens], step_cap)
    twists = (0,)
    # stable by degree: the tracked pass numbers coordinates in processing order
    cols = sorted([(gens[k],) for k in kept], key=lambda c: _vector_degree(c, twists))
    maps = [GradedMatrix.from_columns(cols, twists, [_vector_degree(c, twists) for c in cols])]
    if not keep_generators:
        cols = canonical_columns(cols, twists)
        maps[0] = GradedMatrix.from_columns(cols, twists, [_vector_degree(c, twists) for c in cols])
    while True:
        if len(maps) > max_length:
            raise RuntimeError("resolution longer than %d" % max_length)
        ring = Ring(grevlex(nv), twists)
        vecs = [ring.from_vector(c) for c in cols]
        raw = run_buchberger(ring, vecs, track=True, minimal_coords=True, step_cap=step_cap,
                             product_criterion=False)
        if len(raw.kept) != len(cols):
            raise RuntimeError("resolution columns are not minimal")
        new_twists = tuple(_vector_degree(c, twists) for c in cols)
        cring = ring.with_twists(new_twists)
        cands = _schreyer(raw, cring)
        if not cands:
            break
        cands.sort(key=lambda v: (cring.vec_degree(v), -max(v)))
        keep = _minimal_subset(cring, cands, step_cap)
        chosen = [tuple(cring.to_vector(cands[k], len(cols))) for k in keep]
        cols = canonical_columns(chosen, new_twists)
        twists = new_twists
        maps.append(GradedMatrix.from_columns(cols, twists, [_vector_degree(c, twists) for c in cols]))
    res = FreeResolution(maps)
    if not res.check_products():
        raise RuntimeError("consecutive differentials do not compose to zero")
    if not res.is_minimal():
        raise RuntimeError("resolution has unit entries")
    res.exact = True
    return res, res.betti()


@lru_cache(maxsize=64)
def jacobian_resolution(f: Polynomial, step_cap: int = DEFAULT_STEP_CAP) -> FreeResolution:
    """Minimal resolution of J_f with the partials kept as generators."""
    J = Ideal(list(gradient(f)), f.nvars)
    if len(J.generators) != f.nvars:
        raise ValueError("a partial derivative vanishes (cone)")
    res, _ = minimal_free_resolution(J, step_cap=step_cap)
    if res.maps[0].ncols != f.nvars:
        raise ValueError("partials are linearly dependent (cone)")
    return res


def first_syzygy_matrix(f: Polynomial, step_cap: int = DEFAULT_STEP_CAP) -> GradedMatrix:
    """M_f: 3 x k matrix whose columns minimally generate Syz(J_f), column
    twists being the syzygy degrees (row twists 0)."""
    res = jacobian_resolution(f, step_cap)
    if len(res.maps) < 2:
        raise ValueError("Jacobian ideal has no syzygies")
    m = res.maps[1]
    shift = f.degree() - 1
    return GradedMatrix(m.rows, [0] * m.nrows, [w - shift for w in m.col_twists])


def second_syzygy_matrix(f: Polynomial, step_cap: int = DEFAULT_STEP_CAP) -> Optional[GradedMatrix]:
    res = jacobian_resolution(f, step_cap)
    if len(res.maps) < 3:
        return None
    shift = f.degree() - 1
    m = res.maps[2]
    return GradedMatrix(m.rows, [w - shift for w in m.row_twists], [w - shift for w in m.col_twists])


def syzygy_matrix_in_degree(f: Polynomial, n: int) -> RationalMatrix:
    """Coefficient matrix of (a, b, c) -> a f_0 + b f_1 + c f_2 on R_n^3."""
    d = f.degree()
    partials = gradient(f)
    src = monomials_of_degree(n)
    tgt = {e: i for i, e in enumerate(monomials_of_degree(n + d - 1))}
    cols = []
    for p in partials:
        for m in src:
            col = {}
            for e, c in p.terms.items():
                col[tgt[tuple(a + b for a, b in zip(e, m))]] = c
            cols.append(col)
    rows = [[mpq(0)] * len(cols) for _ in tgt]
    for j, col in enumerate(cols):
        for i, c in col.items():
            rows[i][j] = c
    return RationalMatrix(rows, len(cols))


def syzygies_in_degree(f: Polynomial, n: int) -> List[Tuple[Polynomial, ...]]:
    """Basis of Syz(J_f)_n by exact nullspace computation."""
    src = monomials_of_degree(n)
    k = len(src)
    out = []
    for v in nullspace_basis(syzygy_matrix_in_degree(f, n)):
        parts = []
        for i in range(NVARS):
            parts.append(Polynomial({m: c for m, c in zip(src, v[i * k:(i + 1) * k]) if c}))
        out.append(tuple(parts))
    return out


def _normalize_vector(vec: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
    n = None
    for p in vec:
        if p:
            n = p.degree()
            break
    if n is None:
        return tuple(vec)
    idx = _coord_index(n, (0,) * len(vec))
    coords = _primitive(_to_coords(vec, idx))
    rev = {v: k for k, v in idx.items()}
    parts: List[Dict] = [{} for _ in vec]
    for k, v in coords.items():
        c, e = rev[k]
        parts[c][e] = v
    return tuple(Polynomial(p) for p in parts)


def mdr(f: Polynomial) -> Tuple[int, Tuple[Polynomial, ...]]:
    """Minimal degree of a Jacobian relation and a certificate syzygy.

    Searches n = 0, 1, ... by exact nullspace of the multiplication map
    R_n^3 -> R_{n+d-1}; the Koszul relations guarantee success by n = d-1.
    """
    d = f.degree()
    if d < 1 or not f.is_homogeneous():
        raise ValueError("mdr needs a homogeneous polynomial of positive degree")
    for n in range(d):
        basis = syzygies_in_degree(f, n)
        if basis:
            return n, _normalize_vector(basis[0])
    raise RuntimeError("no syzygy up to degree d-1; impossible for a nonzero f")
