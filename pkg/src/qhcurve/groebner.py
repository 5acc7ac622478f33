"""Buchberger's algorithm for ideals and submodules of free modules.

Internally a term (monomial times basis vector e_c) is encoded as a single
integer whose numeric order *is* the monomial order: the exponent vector is
mapped by a linear form (so multiplying terms adds their codes) and the
component occupies the low digits (term-over-position, e_0 > e_1 > ...).
Vectors and polynomials are then plain ``{code: mpq}`` dicts and the lead
term of a vector is just ``max(vec)``.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .linalg import EchelonSpace
from .poly import NVARS, Polynomial, grevlex_key

log = logging.getLogger(__name__)

DIGIT = 1 << 12          # exponents and degrees stay below this
COMP = 1 << 8            # maximal free module rank
DEFAULT_STEP_CAP = 500_000


class GroebnerLimitError(RuntimeError):
    """The configured S-pair budget ran out before the basis was complete."""


class MonomialOrder:
    """Global monomial order on k[x0..x_{n-1}] with a linear integer code.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"elim"``; for ``"elim"`` the
    variables listed in ``block`` are eliminated (grevlex inside each block).
    """

    def __init__(self, kind: str = "grevlex", nvars: int = NVARS, block: Sequence[int] = ()):
        if kind not in ("grevlex", "lex", "elim"):
            raise ValueError("unknown monomial order %r" % kind)
        self.kind = kind
        self.nvars = nvars
        self.block = tuple(sorted(block)) if kind == "elim" else ()
        if kind == "elim":
            rest = tuple(i for i in range(nvars) if i not in self.block)
            self._blocks = (self.block, rest)
        else:
            self._blocks = (tuple(range(nvars)),)
        self._weights = self._make_weights()
        self._decode_cache: Dict[int, Tuple[int, ...]] = {}

    def _make_weights(self):
        w = [0] * self.nvars
        if self.kind == "lex":
            for i in range(self.nvars):
                w[i] = DIGIT ** (self.nvars - 1 - i)
            return w
        scale = 1
        for blk in reversed(self._blocks):
            m = len(blk)
            for pos, v in enumerate(blk):
                if pos == 0:
                    w[v] = DIGIT ** (m - 1) * scale
                else:
                    w[v] = (DIGIT ** (m - 1) - DIGIT ** (pos - 1)) * scale
            scale *= DIGIT ** m
        return w

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (
            self.kind, self.nvars, self.block) == (other.kind, other.nvars, other.block)

    def __hash__(self):
        return hash((self.kind, self.nvars, self.block))

    def __repr__(self):
        if self.kind == "elim":
            return "MonomialOrder('elim', %d, block=%r)" % (self.nvars, self.block)
        return "MonomialOrder(%r, %d)" % (self.kind, self.nvars)

    def encode(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self._weights, exps))

    def decode(self, code: int) -> Tuple[int, ...]:
        hit = self._decode_cache.get(code)
        if hit is not None:
            return hit
        e = [0] * self.nvars
        if self.kind == "lex":
            v = code
            for i in range(self.nvars - 1, -1, -1):
                v, e[i] = divmod(v, DIGIT)
        else:
            v = code
            parts = []
            for blk in reversed(self._blocks):
                v, low = divmod(v, DIGIT ** len(blk))
                parts.append((blk, low))
            for blk, val in parts:
                _decode_grevlex_block(val, blk, e)
        out = tuple(e)
        self._decode_cache[code] = out
        return out

    def key(self, exps: Sequence[int]) -> int:
        """Sort key: larger means larger monomial."""
        return self.encode(exps)


def _decode_grevlex_block(val: int, blk: Sequence[int], e: List[int]):
    m = len(blk)
    if m == 0:
        return
    if m == 1:
        e[blk[0]] = val
        return
    top = DIGIT ** (m - 1)
    deg = -((-val) // top)
    q = deg * top - val
    s = 0
    for pos in range(1, m):
        q, d = divmod(q, DIGIT)
        e[blk[pos]] = d
        s += d
    e[blk[0]] = deg - s


def grevlex(nvars: int = NVARS) -> MonomialOrder:
    return MonomialOrder("grevlex", nvars)


def lex(nvars: int = NVARS) -> MonomialOrder:
    return MonomialOrder("lex", nvars)


def elimination(nvars: int, block: Sequence[int]) -> MonomialOrder:
    return MonomialOrder("elim", nvars, block)


# ---------------------------------------------------------------------------
# encoded ring / module context


class Ring:
    """Encoding context: a monomial order plus degree twists per component."""

    def __init__(self, order: MonomialOrder, twists: Sequence[int] = (0,)):
        self.order = order
        self.nvars = order.nvars
        self.twists = tuple(twists)
        if len(self.twists) > COMP:
            raise ValueError("free module rank too large")
        self._term_cache: Dict[int, Tuple[int, Tuple[int, ...]]] = {}

    def with_twists(self, twists: Sequence[int]) -> "Ring":
        r = Ring(self.order, twists)
        r._term_cache = self._term_cache
        return r

    # -- codes --
    def term(self, exps: Sequence[int], comp: int = 0) -> int:
        return self.order.encode(exps) * COMP + (COMP - 1 - comp)

    def mono(self, exps: Sequence[int]) -> int:
        """Code shift for multiplying by the monomial ``exps``."""
        return self.order.encode(exps) * COMP

    def split(self, code: int) -> Tuple[int, Tuple[int, ...]]:
        hit = self._term_cache.get(code)
        if hit is None:
            q, r = divmod(code, COMP)
            hit = (COMP - 1 - r, self.order.decode(q))
            self._term_cache[code] = hit
        return hit

    def degree(self, code: int) -> int:
        c, e = self.split(code)
        return sum(e) + self.twists[c]

    # -- conversions --
    def from_poly(self, p: Polynomial, comp: int = 0) -> Dict[int, object]:
        if p and p.degree() >= DIGIT:
            raise GroebnerLimitError("degree %d exceeds the monomial encoding" % p.degree())
        enc = self.order.encode
        off = COMP - 1 - comp
        return {enc(e) * COMP + off: c for e, c in p.terms.items()}

    def from_vector(self, entries: Sequence[Polynomial]) -> Dict[int, object]:
        out = {}
        for i, p in enumerate(entries):
            out.update(self.from_poly(p, i))
        return out

    def to_poly(self, vec: Dict[int, object]) -> Polynomial:
        terms = {}
        for k, c in vec.items():
            comp, e = self.split(k)
            if comp:
                raise ValueError("vector has components beyond 0")
            terms[e] = c
        return Polynomial._raw(terms, self.nvars)

    def to_vector(self, vec: Dict[int, object], rank: int) -> List[Polynomial]:
        parts: List[Dict] = [{} for _ in range(rank)]
        for k, c in vec.items():
            comp, e = self.split(k)
            parts[comp][e] = c
        return [Polynomial._raw(p, self.nvars) for p in parts]

    def vec_degree(self, vec) -> int:
        return max(self.degree(k) for k in vec)


ONE_OFFSET = COMP - 1   # low digits of a ring element (component 0)


def _axpy(acc: Dict[int, object], c, vec: Dict[int, object], shift: int):
    """acc += c * (vec shifted by ``shift``)."""
    for k, v in vec.items():
        t = k + shift
        x = acc.get(t)
        if x is None:
            acc[t] = c * v
        else:
            x += c * v
            if x:
                acc[t] = x
            else:
                del acc[t]


def _mul_ring_vec(acc: Dict[int, object], ringpoly: Dict[int, object], vec: Dict[int, object]):
    """acc += ringpoly * vec, ``ringpoly`` a component-0 element."""
    for k1, c1 in ringpoly.items():
        _axpy(acc, c1, vec, k1 - ONE_OFFSET)


def _scale(vec, c):
    return {k: v * c for k, v in vec.items()}


# ---------------------------------------------------------------------------
# the basis under construction


class _Basis:
    def __init__(self, ring: Ring, track: bool):
        self.ring = ring
        self.elems: List[Dict[int, object]] = []
        self.lts: List[int] = []
        self.lcomp: List[int] = []
        self.lexps: List[Tuple[int, ...]] = []
        self.reps: List[Dict[int, object]] = [] if track else None
        self._div: Dict[int, int] = {}
        self._nodiv: Dict[int, int] = {}

    def __len__(self):
        return len(self.elems)

    def append(self, vec, rep=None):
        lt = max(vec)
        lc = vec[lt]
        if lc != 1:
            inv = 1 / lc
            vec = _scale(vec, inv)
            if rep is not None:
                rep = _scale(rep, inv)
        comp, e = self.ring.split(lt)
        self.elems.append(vec)
        self.lts.append(lt)
        self.lcomp.append(comp)
        self.lexps.append(e)
        if self.reps is not None:
            self.reps.append(rep)
        return len(self.elems) - 1

    def divisor(self, code: int) -> Optional[int]:
        j = self._div.get(code)
        if j is not None:
            return j
        start = self._nodiv.get(code, 0)
        n = len(self.elems)
        if start >= n:
            return None
        comp, e = self.ring.split(code)
        lcomp, lexps = self.lcomp, self.lexps
        for j in range(start, n):
            if lcomp[j] == comp:
                le = lexps[j]
                for a, b in zip(le, e):
                    if a > b:
                        break
                else:
                    self._div[code] = j
                    return j
        self._nodiv[code] = n
        return None

    def reduce(self, vec, rep=None, quotients=None, full=True):
        """Normal form of ``vec``.  Optionally carries a representation
        ``rep`` along (``rep - sum q_k reps[k]``) or collects quotients as
        ``{basis index: ring element}``."""
        h = dict(vec)
        if rep is not None:
            rep = dict(rep)
        heap = [-k for k in h]
        heapq.heapify(heap)
        rem = {}
        elems, lts = self.elems, self.lts
        while heap:
            k = -heapq.heappop(heap)
            c = h.get(k)
            if c is None:
                continue
            j = self.divisor(k)
            if j is None:
                if not full:
                    break
                rem[k] = c
                del h[k]
                continue
            lt = lts[j]
            shift = k - lt
            del h[k]
            for gk, gc in elems[j].items():
                if gk == lt:
                    continue
                t = gk + shift
                x = h.get(t)
                if x is None:
                    h[t] = -c * gc
                    heapq.heappush(heap, -t)
                else:
                    x -= c * gc
                    if x:
                        h[t] = x
                    else:
                        del h[t]
            if rep is not None:
                _axpy(rep, -c, self.reps[j], shift)
            if quotients is not None:
                q = quotients.setdefault(j, {})
                key = shift + ONE_OFFSET
                x = q.get(key, 0) + c
                if x:
                    q[key] = x
                else:
                    del q[key]
        if not full:
            rem = h
        else:
            rem.update(h)
        return rem, rep


@dataclass
class RawBasis:
    """Output of :func:`run_buchberger`: the (non-reduced) basis with
    optional representations, plus bookkeeping about the inputs."""

    ring: Ring
    elems: List[Dict[int, object]]
    lts: List[int]
    reps: Optional[List[Dict[int, object]]]
    kept: List[int] = field(default_factory=list)        # inputs that were new
    input_syzygies: List[Dict[int, object]] = field(default_factory=list)
    steps: int = 0
    _basis: Optional[_Basis] = None

    def reducer(self) -> _Basis:
        return self._basis


def run_buchberger(ring: Ring, gens: Sequence[Dict[int, object]], *, track: bool = False,
                   minimal_coords: bool = False, step_cap: int = DEFAULT_STEP_CAP,
                   product_criterion: Optional[bool] = None) -> RawBasis:
    """Buchberger with normal selection strategy and Buchberger's criteria.

    Events (S-pairs and input generators) are processed by increasing degree;
    pairs before generators of the same degree, pairs by smallest lcm.  For
    homogeneous input this is the degree-by-degree algorithm, and an input
    that reduces to zero lies in the span of earlier material, so the inputs
    that survive (``kept``) are a minimal generating set.

    With ``track`` every basis element carries its representation in terms
    of the inputs; with ``minimal_coords`` only surviving inputs become
    coordinates.  Without ``minimal_coords`` each input that reduces to zero
    yields a relation, returned in ``input_syzygies``.
    """
    basis = _Basis(ring, track)
    if product_criterion is None:
        product_criterion = len(ring.twists) == 1
    events = []
    for idx, g in enumerate(gens):
        if g:
            heapq.heappush(events, (ring.vec_degree(g), 1, idx, 0, 0))
    pending = set()
    kept: List[int] = []
    input_syz = []
    steps = 0
    coord_of_input: Dict[int, int] = {}

    def add(vec, rep):
        k = basis.append(vec, rep)
        ck, ek = basis.lcomp[k], basis.lexps[k]
        for i in range(k):
            if basis.lcomp[i] != ck:
                continue
            ei = basis.lexps[i]
            lcm = tuple(a if a > b else b for a, b in zip(ei, ek))
            if sum(lcm) >= DIGIT:
                raise GroebnerLimitError("S-pair degree exceeds the monomial encoding")
            deg = sum(lcm) + ring.twists[ck]
            heapq.heappush(events, (deg, 0, ring.term(lcm, ck), i, k))
            pending.add((i, k))

    while events:
        deg, kind, a, i, j = heapq.heappop(events)
        if kind == 1:
            g = gens[a]
            rep = None
            if track:
                coord = len(kept) if minimal_coords else a
                rep = {ring.term((0,) * ring.nvars, coord): mpq(1)}
            nf, rep = basis.reduce(g, rep)
            if nf:
                coord_of_input[a] = len(kept)
                kept.append(a)
                add(nf, rep)
            elif track and not minimal_coords:
                input_syz.append(rep)
            continue
        pending.discard((i, j))
        lcm_code = a
        ei, ej = basis.lexps[i], basis.lexps[j]
        _, lcm = ring.split(lcm_code)
        if product_criterion and all(x == 0 or y == 0 for x, y in zip(ei, ej)):
            continue
        if _chain_criterion(basis, i, j, lcm, pending):
            continue
        steps += 1
        if steps > step_cap:
            raise GroebnerLimitError("S-pair budget of %d exceeded" % step_cap)
        si = lcm_code - basis.lts[i]
        sj = lcm_code - basis.lts[j]
        s = {}
        _axpy(s, 1, basis.elems[i], si)
        _axpy(s, -1, basis.elems[j], sj)
        rep = None
        if track:
            rep = {}
            _axpy(rep, 1, basis.reps[i], si)
            _axpy(rep, -1, basis.reps[j], sj)
        nf, rep = basis.reduce(s, rep)
        if nf:
            add(nf, rep)
    return RawBasis(ring, basis.elems, basis.lts, basis.reps, kept, input_syz, steps, basis)


def _chain_criterion(basis: _Basis, i: int, j: int, lcm, pending) -> bool:
    comp = basis.lcomp[i]
    for k in range(len(basis.elems)):
        if k == i or k == j or basis.lcomp[k] != comp:
            continue
        ek = basis.lexps[k]
        if all(a <= b for a, b in zip(ek, lcm)):
            p1 = (i, k) if i < k else (k, i)
            p2 = (j, k) if j < k else (k, j)
            if p1 not in pending and p2 not in pending:
                return True
    return False


def reduced_basis(raw: RawBasis) -> List[Dict[int, object]]:
    """Minimalize and interreduce a raw basis; sorted by ascending lead term."""
    n = len(raw.elems)
    b = raw.reducer()
    keep = []
    for i in range(n):
        redundant = False
        for j in range(n):
            if j == i or b.lcomp[j] != b.lcomp[i]:
                continue
            if all(x <= y for x, y in zip(b.lexps[j], b.lexps[i])):
                if b.lexps[j] != b.lexps[i] or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(i)
    small = _Basis(raw.ring, False)
    for i in sorted(keep, key=lambda i: raw.lts[i]):
        small.append(raw.elems[i])
    out = []
    for idx, vec in enumerate(small.elems):
        lt = small.lts[idx]
        tail = {k: v for k, v in vec.items() if k != lt}
        others = _Basis(raw.ring, False)
        for j, other in enumerate(small.elems):
            if j != idx:
                others.append(other)
        rem, _ = others.reduce(tail)
        rem[lt] = mpq(1)
        out.append(rem)
    return out


# ---------------------------------------------------------------------------
# public ideal-level API


class Ideal:
    """Ideal of k[x0..x_{n-1}] given by nonzero generators."""

    def __init__(self, generators: Sequence[Polynomial], nvars: Optional[int] = None,
                 homogeneous: Optional[bool] = None):
        gens = [g for g in generators if g]
        if nvars is None:
            nvars = generators[0].nvars if generators else NVARS
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generators live in different rings")
        self.generators = tuple(gens)
        self.nvars = nvars
        actual = all(g.is_homogeneous() for g in gens)
        if homogeneous and not actual:
            raise ValueError("ideal was claimed homogeneous but is not")
        self.homogeneous = actual

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + other.generators, self.nvars)

    def is_zero(self) -> bool:
        return not self.generators


class GroebnerBasis:
    """Reduced Groebner basis with its order and staircase."""

    def __init__(self, ideal: Ideal, order: MonomialOrder, basis: Sequence[Polynomial],
                 ring: Ring, raw: Optional[RawBasis] = None):
        self.ideal = ideal
        self.order = order
        self.basis = tuple(basis)
        self.ring = ring
        self.staircase = tuple(p.leading(order.key)[1] for p in self.basis)
        self._reducer = _Basis(ring, False)
        for p in self.basis:
            self._reducer.append(ring.from_poly(p))
        self.raw = raw

    @property
    def nvars(self):
        return self.order.nvars

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def is_unit(self) -> bool:
        return any(not any(e) for e in self.staircase)

    def normal_form(self, f: Polynomial) -> Polynomial:
        rem, _ = self._reducer.reduce(self.ring.from_poly(f))
        return self.ring.to_poly(rem)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def is_standard(self, exps) -> bool:
        for s in self.staircase:
            if all(a <= b for a, b in zip(s, exps)):
                return False
        return True

    def max_staircase_degree(self) -> int:
        return max((sum(e) for e in self.staircase), default=0)


def buchberger(ideal: Ideal, order: Optional[MonomialOrder] = None, *,
               step_cap: int = DEFAULT_STEP_CAP) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` (grevlex by default)."""
    order = order or grevlex(ideal.nvars)
    if order.nvars != ideal.nvars:
        raise ValueError("order and ideal have different variable counts")
    ring = Ring(order)
    gens = [ring.from_poly(g) for g in ideal.generators]
    raw = run_buchberger(ring, gens, step_cap=step_cap)
    red = reduced_basis(raw)
    return GroebnerBasis(ideal, order, [ring.to_poly(v) for v in red], ring, raw)


def as_basis(I, order=None, step_cap=DEFAULT_STEP_CAP) -> GroebnerBasis:
    if isinstance(I, GroebnerBasis):
        if order is None or I.order == order:
            return I
        I = I.ideal
    return buchberger(I, order, step_cap=step_cap)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    cf, ef = f.leading(order.key)
    cg, eg = g.leading(order.key)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    return (f.mul_monomial(tuple(a - b for a, b in zip(lcm, ef)), 1 / cf)
            - g.mul_monomial(tuple(a - b for a, b in zip(lcm, eg)), 1 / cg))


# -- Hilbert function and dimension -------------------------------------------


def _count_standard(G: GroebnerBasis, t: int) -> int:
    stair = [s for s in G.staircase if sum(s) <= t]
    n = G.nvars
    count = 0

    def rec(prefix, left, k):
        nonlocal count
        if k == 1:
            e = prefix + (left,)
            for s in stair:
                if all(a <= b for a, b in zip(s, e)):
                    return
            count += 1
            return
        for a in range(left, -1, -1):
            rec(prefix + (a,), left - a, k - 1)

    if t < 0:
        return 0
    rec((), t, n)
    return count


def hilbert_function(I, t: int) -> int:
    """dim_Q (R/I)_t for a homogeneous ideal (or its Groebner basis)."""
    G = as_basis(I)
    if not G.ideal.homogeneous:
        raise ValueError("Hilbert function needs a homogeneous ideal")
    return _count_standard(G, t)


def krull_dimension(I) -> int:
    """Krull dimension of R/I from the lead-term ideal; -1 for the unit ideal."""
    G = as_basis(I)
    if G.is_unit():
        return -1
    n = G.nvars
    best = 0
    for mask in range(1 << n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        inside = [i for i in range(n) if mask >> i & 1]
        ok = True
        for s in G.staircase:
            if all(s[i] == 0 for i in range(n) if i not in inside):
                ok = False
                break
        if ok:
            best = size
    return best


class PositiveDimensionalError(ValueError):
    pass


def stable_degree(I, window: Optional[int] = None) -> int:
    """Degree of the projective scheme of a homogeneous ideal with finite
    zero set: the eventual constant value of its Hilbert function.

    The value is accepted once ``window`` consecutive degrees beyond the top
    staircase degree agree (default ``max(3, d)``, d the largest generator
    degree) and Gotzmann persistence applies (value <= degree).
    """
    G = as_basis(I)
    if krull_dimension(G) > 1:
        raise PositiveDimensionalError("positive-dimensional scheme")
    if G.is_unit():
        return 0
    d = max((g.degree() for g in G.ideal.generators), default=1)
    window = window or max(3, d)
    top = G.max_staircase_degree()
    t = top
    run_val, run_len = None, 0
    limit = 3 * top + 2 * window + 20
    while t <= limit:
        v = _count_standard(G, t)
        if v == run_val:
            run_len += 1
        else:
            run_val, run_len = v, 1
        if run_len >= window and v <= t:
            return v
        t += 1
    raise PositiveDimensionalError("Hilbert function did not stabilize; positive-dimensional scheme")


def affine_vs_dim(I) -> int:
    """dim_Q k[x]/I for a zero-dimensional affine ideal (count standard monomials)."""
    G = as_basis(I)
    if G.is_unit():
        return 0
    n = G.nvars
    bounds = []
    for i in range(n):
        pure = [s[i] for s in G.staircase if all(s[j] == 0 for j in range(n) if j != i)]
        if not pure:
            raise PositiveDimensionalError("non-isolated critical locus (infinite-dimensional quotient)")
        bounds.append(min(pure))
    count = 0

    def rec(prefix, i):
        nonlocal count
        if i == n:
            if G.is_standard(prefix):
                count += 1
            return
        for a in range(bounds[i]):
            rec(prefix + (a,), i + 1)

    rec((), 0)
    return count


# -- ideal operations ----------------------------------------------------------


def _extend(I: Ideal, extra: int) -> List[Polynomial]:
    return [g.extend(I.nvars + extra) for g in I.generators]


def eliminate(I: Ideal, keep: Sequence[int], *, step_cap=DEFAULT_STEP_CAP) -> Ideal:
    """I intersected with Q[keep] via a block elimination order."""
    n = I.nvars
    block = [i for i in range(n) if i not in set(keep)]
    if not block:
        return I
    G = buchberger(I, elimination(n, block), step_cap=step_cap)
    gens = [g for g in G.basis if all(e[i] == 0 for e in g.terms for i in block)]
    return Ideal(gens, n)


def intersect(I: Ideal, J: Ideal, *, step_cap=DEFAULT_STEP_CAP) -> Ideal:
    """I cap J as the t-free part of t*I + (1-t)*J."""
    n = I.nvars
    t = Polynomial.var(n, n + 1)
    one_minus_t = Polynomial.constant(1, n + 1) - t
    gens = [t * g for g in _extend(I, 1)] + [one_minus_t * g for g in _extend(J, 1)]
    big = Ideal(gens, n + 1)
    E = eliminate(big, list(range(n)), step_cap=step_cap)
    return Ideal([g.restrict(n) for g in E.generators], n)


def ideal_quotient(I: Ideal, h, *, step_cap=DEFAULT_STEP_CAP) -> Ideal:
    """I : h for a polynomial h, or I : J for an ideal J."""
    if isinstance(h, Ideal):
        parts = [ideal_quotient(I, g, step_cap=step_cap) for g in h.generators]
        out = parts[0]
        for p in parts[1:]:
            out = intersect(out, p, step_cap=step_cap)
        return out
    if not h:
        raise ValueError("quotient by the zero polynomial")
    cap = intersect(I, Ideal([h], I.nvars), step_cap=step_cap)
    return Ideal([g.divide_exact(h) for g in cap.generators], I.nvars)


def same_ideal(I, J) -> bool:
    return as_basis(I).basis == as_basis(J).basis


def saturate(I: Ideal, h: Polynomial, *, method: str = "elimination", max_rounds: int = 64,
             step_cap=DEFAULT_STEP_CAP) -> Ideal:
    """I : h^infinity.

    ``method="elimination"`` computes (I + (1 - t*h)) cap Q[x] in one pass;
    ``method="quotients"`` iterates I : h until the ideal stops growing.
    """
    if method == "elimination":
        n = I.nvars
        t = Polynomial.var(n, n + 1)
        gens = _extend(I, 1) + [Polynomial.constant(1, n + 1) - t * h.extend(n + 1)]
        E = eliminate(Ideal(gens, n + 1), list(range(n)), step_cap=step_cap)
        return Ideal([g.restrict(n) for g in E.generators], n)
    if method != "quotients":
        raise ValueError("unknown saturation method %r" % method)
    cur = buchberger(I, step_cap=step_cap)
    for _ in range(max_rounds):
        nxt = buchberger(ideal_quotient(Ideal(cur.basis, I.nvars), h, step_cap=step_cap),
                         step_cap=step_cap)
        if nxt.basis == cur.basis:
            return Ideal(cur.basis, I.nvars)
        cur = nxt
    raise GroebnerLimitError("saturation did not stabilize in %d rounds" % max_rounds)


def saturate_irrelevant(I: Ideal, **kw) -> Ideal:
    """Saturation by (x0, x1, x2): intersection of the saturations by each variable."""
    parts = [saturate(I, Polynomial.var(i, I.nvars), **kw) for i in range(I.nvars)]
    out = parts[0]
    for p in parts[1:]:
        out = intersect(out, p)
    return out


def radical_membership(h: Polynomial, I: Ideal, *, step_cap=DEFAULT_STEP_CAP) -> bool:
    """h in sqrt(I), decided by 1 in I + (1 - t*h) (Rabinowitsch)."""
    if not h:
        raise ValueError("radical membership of the zero polynomial")
    n = I.nvars
    t = Polynomial.var(n, n + 1)
    gens = _extend(I, 1) + [Polynomial.constant(1, n + 1) - t * h.extend(n + 1)]
    return buchberger(Ideal(gens, n + 1), step_cap=step_cap).is_unit()


def univariate_eliminant(G: GroebnerBasis, var: int) -> Polynomial:
    """Monic generator of I cap Q[x_var] for a zero-dimensional ideal, found as
    the first linear dependence among the normal forms of 1, x, x^2, ..."""
    n = G.nvars
    if G.is_unit():
        return Polynomial.constant(1, n)
    for i in range(n):
        if not any(s[i] and not any(s[j] for j in range(n) if j != i) for s in G.staircase):
            raise PositiveDimensionalError("no univariate eliminant: ideal is not zero-dimensional")
    x = Polynomial.var(var, n)
    ech = EchelonSpace()
    index: Dict[Tuple[int, ...], int] = {}
    combos: Dict[int, Dict[int, object]] = {}
    cur = G.normal_form(Polynomial.constant(1, n))
    k = 0
    while True:
        vec = {}
        for e, c in cur.terms.items():
            if e not in index:
                index[e] = len(index)
            vec[index[e]] = c
        # track combination by appending a unit coordinate far to the right
        tagged = dict(vec)
        tagged[10 ** 9 + k] = mpq(1)
        red = ech.reduce(tagged)
        if not any(c < 10 ** 9 for c in red):
            coeffs = {c - 10 ** 9: v for c, v in red.items()}
            top = coeffs[k]
            terms = {}
            for p, v in coeffs.items():
                e = [0] * n
                e[var] = p
                terms[tuple(e)] = v / top
            return Polynomial(terms, n)
        ech.add(tagged)
        cur = G.normal_form(cur * x)
        k += 1
