"""Plane curve analysis: validation, free / nearly free / 3-syzygy
classification, the rank criterion for quasi-homogeneity and its local
Milnor/Tjurina oracle, and the structural identities of syzygy matrices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .config import AnalysisConfig
from .groebner import (Ideal, PositiveDimensionalError, buchberger, hilbert_function,
                       krull_dimension, radical_membership, stable_degree)
from .linalg import RationalMatrix, nullspace_basis
from .local import NonIsolatedError, local_length, to_local_ring
from .points import ProjectivePoint, dehomogenize_at
from .poly import NVARS, Polynomial, gradient
from .solve import rational_points
from .syzygy import (BettiTable, GradedMatrix, SubmoduleBasis, first_syzygy_matrix,
                     jacobian_resolution, mdr, second_syzygy_matrix, syzygies_in_degree)

log = logging.getLogger(__name__)

FREE, NEARLY_FREE, THREE_SYZYGY, OTHER = "Free", "NearlyFree", "ThreeSyzygy", "Other"
ALL_QH, EXISTS_NON_QH = "AllQH", "ExistsNonQH"


class CurveRejected(ValueError):
    """Input refused by the validation gate."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


class HypothesisError(ValueError):
    code = "hypotheses-not-met"


class NotSingularError(ValueError):
    code = "not-singular"


class ShapeError(ValueError):
    code = "shape-not-met"


class InternalCheckError(RuntimeError):
    """A proven identity failed: this is a bug, not bad input."""

    code = "internal"


# ---------------------------------------------------------------------------
# input gate


@dataclass(frozen=True)
class CurveInput:
    f: Polynomial
    degree: int
    label: Optional[str] = None
    declared_points: Tuple[ProjectivePoint, ...] = ()
    config: AnalysisConfig = field(default=AnalysisConfig(), compare=False)

    @property
    def data(self) -> "CurveData":
        return curve_data(self.f, self.config)


def validate_curve(f: Polynomial, label: Optional[str] = None,
                   declared_points: Sequence[ProjectivePoint] = (),
                   config: AnalysisConfig = AnalysisConfig()) -> CurveInput:
    """Gate: homogeneous, degree >= 3, finite Jacobian scheme, not a cone."""
    if f.nvars != NVARS:
        raise CurveRejected("bad-ring", "curve must be a polynomial in x0, x1, x2")
    if not f or not f.is_homogeneous():
        raise CurveRejected("not-homogeneous", "not homogeneous")
    d = f.degree()
    if d < 3:
        raise CurveRejected("degree", "degree must be at least 3, got %d" % d)
    data = curve_data(f, config)
    if krull_dimension(data.jacobian_gb) > 1:
        raise CurveRejected("non-isolated", "non-isolated singularities (Jacobian scheme not finite)")
    if data.mdr[0] == 0:
        raise CurveRejected("cone", "cone: mdr = 0")
    pts = tuple(sorted(set(declared_points)))
    return CurveInput(f, d, label, pts, config)


class CurveData:
    """Lazily computed invariants of one polynomial (cached per f)."""

    def __init__(self, f: Polynomial, config: AnalysisConfig):
        self.f = f
        self.d = f.degree()
        self.config = config

    @cached_property
    def jacobian(self) -> Ideal:
        return Ideal(list(gradient(self.f)))

    @cached_property
    def jacobian_gb(self):
        return buchberger(self.jacobian, step_cap=self.config.step_cap)

    @cached_property
    def tau(self) -> int:
        return stable_degree(self.jacobian_gb, self.config.plateau_window)

    @cached_property
    def mdr(self):
        return mdr(self.f)

    @cached_property
    def resolution(self):
        return jacobian_resolution(self.f, self.config.step_cap)

    @cached_property
    def syzygy_matrix(self) -> GradedMatrix:
        return first_syzygy_matrix(self.f, self.config.step_cap)

    @cached_property
    def second_matrix(self) -> Optional[GradedMatrix]:
        return second_syzygy_matrix(self.f, self.config.step_cap)

    @cached_property
    def singular_points(self) -> List[ProjectivePoint]:
        return rational_points(self.jacobian, step_cap=self.config.step_cap)

    @cached_property
    def syzygy_module(self) -> SubmoduleBasis:
        M = self.syzygy_matrix
        return SubmoduleBasis(M.columns(), M.row_twists, self.config.step_cap)


@lru_cache(maxsize=128)
def curve_data(f: Polynomial, config: AnalysisConfig = AnalysisConfig()) -> CurveData:
    return CurveData(f, config)


# ---------------------------------------------------------------------------
# classification


def dp_wall_bounds(d: int, r: int) -> Tuple[int, int, Optional[int]]:
    """(lower, upper, secondary upper) bounds on the global Tjurina number of
    a degree-d curve with mdr r; the secondary bound exists iff 2r + 1 > d."""
    if d < 3 or not 0 < r <= d - 1:
        raise ValueError("need d >= 3 and 0 < r <= d - 1")
    lower = (d - 1) * (d - r - 1)
    upper = lower + r * r
    secondary = None
    if 2 * r + 1 > d:
        secondary = d * (d - 1) // 2 - r * r + r * (d - 2)
    return lower, upper, secondary


@dataclass(frozen=True)
class CurveClassification:
    kind: str
    exponents: Tuple[int, ...]        # first syzygy degrees
    second_degrees: Tuple[int, ...]   # second syzygy degrees (same shift)
    r: int
    tau: int
    d: int
    dpwall: Tuple[int, int, Optional[int]]
    betti: BettiTable

    @property
    def label(self) -> str:
        if self.kind == FREE:
            return "Free(%d,%d)" % self.exponents
        if self.kind == NEARLY_FREE:
            return "NearlyFree(%d,%d)" % self.exponents[:2]
        if self.kind == THREE_SYZYGY:
            return "ThreeSyzygy(%d,%d,%d)" % self.exponents
        return "Other"

    def __str__(self):
        return self.label

    def criterion_hypotheses(self) -> Tuple[bool, str]:
        """Whether the rank criterion is a theorem for this curve."""
        d, r = self.d, self.r
        if self.kind == FREE:
            return (d > 2 * r, "free curve needs d > 2r (d=%d, r=%d)" % (d, r))
        if self.kind == NEARLY_FREE:
            return (d >= 2 * r, "nearly free curve needs d >= 2r (d=%d, r=%d)" % (d, r))
        if self.kind == THREE_SYZYGY:
            return (False, "3-syzygy curves are covered only conjecturally (experiment mode)")
        return (False, "curve is neither free, nearly free nor 3-syzygy")

    def to_json(self):
        lo, hi, sec = self.dpwall
        return {"kind": self.kind, "label": self.label, "exponents": list(self.exponents),
                "second_syzygy_degrees": list(self.second_degrees)}


def _kind(first: Tuple[int, ...], second: Tuple[int, ...], d: int) -> str:
    if len(first) == 2 and not second:
        return FREE
    if len(first) == 3:
        if len(second) == 1 and first[1] == first[2] and first[0] + first[1] == d:
            return NEARLY_FREE
        return THREE_SYZYGY
    return OTHER


def classify(c: CurveInput) -> CurveClassification:
    """Classify from the Betti numbers of the minimal resolution of J_f and
    cross-check against the Tjurina number and the linear-algebra mdr."""
    data = c.data
    d = c.degree
    res = data.resolution
    betti = res.betti()
    shift = d - 1
    first = tuple(j - shift for j in betti.degrees(1))
    second = tuple(j - shift for j in betti.degrees(2))
    r, _ = data.mdr
    tau = data.tau
    if min(first) != r:
        raise InternalCheckError("mdr %d disagrees with smallest syzygy degree %d" % (r, min(first)))
    top = max(j for _, j in betti.data) + 2
    for t in range(top + 1):
        if betti.hilbert_function(t) != hilbert_function(data.jacobian_gb, t):
            raise InternalCheckError("Betti table inconsistent with the Hilbert function in degree %d" % t)
    kind = _kind(first, second, d)
    wall = dp_wall_bounds(d, r)
    lower, upper, _ = wall
    if not lower <= tau <= upper:
        raise InternalCheckError("tau = %d outside [%d, %d]" % (tau, lower, upper))
    if kind == FREE and sum(first) != d - 1:
        raise InternalCheckError("free exponents do not add up to d - 1")
    if d > 2 * r and (kind == FREE) != (tau == upper):
        raise InternalCheckError("free classification and tau = %d disagree (top %d)" % (tau, upper))
    if d >= 2 * r and (kind == NEARLY_FREE) != (tau == upper - 1):
        raise InternalCheckError("nearly free classification and tau = %d disagree (top - 1 = %d)"
                                 % (tau, upper - 1))
    return CurveClassification(kind, first, second, r, tau, d, wall, betti)


# ---------------------------------------------------------------------------
# rank criterion


@dataclass
class PointRecord:
    point: ProjectivePoint
    rank: Optional[int] = None
    qh_criterion: Optional[bool] = None
    mu: Optional[int] = None
    tau: Optional[int] = None
    qh_oracle: Optional[bool] = None
    within_hypotheses: bool = True
    local_method: Optional[str] = None

    @property
    def agree(self) -> Optional[bool]:
        if self.qh_criterion is None or self.qh_oracle is None:
            return None
        return self.qh_criterion == self.qh_oracle

    def to_json(self):
        return {"point": self.point.to_json(), "rank": self.rank,
                "qh_criterion": self.qh_criterion, "mu": self.mu, "tau": self.tau,
                "qh_oracle": self.qh_oracle, "agree": self.agree,
                "within_hypotheses": self.within_hypotheses}


@dataclass
class QHReport:
    verdict: str
    entries_ideal: Ideal
    y_degree: object                    # int, or "not finite"
    non_qh_points: List[ProjectivePoint]
    within_hypotheses: bool
    note: str = ""
    table: List[PointRecord] = field(default_factory=list)

    def to_json(self):
        return {"verdict": self.verdict, "y_degree": self.y_degree,
                "non_qh_points": [p.to_json() for p in self.non_qh_points],
                "within_hypotheses": self.within_hypotheses, "note": self.note}


def _check_hypotheses(cls: CurveClassification, experiment: bool) -> bool:
    ok, why = cls.criterion_hypotheses()
    if ok:
        return True
    if cls.kind == THREE_SYZYGY and experiment:
        return False
    raise HypothesisError("criterion hypotheses not met: " + why)


def entries_ideal(c: CurveInput) -> Ideal:
    M = c.data.syzygy_matrix
    return Ideal([p for p in M.entries() if p])


def qh_criterion_global(c: CurveInput, experiment: Optional[bool] = None) -> QHReport:
    """Verdict from the zero set of the ideal of entries of M_f: empty means
    every singular point is quasi-homogeneous."""
    experiment = c.config.experiment if experiment is None else experiment
    cls = classify(c)
    within = _check_hypotheses(cls, experiment)
    E = entries_ideal(c)
    step_cap = c.config.step_cap
    all_qh = all(radical_membership(Polynomial.var(i), E, step_cap=step_cap) for i in range(NVARS))
    note = "" if within else "conjectural: outside theorem hypotheses"
    if all_qh:
        return QHReport(ALL_QH, E, 0, [], within, note)
    try:
        ydeg = stable_degree(buchberger(E, step_cap=step_cap), c.config.plateau_window)
    except PositiveDimensionalError:
        ydeg = "not finite"
    pts = rational_points(E, step_cap=step_cap)
    return QHReport(EXISTS_NON_QH, E, ydeg, pts, within, note)


def is_singular_point(c: CurveInput, p: ProjectivePoint) -> bool:
    return all(not g.evaluate(p.coords) for g in gradient(c.f))


def rank_at_point(c: CurveInput, p: ProjectivePoint) -> PointRecord:
    """Rank of M_f(p); the point is quasi-homogeneous by the criterion iff
    the rank is at least 1."""
    if not is_singular_point(c, p):
        raise NotSingularError("%s is not a singular point of C" % p)
    cls = classify(c)
    within = cls.criterion_hypotheses()[0]
    rk = c.data.syzygy_matrix.rank_at(p)
    return PointRecord(p, rank=rk, qh_criterion=rk >= 1, within_hypotheses=within)


@dataclass(frozen=True)
class LocalInvariants:
    point: ProjectivePoint
    mu: int
    tau: int
    chart: tuple
    method: str

    @property
    def quasi_homogeneous(self) -> bool:
        return self.mu == self.tau


def milnor_tjurina_local(c: CurveInput, p: ProjectivePoint, method: Optional[str] = None) -> LocalInvariants:
    """Local Milnor and Tjurina numbers at a rational singular point."""
    if not is_singular_point(c, p):
        raise NotSingularError("%s is not a singular point of C" % p)
    method = method or c.config.local_method
    chart = dehomogenize_at(c.f, p)
    g = to_local_ring(chart.local)
    g0, g1 = g.diff(0), g.diff(1)
    bound = (c.degree - 1) ** 2 + 1
    mu, used_mu = local_length([g0, g1], method, bound, step_cap=c.config.step_cap)
    tau, used_tau = local_length([g, g0, g1], method, bound, step_cap=c.config.step_cap)
    if not 0 < tau <= mu:
        raise InternalCheckError("local invariants violate 0 < tau_p <= mu_p at %s" % p)
    used = used_mu if used_mu == used_tau else "%s/%s" % (used_mu, used_tau)
    return LocalInvariants(p, mu, tau, chart.matrix, used)


def point_record(c: CurveInput, p: ProjectivePoint, oracle: bool = True) -> PointRecord:
    rec = rank_at_point(c, p)
    if oracle:
        loc = milnor_tjurina_local(c, p)
        rec.mu, rec.tau, rec.qh_oracle = loc.mu, loc.tau, loc.quasi_homogeneous
        rec.local_method = loc.method
    return rec


def points_of_interest(c: CurveInput) -> List[ProjectivePoint]:
    """Declared points together with all rational singular points."""
    pts = set(c.data.singular_points)
    for p in c.declared_points:
        if not is_singular_point(c, p):
            raise NotSingularError("declared point %s is not singular" % p)
        pts.add(p)
    return sorted(pts)


# ---------------------------------------------------------------------------
# identities


def _det2(a, b, c, d):
    return a * d - b * c


def det3(cols: Sequence[Sequence[Polynomial]]) -> Polynomial:
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = cols
    return a0 * _det2(b1, c1, b2, c2) - b0 * _det2(a1, c1, a2, c2) + c0 * _det2(a1, b1, a2, b2)


def cross(u, v) -> Tuple[Polynomial, ...]:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def signed_minors(M: GradedMatrix) -> Tuple[Polynomial, ...]:
    """(M0, -M1, M2) for a 3 x 2 matrix, M_i the minor without row i."""
    a, b = M.column(0), M.column(1)
    return cross(a, b)


def proportionality(u: Sequence[Polynomial], v: Sequence[Polynomial]):
    """The scalar k with u = k v, or None if there is none (v nonzero)."""
    k = None
    for a, b in zip(u, v):
        if not b:
            if a:
                return None
            continue
        ca, ea = a.leading() if a else (mpq(0), None)
        cb, eb = b.leading()
        if not a:
            return None
        if ea != eb:
            return None
        k = ca / cb
        break
    if k is None:
        return None
    for a, b in zip(u, v):
        if a != b.scale(k):
            return None
    return k


def hilbert_burch_recovery(M: GradedMatrix, f: Polynomial):
    """x0*M0 - x1*M1 + x2*M2 as a multiple c*f; returns c (None if not a multiple)."""
    x = [Polynomial.var(i) for i in range(NVARS)]
    mins = signed_minors(M)
    phi = sum((xi * m for xi, m in zip(x, mins)), Polynomial.zero())
    if not phi:
        return None
    return proportionality([phi], [f])


def curl_potential(t: Sequence[Polynomial], d: int) -> Optional[Polynomial]:
    """If the triple ``t`` (homogeneous of degree d-1) has zero curl, return
    g = (x0 t0 + x1 t1 + x2 t2)/d, which then satisfies grad g = t."""
    if len(t) != NVARS:
        raise ValueError("need a triple")
    for p in t:
        if p and (not p.is_homogeneous() or p.degree() != d - 1):
            raise ValueError("entries must be homogeneous of degree d - 1")
    for i in range(NVARS):
        for j in range(i + 1, NVARS):
            if t[j].diff(i) != t[i].diff(j):
                return None
    g = sum((Polynomial.var(i) * t[i] for i in range(NVARS)), Polynomial.zero()).scale(mpq(1, d))
    if tuple(gradient(g)) != tuple(t):
        raise InternalCheckError("curl-free triple is not the gradient of its Euler potential")
    return g


def curl_check(t: Sequence[Polynomial], d: int) -> bool:
    return curl_potential(t, d) is not None


def nearly_free_minor_triple(M: GradedMatrix, alpha: Polynomial) -> Tuple[Polynomial, ...]:
    """(B x C) / alpha for the columns A, B, C of a nearly free M_f."""
    B, C = M.column(1), M.column(2)
    return tuple(p.divide_exact(alpha) for p in cross(B, C))


def identity_checks(c: CurveInput) -> Dict[str, object]:
    """Verify the determinantal identities of free and nearly free syzygy
    matrices.  Failures raise :class:`InternalCheckError`."""
    cls = classify(c)
    M = c.data.syzygy_matrix
    f, d, r = c.f, c.degree, cls.r
    x = [Polynomial.var(i) for i in range(NVARS)]
    out: Dict[str, object] = {"kind": cls.kind}
    if cls.kind == FREE:
        k = hilbert_burch_recovery(M, f)
        if k is None or not k:
            raise InternalCheckError("x0 M0 - x1 M1 + x2 M2 is not a nonzero multiple of f")
        bordered = det3([x, M.column(0), M.column(1)])
        if not bordered.divide_exact(f).is_constant():
            raise InternalCheckError("bordered determinant not a constant multiple of f")
        tri = signed_minors(M)
        if proportionality(tri, gradient(f)) is None or not curl_check(tri, d):
            raise InternalCheckError("signed minors are not proportional to the gradient")
        out.update({"recovery_constant": k, "bordered_divisible": True, "minors_curl_free": True})
        return out
    if cls.kind == NEARLY_FREE:
        A, B, C = M.column(0), M.column(1), M.column(2)
        dets = [det3([x, B, C]), det3([A, x, C]), det3([A, B, x])]
        df = f.scale(d)
        try:
            abg = [D.divide_exact(df) for D in dets]
        except ValueError:
            raise InternalCheckError("bordered determinant not divisible by d*f") from None
        degs = [p.degree() for p in abg]
        if degs != [d - 2 * r + 1, 1, 1]:
            raise InternalCheckError("bordered quotients have degrees %s" % degs)
        P = c.data.second_matrix
        Pcol = P.column(0)
        k = proportionality(abg, Pcol)
        if k is None or not k:
            raise InternalCheckError("(alpha, beta, gamma) is not proportional to the second syzygy")
        tri = nearly_free_minor_triple(M, abg[0])
        if proportionality(tri, gradient(f)) is None or not curl_check(tri, d):
            raise InternalCheckError("(B x C)/alpha is not proportional to the gradient")
        out.update({"alpha": str(abg[0]), "beta": str(abg[1]), "gamma": str(abg[2]),
                    "alpha_degree": degs[0], "second_syzygy_scalar": k,
                    "minors_curl_free": True})
        return out
    raise HypothesisError("identity checks need a free or nearly free curve, got %s" % cls.label)


def koszul_relations(f: Polynomial) -> List[Tuple[Polynomial, ...]]:
    f0, f1, f2 = gradient(f)
    z = Polynomial.zero()
    return [(f1, -f0, z), (f2, z, -f0), (z, f2, -f1)]


# ---------------------------------------------------------------------------
# special first syzygy matrix for a diagonal linear syzygy


@dataclass
class SpecialSyzygy:
    M: GradedMatrix
    P: Tuple[Polynomial, ...]
    zero_index: int
    syzygy: Tuple[Polynomial, ...]
    omega: Polynomial
    g: Polynomial


def diagonal_linear_syzygy(f: Polynomial):
    """(l0 x0, l1 x1, l2 x2) in Syz(J_f)_1 with exactly one l_i zero, or None."""
    parts = [Polynomial.var(i) * p for i, p in enumerate(gradient(f))]
    monos = sorted({e for p in parts for e in p.terms})
    A = RationalMatrix([[p.coeff(m) for p in parts] for m in monos], NVARS)
    for v in nullspace_basis(A):
        zeros = [i for i, x in enumerate(v) if not x]
        if len(zeros) == 1:
            return v, zeros[0]
    return None


def special_syzygy_matrix(c: CurveInput) -> SpecialSyzygy:
    """Explicit first and second syzygy matrices of a nearly free curve with
    a linear syzygy of shape (0, b y1, c y2) after permuting variables."""
    cls = classify(c)
    if cls.kind != NEARLY_FREE:
        raise ShapeError("shape hypothesis not met: curve is %s" % cls.label)
    found = diagonal_linear_syzygy(c.f)
    if found is None:
        raise ShapeError("shape hypothesis not met: no diagonal linear syzygy")
    lam, k = found
    others = [i for i in range(NVARS) if i != k]
    last_error = None
    for i, j in (others, others[::-1]):
        try:
            return _build_special(c, lam, k, i, j)
        except ShapeError as exc:
            last_error = exc
    raise last_error


def _build_special(c, lam, k, i, j) -> SpecialSyzygy:
    f, d = c.f, c.degree
    perm = (k, i, j)                 # y_a = x_perm[a]
    X = [Polynomial.var(a) for a in range(NVARS)]
    # f in y-coordinates: substitute x_perm[a] -> y_a
    to_y = [None] * NVARS
    for a, v in enumerate(perm):
        to_y[v] = X[a]
    fy = f.substitute(to_y)
    b, cc = lam[i], lam[j]
    fy0, fy1, fy2 = gradient(fy)
    y0, y1, y2 = X
    wexp = (d - 1, 0, 0)
    omega = Polynomial.monomial(wexp, fy0.coeff(wexp))
    rest = fy0 - omega
    try:
        g = rest.divide_exact(y1)
    except ValueError:
        raise ShapeError("shape hypothesis not met: partial has an h-term") from None
    zero = Polynomial.zero()
    My = [[zero, -fy1, -fy2],
          [y1.scale(b), omega, zero],
          [y2.scale(cc), (g * y2).scale(-cc / b), fy0]]
    Py = (omega, y1.scale(-b), y2.scale(-cc))
    # back to x: y_a -> x_perm[a], row a of My belongs to variable perm[a]
    back = [X[v] for v in perm]
    rows = [None] * NVARS
    for a, v in enumerate(perm):
        rows[v] = [p.substitute(back) for p in My[a]]
    P = tuple(p.substitute(back) for p in Py)
    col_deg = [1, d - 1, d - 1]
    M = GradedMatrix(rows, [0, 0, 0], col_deg)
    grad = gradient(f)
    for col in M.columns():
        if sum((a * gf for a, gf in zip(col, grad)), Polynomial.zero()):
            raise InternalCheckError("constructed column is not a syzygy")
    for row in M.rows:
        if sum((a * p for a, p in zip(row, P)), Polynomial.zero()):
            raise InternalCheckError("constructed M P is not zero")
    computed = c.data.syzygy_matrix
    mine = SubmoduleBasis(M.columns(), [0, 0, 0], c.config.step_cap)
    if not all(mine.contains(col) for col in computed.columns()):
        raise InternalCheckError("constructed matrix does not generate Syz(J_f)")
    syz = tuple(X[a].scale(lam[a]) for a in range(NVARS))
    return SpecialSyzygy(M, P, k, syz, omega.substitute(back), g.substitute(back))


# ---------------------------------------------------------------------------
# 3-syzygy experiment


@dataclass
class ConjectureReport:
    rows: List[PointRecord]
    agreement: bool
    note: str = "experiment: the rank criterion is conjectural for 3-syzygy curves"

    def to_json(self):
        return {"agreement": self.agreement, "note": self.note,
                "points": [r.to_json() for r in self.rows]}


def conjecture_experiment(c: CurveInput, points: Optional[Sequence[ProjectivePoint]] = None) -> ConjectureReport:
    """Compare rank of M_f(p) >= 1 with mu_p = tau_p at rational singular
    points of a 3-syzygy curve.  Disagreements are findings, not errors."""
    cls = classify(c)
    if cls.kind != THREE_SYZYGY:
        raise HypothesisError("conjecture experiment needs a 3-syzygy curve, got %s" % cls.label)
    pts = sorted(set(points)) if points is not None else points_of_interest(c)
    rows = []
    for p in pts:
        rec = point_record(c, p)
        rec.within_hypotheses = False
        rows.append(rec)
    return ConjectureReport(rows, all(r.agree for r in rows))
