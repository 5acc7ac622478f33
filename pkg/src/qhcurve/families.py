"""Named curve families used as test corpus and for sweeps.

Every builder returns ``(f, declared_points)``; :func:`family_curve` runs the
validation gate on top.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from gmpy2 import mpq

from .config import AnalysisConfig
from .points import ProjectivePoint
from .poly import Polynomial, X0, X1, X2


class FamilyError(ValueError):
    code = "bad-family-parameters"


def _prod(polys, start=None) -> Polynomial:
    out = start if start is not None else Polynomial.constant(1)
    for p in polys:
        out = out * p
    return out


def _coeffs(a, m: int, name="a") -> Tuple:
    if a is None:
        a = tuple(range(1, m + 1))
    a = tuple(mpq(v) for v in a)
    if len(a) != m:
        raise FamilyError("need %d values for %s, got %d" % (m, name, len(a)))
    if any(v == 0 for v in a):
        raise FamilyError("coefficients %s must be nonzero" % name)
    if len(set(a)) != len(a):
        raise FamilyError("coefficients %s must be distinct" % name)
    return a


def _need(cond, msg):
    if not cond:
        raise FamilyError(msg)


P001 = ProjectivePoint(0, 0, 1)
P100 = ProjectivePoint(1, 0, 0)


def _ploski_product(m: int, a) -> Polynomial:
    a = _coeffs(a, m)
    return _prod(X0 ** 2 + (X0 * X2 + X1 ** 2).scale(ai) for ai in a)


def ploski_even(m: int, a=None):
    """Product of m conics x0^2 + a_i (x0 x2 + x1^2), degree 2m."""
    _need(m >= 2, "ploski_even needs m >= 2")
    return _ploski_product(m, a), [P001]


def ploski_odd(m: int, a=None):
    """x0 times the even Ploski product, degree 2m + 1."""
    _need(m >= 1, "ploski_odd needs m >= 1")
    return X0 * _ploski_product(m, a), [P001]


def cuspidal_free(d: int, r: int):
    """x0^d + x0^r x1^(d-r) + x1^(d-1) x2."""
    _need(d >= 3 and 1 <= r < d, "cuspidal_free needs d >= 3 and 1 <= r < d")
    f = X0 ** d + X0 ** r * X1 ** (d - r) + X1 ** (d - 1) * X2
    return f, [P001]


SEPTICS = {
    1: X0 ** 7 + X0 ** 3 * X1 ** 4 + X1 ** 6 * X2,
    2: X0 ** 7 + X0 ** 4 * X1 ** 3 + X1 ** 6 * X2,
    3: X0 ** 7 + X0 ** 6 * X2 + X1 ** 6 * X2,
}


def septic(n: int):
    """The three rational cuspidal septics with cusp at (0:0:1)."""
    _need(n in SEPTICS, "septic index must be 1, 2 or 3")
    return SEPTICS[n], [P001]


def w13(t=0):
    """x0 (x0^3 x2 + t x0^2 x1^2 + x1^4): quartic plus tangent line."""
    t = mpq(t)
    f = X0 * (X0 ** 3 * X2 + (X0 ** 2 * X1 ** 2).scale(t) + X1 ** 4)
    return f, [P001]


def q10(t=1):
    """x0^4 x2 + t x0^3 x1^2 + x0 x1^4 (t != 0)."""
    t = mpq(t)
    _need(t != 0, "q10 needs t != 0")
    f = X0 ** 4 * X2 + (X0 ** 3 * X1 ** 2).scale(t) + X0 * X1 ** 4
    return f, [P001]


def _lines(pairs, default_count: int, name: str):
    if pairs is None:
        pairs = [(i, 1) for i in range(default_count)]
    out = []
    for a, b in pairs:
        a, b = mpq(a), mpq(b)
        _need(b != 0, "%s lines need a nonzero second coefficient" % name)
        out.append(a / b)
    _need(len(set(out)) == len(out), "%s lines must be distinct" % name)
    return [(mpq(a), mpq(b)) for a, b in pairs]


def line_arrangement(r: int = 2, s: int = 2, g=None, h=None):
    """x0 * prod(a_i x0 + b_i x1) * prod(c_j x0 + d_j x2), degree 1 + r + s.

    Defaults: lines i x0 + x1 (i < r) and j x0 + x2 (j < s)."""
    if g is not None:
        r = len(g)
    if h is not None:
        s = len(h)
    _need(r >= 1 and s >= 1 and 1 + r + s >= 3, "line_arrangement needs r, s >= 1")
    gl = _lines(g, r, "g")
    hl = _lines(h, s, "h")
    f = _prod([X1.scale(b) + X0.scale(a) for a, b in gl], X0)
    f = _prod([X2.scale(dd) + X0.scale(c) for c, dd in hl], f)
    pts = {P001, ProjectivePoint(0, 1, 0)}
    for a, b in gl:
        for c, dd in hl:
            pts.add(ProjectivePoint(1, -a / b, -c / dd))
    if r == 1:
        pts.discard(P001)
    if s == 1:
        pts.discard(ProjectivePoint(0, 1, 0))
    return f, sorted(pts)


def tangent_conics(m: int, a=None):
    """Conics x0 x2 + a_i x1^2 pairwise tangent at (0:0:1) and (1:0:0)."""
    _need(m >= 2, "tangent_conics needs m >= 2")
    a = _coeffs(a, m)
    f = _prod((X0 * X2 + (X1 ** 2).scale(ai)) for ai in a)
    return f, [P001, P100]


def tangent_conics_line(m: int, a=None):
    """x1 times the tangent_conics product: the tangency points joined by a line."""
    _need(m >= 1, "tangent_conics_line needs m >= 1")
    a = _coeffs(a, m)
    f = _prod((X0 * X2 + (X1 ** 2).scale(ai) for ai in a), X1)
    return f, [P001, P100]


def four_conics_line():
    """Line x0 with four conics through (1:0:0), (1:+-1:0) and (0:+-1:1)."""
    f = (X0 * (X0 * X1 - X1 ** 2 + X2 ** 2) * (X0 * X2 - X0 ** 2 + X1 ** 2 - X2 ** 2)
         * (X0 * X1 + X1 ** 2 - X2 ** 2) * (X0 * X2 + X0 ** 2 - X1 ** 2 + X2 ** 2))
    pts = [ProjectivePoint(1, 0, 0), ProjectivePoint(1, -1, 0), ProjectivePoint(1, 1, 0),
           ProjectivePoint(0, -1, 1), ProjectivePoint(0, 1, 1)]
    return f, pts


TEN_LINES = [(1, 0, 0), (0, 1, 0), (1, -2, 0), (-2, 1, 0), (1, 0, -1),
              (0, 1, -1), (1, -1, 1), (1, -1, -1), (1, 1, -1), (1, 1, -3)]
CONIC_POINTS = [(0, 0, 1), (0, 1, 1), (1, 2, 1), (2, 1, 1), (1, 0, 1)]


def ten_lines_conic():
    """Ten lines and a smooth conic; the conic meets the lines in five
    points where three lines and the conic meet."""
    lines = [X0.scale(a) + X1.scale(b) + X2.scale(c) for a, b, c in TEN_LINES]
    conic = X0 ** 2 + X1 ** 2 - X0 * X1 - X0 * X2 - X1 * X2
    f = _prod(lines, conic)
    pts = {ProjectivePoint(p) for p in CONIC_POINTS}
    for u, v in combinations(TEN_LINES, 2):
        w = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        pts.add(ProjectivePoint(w))
    return f, sorted(pts)


def fermat_product(d: int):
    """(x0^d + x1^d + x2^d)(x0^d + x1^d), degree 2d."""
    _need(d >= 2, "fermat_product needs d >= 2")
    f = (X0 ** d + X1 ** d + X2 ** d) * (X0 ** d + X1 ** d)
    return f, [P001]


def three_syzygy(k: int):
    """x0^(2k+1) + (x0^2 + x1^2)^k x2, singular only at (0:0:1)."""
    _need(k >= 2, "three_syzygy needs k >= 2")
    f = X0 ** (2 * k + 1) + (X0 ** 2 + X1 ** 2) ** k * X2
    return f, [P001]


FAMILIES: Dict[str, Callable] = {
    "ploski_even": ploski_even,
    "ploski_odd": ploski_odd,
    "cuspidal_free": cuspidal_free,
    "septic": septic,
    "w13": w13,
    "q10": q10,
    "line_arrangement": line_arrangement,
    "tangent_conics": tangent_conics,
    "tangent_conics_line": tangent_conics_line,
    "four_conics_line": four_conics_line,
    "ten_lines_conic": ten_lines_conic,
    "fermat_product": fermat_product,
    "three_syzygy": three_syzygy,
}


def family_polynomial(name: str, **params):
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise FamilyError("unknown family %r (known: %s)" % (name, ", ".join(sorted(FAMILIES)))) from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise FamilyError("bad parameters for %s: %s" % (name, exc)) from None


def family_label(name: str, params: dict) -> str:
    if not params:
        return name
    inner = ", ".join("%s=%s" % (k, _fmt(v)) for k, v in sorted(params.items()))
    return "%s(%s)" % (name, inner)


def _fmt(v):
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    return str(v)


def family_curve(name: str, config: AnalysisConfig = AnalysisConfig(), **params):
    """Validated :class:`CurveInput` for a named family member."""
    from .curves import validate_curve

    f, pts = family_polynomial(name, **params)
    return validate_curve(f, family_label(name, params), pts, config)
