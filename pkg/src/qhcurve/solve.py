"""Rational points of finite projective schemes in P^2.

Each standard chart (x0 = 1; x0 = 0, x1 = 1; the point (0:0:1)) is handled
by adjoining the chart equations, then peeling off one coordinate at a time
with a univariate eliminant whose rational roots are found by factoring.
"""

from __future__ import annotations

from typing import List, Sequence

from gmpy2 import mpq

from .groebner import (DEFAULT_STEP_CAP, Ideal, PositiveDimensionalError, buchberger,
                       univariate_eliminant)
from .points import ProjectivePoint
from .poly import NVARS, Polynomial


def rational_roots(p: Polynomial, var: int) -> List:
    """Distinct rational roots of a univariate polynomial in ``x_var``, ascending."""
    import sympy

    if not p:
        raise ValueError("zero polynomial has every root")
    deg = max(e[var] for e in p.terms)
    coeffs = [0] * (deg + 1)
    for e, c in p.terms.items():
        coeffs[deg - e[var]] = sympy.Rational(int(c.numerator), int(c.denominator))
    t = sympy.Symbol("t")
    poly = sympy.Poly(coeffs, t, domain=sympy.QQ)
    roots = set()
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = -b / a
            roots.add(mpq(int(r.p), int(r.q)))
    return sorted(roots)


def _affine_points(gens: Sequence[Polynomial], free: Sequence[int], fixed: dict,
                   step_cap: int) -> List[dict]:
    """Rational solutions of ``gens`` with the ``fixed`` coordinates pinned
    and the ``free`` ones unknown (the system must be zero-dimensional)."""
    extra = [Polynomial.var(i) - Polynomial.constant(v) for i, v in fixed.items()]
    G = buchberger(Ideal(list(gens) + extra), step_cap=step_cap)
    if G.is_unit():
        return []
    if not free:
        return [dict(fixed)]
    var = free[-1]
    elim = univariate_eliminant(G, var)
    out = []
    for root in rational_roots(elim, var):
        sub = dict(fixed)
        sub[var] = root
        out += _affine_points(G.basis, free[:-1], sub, step_cap)
    return out


def rational_points(I: Ideal, *, step_cap: int = DEFAULT_STEP_CAP) -> List[ProjectivePoint]:
    """All Q-rational points of V(I) for a homogeneous ideal with finitely
    many projective zeros, in canonical order."""
    if I.nvars != NVARS or not I.homogeneous:
        raise ValueError("need a homogeneous ideal in x0, x1, x2")
    gens = list(I.generators)
    pts = set()
    try:
        for sol in _affine_points(gens, [1, 2], {0: mpq(1)}, step_cap):
            pts.add(ProjectivePoint(sol[0], sol[1], sol[2]))
        for sol in _affine_points(gens, [2], {0: mpq(0), 1: mpq(1)}, step_cap):
            pts.add(ProjectivePoint(sol[0], sol[1], sol[2]))
    except PositiveDimensionalError:
        raise PositiveDimensionalError("zero set is not finite") from None
    if all(not g.evaluate((0, 0, 1)) for g in gens):
        pts.add(ProjectivePoint(0, 0, 1))
    return sorted(pts)
