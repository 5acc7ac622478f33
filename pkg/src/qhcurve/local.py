"""Local lengths at the origin of the affine plane.

Two independent routes compute dim_Q of the local algebra Q[y0,y1]_m / M at
m = (y0, y1):

* ``saturation``: the affine length of M minus the affine length of M with
  the origin component removed (M : m^inf, assembled from the saturations by
  y0 and by y1 through dim R/(A cap B) = dim R/A + dim R/B - dim R/(A + B)).
  Needs the whole affine zero set of M to be finite.
* ``truncation``: dim R/(M + m^N) for growing N; once two consecutive values
  agree, m^N lies in M locally (Nakayama) and the value is final.  Only
  looks at the origin.
"""

from __future__ import annotations

from typing import Sequence

from .groebner import (DEFAULT_STEP_CAP, Ideal, PositiveDimensionalError, affine_vs_dim,
                       buchberger, saturate)
from .poly import Polynomial, monomials_of_degree

LOCAL_VARS = 2


class NonIsolatedError(PositiveDimensionalError):
    pass


def to_local_ring(g: Polynomial) -> Polynomial:
    """Drop the (absent) x0 of a chart polynomial: x1 -> y0, x2 -> y1."""
    terms = {}
    for e, c in g.terms.items():
        if e[0]:
            raise ValueError("chart polynomial still involves x0")
        terms[(e[1], e[2])] = c
    return Polynomial(terms, LOCAL_VARS)


def _max_ideal_power(n: int):
    return [Polynomial.monomial(e) for e in monomials_of_degree(n, LOCAL_VARS)]


def length_by_truncation(gens: Sequence[Polynomial], bound: int, *,
                         step_cap: int = DEFAULT_STEP_CAP) -> int:
    gens = [g for g in gens if g]
    prev = None
    for n in range(1, bound + 2):
        I = Ideal(gens + _max_ideal_power(n), LOCAL_VARS)
        val = affine_vs_dim(buchberger(I, step_cap=step_cap))
        if val == prev:
            return val
        prev = val
    raise NonIsolatedError("critical locus not isolated at p")


def length_by_saturation(gens: Sequence[Polynomial], *, step_cap: int = DEFAULT_STEP_CAP) -> int:
    gens = [g for g in gens if g]
    M = Ideal(gens, LOCAL_VARS)
    try:
        total = affine_vs_dim(buchberger(M, step_cap=step_cap))
    except PositiveDimensionalError:
        raise NonIsolatedError("critical locus not isolated at p") from None
    y0 = Polynomial.var(0, LOCAL_VARS)
    y1 = Polynomial.var(1, LOCAL_VARS)
    A = saturate(M, y0, step_cap=step_cap)
    B = saturate(M, y1, step_cap=step_cap)
    away = affine_vs_dim(A) + affine_vs_dim(B) - affine_vs_dim(A + B)
    return total - away


def local_length(gens: Sequence[Polynomial], method: str = "saturation", bound: int = 10_000,
                 *, step_cap: int = DEFAULT_STEP_CAP):
    """Return ``(length, method actually used)``.

    With ``method="saturation"`` a globally non-finite affine zero set falls
    back to truncation, since only the germ at the origin matters.
    """
    if method == "truncation":
        return length_by_truncation(gens, bound, step_cap=step_cap), "truncation"
    if method != "saturation":
        raise ValueError("unknown local length method %r" % method)
    try:
        return length_by_saturation(gens, step_cap=step_cap), "saturation"
    except NonIsolatedError:
        return length_by_truncation(gens, bound, step_cap=step_cap), "truncation"
