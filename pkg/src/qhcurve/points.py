"""Rational points of the projective plane and local charts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from gmpy2 import mpq

from .poly import NVARS, Polynomial, format_rational


@dataclass(frozen=True, order=False)
class ProjectivePoint:
    """A point of P^2 over Q, stored with its first nonzero coordinate 1."""

    coords: Tuple

    def __init__(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != NVARS:
            raise ValueError("a plane point needs 3 coordinates")
        vals = [mpq(c) for c in coords]
        lead = next((v for v in vals if v), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        object.__setattr__(self, "coords", tuple(v / lead for v in vals))

    @classmethod
    def parse(cls, text: str) -> "ProjectivePoint":
        parts = text.replace(",", ":").split(":")
        if len(parts) != NVARS:
            raise ValueError("point must look like a:b:c, got %r" % text)
        try:
            return cls(*(mpq(p.strip()) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError("bad point %r: %s" % (text, exc)) from None

    def sort_key(self):
        return tuple((c.numerator, c.denominator) for c in self.coords)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "(%s)" % ":".join(_short(c) for c in self.coords)

    def __repr__(self):
        return "ProjectivePoint%s" % str(self)

    def to_json(self):
        return [format_rational(c) for c in self.coords]


def _short(c) -> str:
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def chart_matrix(p: ProjectivePoint):
    """Invertible matrix A (rows = old coordinates) with A.(1,0,0) = p.

    Column 0 is ``p``; the other columns are the standard basis vectors
    e_j for the indices j different from the first nonzero coordinate of p,
    in increasing order.
    """
    k = next(i for i, c in enumerate(p.coords) if c)
    cols = [list(p.coords)]
    for j in range(NVARS):
        if j != k:
            cols.append([mpq(1) if i == j else mpq(0) for i in range(NVARS)])
    return [[cols[c][r] for c in range(NVARS)] for r in range(NVARS)]


def change_coordinates(f: Polynomial, A) -> Polynomial:
    """Return f(A y) as a polynomial in y."""
    images = []
    for r in range(NVARS):
        terms = {}
        for c in range(NVARS):
            if A[r][c]:
                e = [0] * NVARS
                e[c] = 1
                terms[tuple(e)] = A[r][c]
        images.append(Polynomial(terms))
    return f.substitute(images)


@dataclass(frozen=True)
class LocalChart:
    point: ProjectivePoint
    matrix: tuple
    local: Polynomial          # g(x1, x2) as a 3-variable polynomial with no x0

    def rehomogenize(self, degree: int) -> Polynomial:
        """Homogenize ``local`` to ``degree`` using x0."""
        terms = {}
        for e, c in self.local.terms.items():
            terms[(degree - e[1] - e[2], e[1], e[2])] = c
        return Polynomial(terms)


def dehomogenize_at(f: Polynomial, p: ProjectivePoint) -> LocalChart:
    """Move ``p`` to (1:0:0) by :func:`chart_matrix` and set x0 = 1.

    The returned local equation keeps three variables with x0 absent, so the
    singularity of the curve at p sits at x1 = x2 = 0.
    """
    A = chart_matrix(p)
    moved = change_coordinates(f, A)
    terms = {}
    for e, c in moved.terms.items():
        key = (0, e[1], e[2])
        terms[key] = terms.get(key, 0) + c
    return LocalChart(p, tuple(tuple(r) for r in A), Polynomial(terms))
