"""Exact multivariate polynomials over the rationals.

Polynomials are immutable maps from exponent tuples to nonzero ``mpq``
coefficients.  The public surface is three variables ``x0, x1, x2``; the
Groebner engine may build polynomials in more variables (auxiliary
elimination variables are appended after ``x2``).

Canonical printing uses graded reverse lexicographic order with
``x0 > x1 > x2``.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Sequence, Tuple

from gmpy2 import mpq

Rational = type(mpq())
Exps = Tuple[int, ...]

NVARS = 3


def Q(value, den=None) -> Rational:
    """Coerce ints, strings ("3/4") and rationals to ``mpq``."""
    if den is not None:
        return mpq(value, den)
    if isinstance(value, str):
        return mpq(value.strip())
    return mpq(value)


def format_rational(q) -> str:
    """Serialize a rational as ``"p/q"`` (denominator always present)."""
    q = mpq(q)
    return "%d/%d" % (q.numerator, q.denominator)


def grevlex_key(exps: Exps) -> tuple:
    # larger key = larger monomial; ties on degree broken by smaller last exponent
    return (sum(exps),) + tuple(-e for e in reversed(exps))


def lex_key(exps: Exps) -> tuple:
    return tuple(exps)


def var_name(i: int) -> str:
    return "x%d" % i if i < NVARS else "t%d" % (i - NVARS)


class Polynomial:
    """Immutable polynomial with ``mpq`` coefficients.

    >>> p = Polynomial.var(0) + Polynomial.var(1)
    >>> str(p * p)
    'x0^2 + 2*x0*x1 + x1^2'
    """

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms=None, nvars: int = NVARS):
        self.nvars = nvars
        clean: Dict[Exps, Rational] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError("exponent vector %r has wrong length" % (e,))
                c = mpq(c)
                if c:
                    c = clean.get(e, 0) + c
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exps, Rational], nvars: int) -> "Polynomial":
        # trusted constructor: no zero coefficients, correct lengths
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, nvars: int = NVARS) -> "Polynomial":
        c = mpq(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int = NVARS) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): mpq(1)}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = mpq(coeff)
        return cls._raw({tuple(exps): c} if c else {}, len(exps))

    @classmethod
    def zero(cls, nvars: int = NVARS) -> "Polynomial":
        return cls._raw({}, nvars)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Exps, Rational]:
        return self._terms

    def items(self, order=grevlex_key) -> Iterator[Tuple[Rational, Exps]]:
        """Yield ``(coeff, exps)`` in descending monomial order."""
        for e in sorted(self._terms, key=order, reverse=True):
            yield self._terms[e], e

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def coeff(self, exps: Sequence[int]) -> Rational:
        return self._terms.get(tuple(exps), mpq(0))

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def leading(self, order=grevlex_key) -> Tuple[Rational, Exps]:
        e = max(self._terms, key=order)
        return self._terms[e], e

    def homogeneous_part(self, deg: int) -> "Polynomial":
        return Polynomial._raw(
            {e: c for e, c in self._terms.items() if sum(e) == deg}, self.nvars)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = mpq(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw({e: c * v for e, v in self._terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        out: Dict[Exps, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c}, self.nvars)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = mpq(coeff)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(e, exps)): c * v for e, v in self._terms.items()},
            self.nvars)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def divide_exact(self, other: "Polynomial") -> "Polynomial":
        """Exact quotient ``self / other``; raises ``ValueError`` if inexact."""
        q, r = divmod_poly(self, other)
        if r:
            raise ValueError("division is not exact")
        return q

    def content_primitive(self) -> Tuple[Rational, "Polynomial"]:
        """Return ``(c, p)`` with ``self = c*p``, ``p`` integral, primitive,
        leading coefficient positive."""
        if not self._terms:
            return mpq(0), self
        from math import gcd
        den = 1
        for c in self._terms.values():
            den = den * c.denominator // gcd(den, int(c.denominator))
        nums = [int(c * den) for c in self._terms.values()]
        g = 0
        for n in nums:
            g = gcd(g, n)
        lc, _ = self.leading()
        if lc < 0:
            g = -g
        c = mpq(g, den)
        return c, self.scale(1 / c)

    # -- calculus and evaluation ------------------------------------------

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] = k - 1
                out[tuple(e2)] = c * k
        return Polynomial._raw(out, self.nvars)

    def __call__(self, *point) -> Rational:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)

    def evaluate(self, point: Sequence) -> Rational:
        point = [mpq(v) for v in point]
        total = mpq(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose: replace variable ``i`` by ``images[i]``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        powers: Dict[Tuple[int, int], Polynomial] = {}

        def pw(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        out = Polynomial.zero(nv)
        for e, c in self._terms.items():
            term = Polynomial.constant(c, nv)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def extend(self, nvars: int) -> "Polynomial":
        """Embed into a ring with more variables (appended at the end)."""
        pad = (0,) * (nvars - self.nvars)
        return Polynomial._raw({e + pad: c for e, c in self._terms.items()}, nvars)

    def restrict(self, nvars: int) -> "Polynomial":
        """Drop trailing variables that do not occur."""
        out = {}
        for e, c in self._terms.items():
            if any(e[nvars:]):
                raise ValueError("polynomial involves dropped variables")
            out[e[:nvars]] = c
        return Polynomial._raw(out, nvars)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return "Polynomial(%r)" % to_string(self)


def divmod_poly(f: Polynomial, g: Polynomial, order=grevlex_key):
    """Multivariate division by a single polynomial (one divisor)."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    glc, glm = g.leading(order)
    rest = dict(f.terms)
    quot: Dict[Exps, Rational] = {}
    rem: Dict[Exps, Rational] = {}
    while rest:
        e = max(rest, key=order)
        c = rest.pop(e)
        if all(a >= b for a, b in zip(e, glm)):
            m = tuple(a - b for a, b in zip(e, glm))
            q = c / glc
            quot[m] = q
            for ge, gc in g.terms.items():
                if ge == glm:
                    continue
                te = tuple(a + b for a, b in zip(ge, m))
                v = rest.get(te, 0) - q * gc
                if v:
                    rest[te] = v
                else:
                    rest.pop(te, None)
        else:
            rem[e] = c
    return Polynomial._raw(quot, f.nvars), Polynomial._raw(rem, f.nvars)


def _format_monomial(e: Exps) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(var_name(i))
        elif k > 1:
            parts.append("%s^%d" % (var_name(i), k))
    return "*".join(parts)


def _format_coeff(c) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def to_string(p: Polynomial) -> str:
    """Canonical text form, parseable by :func:`parse_polynomial`."""
    if not p.terms:
        return "0"
    out = []
    for i, (c, e) in enumerate(p.items()):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(e)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = _format_coeff(a) + "*" + mono
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def gradient(f: Polynomial) -> Tuple[Polynomial, ...]:
    return tuple(f.diff(i) for i in range(f.nvars))


def monomials_of_degree(deg: int, nvars: int = NVARS) -> list:
    """All exponent vectors of total degree ``deg``, descending grevlex."""
    if deg < 0:
        return []
    out = []

    def rec(prefix, left, k):
        if k == 1:
            out.append(tuple(prefix) + (left,))
            return
        for a in range(left, -1, -1):
            rec(prefix + [a], left - a, k - 1)

    if nvars == 0:
        return [()] if deg == 0 else []
    rec([], deg, nvars)
    out.sort(key=grevlex_key, reverse=True)
    return out


def sum_polys(polys: Iterable[Polynomial], nvars: int = NVARS) -> Polynomial:
    total = Polynomial.zero(nvars)
    for p in polys:
        total = total + p
    return total


X0, X1, X2 = (Polynomial.var(i) for i in range(3))
