import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from qhcurve.parser import parse_polynomial
from qhcurve.poly import (X0, X1, X2, Polynomial, divmod_poly, format_rational, gradient,
                          monomials_of_degree, to_string)

from conftest import homogeneous_polys

P = parse_polynomial


def test_arithmetic_basics():
    f = P("(x0 + x1)^3")
    assert f == X0 ** 3 + (X0 ** 2 * X1).scale(3) + (X0 * X1 ** 2).scale(3) + X1 ** 3
    assert f - f == Polynomial.zero()
    assert (X0 - X0).is_zero()
    assert P("1/2*x0").coeff((1, 0, 0)) == mpq(1, 2)


def test_zero_coefficients_are_dropped():
    assert not (P("x0 - x0")).terms
    assert P("0*x1 + x2").terms == {(0, 0, 1): 1}


def test_degree_and_homogeneity():
    assert P("x0^2*x1 + x2^3").degree() == 3
    assert P("x0^2*x1 + x2^3").is_homogeneous()
    assert not P("x0^2 + x1").is_homogeneous()
    assert P("7").is_constant()


def test_canonical_printing_is_grevlex():
    assert str(P("x2^2 + x0*x2 + x1^2 + x0^2 + x0*x1 + x1*x2")) == \
        "x0^2 + x0*x1 + x1^2 + x0*x2 + x1*x2 + x2^2"
    assert str(P("-1/3*x0 + 2")) == "-1/3*x0 + 2"


def test_diff_and_evaluate():
    f = P("x0^3*x1 + 5*x2^2")
    assert f.diff(0) == P("3*x0^2*x1")
    assert f.diff(2) == P("10*x2")
    assert f.evaluate((1, 2, mpq(1, 5))) == mpq(11, 5)


def test_exact_division():
    f = P("x0^2 - x1^2")
    assert f.divide_exact(P("x0 - x1")) == P("x0 + x1")
    with pytest.raises(ValueError):
        f.divide_exact(P("x0 + x2"))


def test_divmod_remainder_reconstructs():
    f, g = P("x0^3 + x1*x2^2 + 1"), P("x0 + x2")
    q, r = divmod_poly(f, g)
    assert q * g + r == f


def test_substitute_and_content():
    f = P("x0*x1 + x2")
    assert f.substitute([X1, X0, X2 + X0]) == P("x0*x1 + x2 + x0")
    c, prim = P("6*x0 + 4/3*x1").content_primitive()
    assert prim.scale(c) == P("6*x0 + 4/3*x1")
    assert all(v.denominator == 1 for v in prim.terms.values())


def test_monomials_of_degree_count_and_order():
    ms = monomials_of_degree(4)
    assert len(ms) == 15
    assert ms[0] == (4, 0, 0) and ms[-1] == (0, 0, 4)


def test_format_rational():
    assert format_rational(3) == "3/1"
    assert format_rational(mpq(-2, 6)) == "-1/3"


@settings(max_examples=100)
@given(homogeneous_polys(max_degree=8))
def test_euler_identity(f):
    d = f.degree()
    lhs = sum((X * g for X, g in zip((X0, X1, X2), gradient(f))), Polynomial.zero())
    assert lhs == f.scale(d)


@given(homogeneous_polys(max_degree=6), homogeneous_polys(max_degree=6), homogeneous_polys(max_degree=6))
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(homogeneous_polys(max_degree=6))
def test_coefficients_stay_reduced(f):
    g = (f * f).scale(mpq(3, 7)) - f.scale(mpq(1, 2))
    for v in g.terms.values():
        assert v != 0
        assert mpq(v.numerator, v.denominator) == v


@given(homogeneous_polys(max_degree=7))
def test_print_parse_roundtrip(f):
    assert P(to_string(f)) == f
    assert to_string(P(to_string(f))) == to_string(f)
