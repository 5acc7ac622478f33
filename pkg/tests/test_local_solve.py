import pytest
from gmpy2 import mpq
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qhcurve.curves import milnor_tjurina_local
from qhcurve.families import family_curve
from qhcurve.groebner import Ideal, PositiveDimensionalError
from qhcurve.local import NonIsolatedError, length_by_saturation, length_by_truncation, local_length
from qhcurve.parser import parse_polynomial
from qhcurve.points import ProjectivePoint
from qhcurve.poly import Polynomial
from qhcurve.solve import rational_points, rational_roots

P = parse_polynomial


def g2(expr):
    """Local polynomial in y0 = x0, y1 = x1 (two variables)."""
    return P(expr).restrict(2)


def mu_tau(g, method):
    gens_mu = [g.diff(0), g.diff(1)]
    mu, _ = local_length(gens_mu, method, 200)
    tau, _ = local_length([g] + gens_mu, method, 200)
    return mu, tau


@pytest.mark.parametrize("method", ["saturation", "truncation"])
@pytest.mark.parametrize("expr, mu, tau", [
    ("x0^2 + x1^2", 1, 1),                  # node
    ("x0^3 - x1^2", 2, 2),                  # cusp
    ("x0^2 + x1^7", 6, 6),                  # A6
    ("x0^3 + x1^4", 6, 6),                  # E6
    ("x0^4 + x1^5 + x0^2*x1^3", 12, 11),    # not quasi-homogeneous
    ("x0^2*x1 + x1^4", 5, 5),               # D5
])
def test_known_singularities(method, expr, mu, tau):
    assert mu_tau(g2(expr), method) == (mu, tau)


def test_other_critical_points_are_ignored():
    # a second critical point sits at (0, -2/3), away from the origin
    g = g2("x0^2 + x1^2 + x1^3")
    mu, _ = local_length([g.diff(0), g.diff(1)], "saturation")
    assert mu == 1


def test_smooth_point_has_length_zero():
    g = g2("x0 + x1^2")
    assert length_by_saturation([g, g.diff(0), g.diff(1)]) == 0


def test_non_isolated():
    g = g2("x0^2*x1^2")
    with pytest.raises(NonIsolatedError):
        length_by_truncation([g.diff(0), g.diff(1)], 12)


def test_saturation_falls_back_on_infinite_affine_locus():
    # g vanishes doubly along y0 = 1, so the critical locus contains that line
    g = g2("(x0 - 1)^2*(x0^2 + x1^2)")
    gens = [g.diff(0), g.diff(1)]
    val, used = local_length(gens, "saturation", 50)
    assert used == "truncation"
    assert val == length_by_truncation(gens, 50) == 1


@st.composite
def local_germs(draw):
    """Polynomials with a singular point at the origin (order >= 2)."""
    terms = {}
    for _ in range(draw(st.integers(2, 4))):
        a = draw(st.integers(0, 5))
        b = draw(st.integers(0, 5))
        if a + b >= 2:
            terms[(a, b)] = draw(st.sampled_from([-2, -1, 1, 2, 3]))
    return Polynomial(terms, 2)


@settings(max_examples=40)
@given(local_germs())
def test_two_routes_agree(g):
    assume(g)
    gens = [g.diff(0), g.diff(1)]
    try:
        sat = length_by_saturation(gens)
    except NonIsolatedError:
        assume(False)
    assert sat == length_by_truncation(gens, 60)
    tau = length_by_saturation([g] + gens)
    assert tau <= sat


# -- rational points -----------------------------------------------------------


def test_rational_roots():
    assert rational_roots(P("4*x1^3 - x1"), 1) == [mpq(-1, 2), 0, mpq(1, 2)]
    assert rational_roots(P("x2^2 + 1"), 2) == []


def test_rational_points_of_finite_scheme():
    I = Ideal([P("x0*x1"), P("x0*(x0 - x2)"), P("x1*(x1 - 2*x2)")])
    pts = rational_points(I)
    assert pts == sorted([ProjectivePoint(0, 0, 1), ProjectivePoint(1, 0, 1), ProjectivePoint(0, 2, 1)])


def test_irrational_points_are_skipped():
    I = Ideal([P("x0^2 - 2*x2^2"), P("x1")])
    assert rational_points(I) == []


def test_points_at_infinity_chart():
    I = Ideal([P("x0"), P("x1^2 - x2^2")])
    assert rational_points(I) == [ProjectivePoint(0, 1, -1), ProjectivePoint(0, 1, 1)]


def test_positive_dimensional_zero_set():
    with pytest.raises(PositiveDimensionalError):
        rational_points(Ideal([P("x0")]))


@pytest.mark.parametrize("name, m", [("ploski_even", m) for m in (2, 3, 4)] + [("ploski_odd", m) for m in (2, 3, 4)])
def test_ploski_local_invariants_closed_form(name, m):
    c = family_curve(name, m=m)
    d = c.degree
    loc = milnor_tjurina_local(c, ProjectivePoint(0, 0, 1))
    assert (loc.mu, loc.tau) == ((d - 1) ** 2 - d // 2, d * d - 3 * d + 3)
