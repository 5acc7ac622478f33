import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qhcurve.families import septic, four_conics_line
from qhcurve.groebner import (GroebnerLimitError, Ideal, PositiveDimensionalError, affine_vs_dim,
                              buchberger, eliminate, grevlex, hilbert_function, ideal_quotient,
                              intersect, krull_dimension, lex, normal_form, radical_membership,
                              same_ideal, saturate, saturate_irrelevant, s_polynomial,
                              stable_degree, univariate_eliminant)
from qhcurve.linalg import RationalMatrix, rank
from qhcurve.parser import parse_polynomial
from qhcurve.poly import Polynomial, gradient, monomials_of_degree

from conftest import homogeneous_polys

P = parse_polynomial


def I(*exprs):
    return Ideal([P(e) for e in exprs])


def jacobian(f):
    return Ideal(list(gradient(f)))


def member_by_linear_algebra(f, gens, degree):
    """Independent membership test for homogeneous f: is f in the span of
    monomial multiples m*g with deg(m*g) = degree?"""
    rows = []
    for g in gens:
        k = degree - g.degree()
        if k < 0:
            continue
        for m in monomials_of_degree(k):
            rows.append(g.mul_monomial(m))
    monos = monomials_of_degree(degree)
    A = RationalMatrix([[p.coeff(m) for m in monos] for p in rows] or [[0] * len(monos)])
    B = RationalMatrix([[p.coeff(m) for m in monos] for p in rows] + [[f.coeff(m) for m in monos]])
    return rank(A) == rank(B)


def sympy_basis(ideal):
    xs = sympy.symbols("x0 x1 x2")
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in ideal.generators]
    G = sympy.groebner(exprs, *xs, order="grevlex", domain="QQ")
    return sorted(sympy.srepr(sympy.expand(g)) for g in G.exprs)


def ours_as_sympy(G):
    return sorted(sympy.srepr(sympy.expand(sympy.sympify(str(g).replace("^", "**")))) for g in G.basis)


# -- normal forms and bases -------------------------------------------------------


def test_normal_form_examples():
    assert normal_form(P("x0^2"), buchberger(I("x0"))).is_zero()
    assert normal_form(P("x1^5"), buchberger(I("x1^6"))) == P("x1^5")
    f, _ = septic(1)
    G = buchberger(jacobian(f))
    assert normal_form(f.scale(7), G).is_zero()


def test_trivial_basis():
    assert sorted(str(g) for g in buchberger(I("x0", "x1")).basis) == ["x0", "x1"]


def test_coprime_leading_terms_need_no_completion():
    # grevlex leading terms x0^2 and x1^2 are coprime: already a basis
    ideal = I("x0^2 - x1*x2", "x1^2 - x0*x2")
    G = buchberger(ideal)
    assert len(G.basis) == 2
    assert ours_as_sympy(G) == sympy_basis(ideal)
    # under lex the same ideal does complete
    assert len(buchberger(ideal, lex()).basis) == 4


def test_completion_adds_generator():
    ideal = I("x0^2 - x1*x2", "x0*x1 - x2^2")
    G = buchberger(ideal)
    assert len(G.basis) == 3
    assert G.contains(P("x2*(x1^2 - x0*x2)"))
    for g in G.basis:
        assert member_by_linear_algebra(g, ideal.generators, g.degree())
    assert ours_as_sympy(G) == sympy_basis(ideal)


def test_basis_is_reduced_and_monic():
    G = buchberger(jacobian(septic(2)[0]))
    lts = [g.leading(G.order.key) for g in G.basis]
    assert all(c == 1 for c, _ in lts)
    for (_, a), (_, b) in itertools.permutations(lts, 2):
        assert not all(x <= y for x, y in zip(a, b))


def test_buchberger_criterion_post_hoc():
    G = buchberger(jacobian(septic(3)[0]))
    for a, b in itertools.combinations(G.basis, 2):
        assert normal_form(s_polynomial(a, b, G.order), G).is_zero()


def test_generator_order_does_not_matter():
    f = four_conics_line()[0]
    gens = list(gradient(f))
    base = buchberger(Ideal(gens)).basis
    for perm in itertools.permutations(gens):
        assert buchberger(Ideal(list(perm))).basis == base


def test_step_cap_is_an_explicit_failure():
    with pytest.raises(GroebnerLimitError):
        buchberger(jacobian(four_conics_line()[0]), step_cap=2)


def test_lex_basis_matches_sympy():
    ideal = I("x0^2 + x1*x2 - 1", "x1^2 - x2", "x0*x2 - x1")
    G = buchberger(ideal, lex())
    xs = sympy.symbols("x0 x1 x2")
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in ideal.generators]
    ref = sympy.groebner(exprs, *xs, order="lex", domain="QQ")
    assert sorted(map(sympy.srepr, map(sympy.expand, ref.exprs))) == ours_as_sympy(G)


@settings(max_examples=40)
@given(st.lists(homogeneous_polys(min_degree=1, max_degree=4, max_terms=4, coeff=3), min_size=1, max_size=3))
def test_basis_matches_sympy_on_random_ideals(gens):
    ideal = Ideal(gens)
    G = buchberger(ideal)
    assert ours_as_sympy(G) == sympy_basis(ideal)
    for g in ideal.generators:
        assert G.contains(g)


# -- Hilbert function, dimension, degree --------------------------------------------


def test_hilbert_function_examples():
    m = I("x0", "x1", "x2")
    assert hilbert_function(m, 0) == 1
    assert all(hilbert_function(m, t) == 0 for t in range(1, 5))
    assert [hilbert_function(I("x0"), t) for t in range(6)] == [1, 2, 3, 4, 5, 6]


def test_septic_degrees():
    assert stable_degree(jacobian(septic(1)[0])) == 27
    assert stable_degree(jacobian(septic(2)[0])) == 26
    assert stable_degree(jacobian(septic(3)[0])) == 25
    assert stable_degree(jacobian(four_conics_line()[0])) == 47
    G = buchberger(jacobian(septic(1)[0]))
    # free curve: J_f is saturated, so the Hilbert function climbs to tau
    values = [hilbert_function(G, t) for t in range(0, 40)]
    assert values == sorted(values)
    assert values[-10:] == [27] * 10


def test_krull_dimension_examples():
    assert krull_dimension(I("x0")) == 2
    assert krull_dimension(I("x0", "x1", "x2")) == 0
    assert krull_dimension(jacobian(P("x0*x2 - x1^2"))) == 0
    assert krull_dimension(I("1")) == -1


def test_stable_degree_rejects_positive_dimension():
    with pytest.raises(PositiveDimensionalError):
        stable_degree(I("x0^2"))


def test_affine_vector_space_dimension():
    R2 = lambda *e: Ideal([P(x).restrict(2) for x in e], 2)
    assert affine_vs_dim(R2("x0", "x1")) == 1
    assert affine_vs_dim(R2("x0^2", "x1^3")) == 6
    assert affine_vs_dim(R2("3*x0^2", "-2*x1")) == 2
    with pytest.raises(PositiveDimensionalError):
        affine_vs_dim(R2("x0*x1"))


# -- ideal operations -----------------------------------------------------------


def test_ideal_quotient_examples():
    assert same_ideal(ideal_quotient(I("x0*x1"), P("x0")), I("x1"))
    assert same_ideal(ideal_quotient(I("x0^2", "x0*x1"), P("x0")), I("x0", "x1"))
    q1 = ideal_quotient(I("x1^2", "x1*x2^3"), P("x1"))
    assert same_ideal(q1, I("x1", "x2^3"))
    for g in q1.generators:
        assert member_by_linear_algebra(g * P("x1"), I("x1^2", "x1*x2^3").generators, g.degree() + 1)
    assert buchberger(ideal_quotient(q1, P("x1"))).is_unit()


def test_quotient_by_ideal():
    J = ideal_quotient(I("x0*x1", "x0*x2"), I("x1", "x2"))
    assert same_ideal(J, I("x0"))


@pytest.mark.parametrize("method", ["elimination", "quotients"])
def test_saturation_examples(method):
    assert buchberger(saturate(I("x0^3"), P("x0"), method=method)).is_unit()
    assert same_ideal(saturate(I("x0*x1", "x0*x2"), P("x0"), method=method), I("x1", "x2"))


def test_free_jacobian_is_saturated():
    J = jacobian(septic(1)[0])
    assert same_ideal(saturate_irrelevant(J), J)


def test_nearly_free_jacobian_is_not_saturated():
    J = jacobian(septic(2)[0])
    S = saturate_irrelevant(J)
    G = buchberger(J)
    assert all(buchberger(S).contains(g) for g in J.generators)
    assert not all(G.contains(g) for g in S.generators)


def test_radical_membership_examples():
    assert radical_membership(P("x0"), I("x0^5"))
    assert not radical_membership(P("x1"), I("x0"))
    assert radical_membership(P("x0 + x1"), I("x0^2", "x1^3"))


def test_eliminate_examples():
    E = eliminate(I("x0 - x2", "x1 - 2*x2"), [0, 1])
    assert same_ideal(E, I("2*x0 - x1"))
    assert same_ideal(eliminate(I("x0^2 - x2^2", "x1"), [0, 2]), I("x0^2 - x2^2"))


def test_intersection():
    assert same_ideal(intersect(I("x0"), I("x1")), I("x0*x1"))


def test_univariate_eliminant():
    G = buchberger(Ideal([P("x0^2 - 4").restrict(2), P("x1 - x0").restrict(2)], 2))
    assert univariate_eliminant(G, 1) == P("x1^2 - 4").restrict(2)


# -- invariants -----------------------------------------------------------------


@settings(max_examples=25)
@given(st.lists(homogeneous_polys(min_degree=1, max_degree=3, max_terms=3, coeff=2), min_size=1, max_size=3),
       st.sampled_from(["x0", "x1", "x2", "x0 + x1"]))
def test_saturation_contains_and_is_idempotent(gens, h):
    ideal, h = Ideal(gens), P(h)
    S = saturate(ideal, h)
    GS = buchberger(S)
    assert all(GS.contains(g) for g in ideal.generators)
    assert same_ideal(saturate(S, h), S)
    assert same_ideal(S, saturate(ideal, h, method="quotients"))


@settings(max_examples=25)
@given(st.lists(homogeneous_polys(min_degree=1, max_degree=3, max_terms=3, coeff=2), min_size=2, max_size=3),
       st.sampled_from(["x0", "x1", "x2", "x1 - x2"]))
def test_radical_membership_agrees_with_powers(gens, h):
    ideal, h = Ideal(gens), P(h)
    G = buchberger(ideal)
    bound = 2 * max(G.max_staircase_degree(), 1)
    by_powers = any(G.contains(h ** n) for n in range(1, bound + 1))
    assert radical_membership(h, ideal) == by_powers


@settings(max_examples=20)
@given(st.lists(homogeneous_polys(min_degree=2, max_degree=3, max_terms=4, coeff=3), min_size=3, max_size=3))
def test_hilbert_function_settles_at_stable_degree(gens):
    ideal = Ideal(gens)
    G = buchberger(ideal)
    if krull_dimension(G) > 1:
        return
    v = stable_degree(G)
    values = [hilbert_function(G, t) for t in range(G.max_staircase_degree(), 30)]
    assert values[-5:] == [v] * 5


def test_degree_beyond_encoding_is_rejected():
    with pytest.raises(GroebnerLimitError):
        buchberger(I("x0^5000 - x1^5000"))


def test_eliminant_needs_zero_dimensional_ideal():
    G = buchberger(I("x0*x1", "x0^2"), order=lex())
    with pytest.raises(PositiveDimensionalError):
        univariate_eliminant(G, 2)
    assert univariate_eliminant(buchberger(I("x0 - 1", "x0")), 0) == Polynomial.constant(1)


def test_rational_points_of_a_line_is_an_error():
    from qhcurve.solve import rational_points
    with pytest.raises(PositiveDimensionalError):
        rational_points(I("x0"))
