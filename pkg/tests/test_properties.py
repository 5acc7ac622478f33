"""Corpus-wide and randomized structural checks of the curve pipeline."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qhcurve.curves import (ALL_QH, FREE, NEARLY_FREE, CurveRejected, HypothesisError,
                            classify, curl_check, identity_checks, koszul_relations,
                            milnor_tjurina_local, nearly_free_minor_triple,
                            qh_criterion_global, rank_at_point, signed_minors, validate_curve)
from qhcurve.families import cuspidal_free
from qhcurve.parser import parse_polynomial
from qhcurve.poly import Polynomial, X0, X1, X2, gradient
from qhcurve.syzygy import SubmoduleBasis

from conftest import corpus_curves, corpus_ids, EXTRA

CURVES = corpus_curves()
IDS = corpus_ids() + list(EXTRA)

# per-point oracle results are the expensive part; compute each once
_ORACLE = {}


def oracle(c, p):
    key = (c.f, p)
    if key not in _ORACLE:
        _ORACLE[key] = milnor_tjurina_local(c, p)
    return _ORACLE[key]


def structural_checks(c):
    """Everything that must hold for any valid curve; returns the classification."""
    data = c.data
    cls = classify(c)
    res = data.resolution
    assert res.check_products() and res.is_minimal()
    lo, hi, sec = cls.dpwall
    assert lo <= cls.tau <= hi
    if sec is not None:
        assert cls.tau <= sec
    if c.degree > 2 * cls.r:
        assert (cls.kind == FREE) == (cls.tau == hi)
    if c.degree >= 2 * cls.r:
        assert (cls.kind == NEARLY_FREE) == (cls.tau == hi - 1)
    assert curl_check(gradient(c.f), c.degree)
    M = data.syzygy_matrix
    S = SubmoduleBasis(M.columns(), [0, 0, 0])
    for rel in koszul_relations(c.f):
        assert S.contains(rel)
    if cls.kind == FREE:
        assert sum(cls.exponents) == c.degree - 1
        assert curl_check(signed_minors(M), c.degree)
        identity_checks(c)
    elif cls.kind == NEARLY_FREE:
        d1, d2, d3 = cls.exponents
        assert d2 == d3 and d1 + d2 == c.degree
        out = identity_checks(c)
        assert out["alpha_degree"] == c.degree - 2 * cls.r + 1
        assert curl_check(nearly_free_minor_triple(M, parse_polynomial(out["alpha"])), c.degree)
    return cls


def oracle_checks(c, cls):
    """Criterion versus local oracle at every rational singular point."""
    within = cls.criterion_hypotheses()[0]
    pts = c.data.singular_points
    tau_sum = mu_sum = 0
    for p in pts:
        loc = oracle(c, p)
        assert 0 < loc.tau <= loc.mu
        tau_sum += loc.tau
        mu_sum += loc.mu
        if within:
            assert (rank_at_point(c, p).rank >= 1) == loc.quasi_homogeneous, p
    assert tau_sum <= cls.tau
    fully_rational = tau_sum == cls.tau
    if within:
        rep = qh_criterion_global(c)
        if fully_rational:
            assert (rep.verdict == ALL_QH) == (mu_sum == cls.tau)
        if cls.kind == FREE and rep.verdict != ALL_QH:
            q = sum(1 for p in pts if rank_at_point(c, p).rank == 0)
            assert q <= cls.r ** 2
            if isinstance(rep.y_degree, int):
                assert rep.y_degree <= cls.r ** 2
    return fully_rational


@pytest.mark.parametrize("c", CURVES, ids=IDS)
def test_corpus_structure(c):
    structural_checks(c)


@pytest.mark.parametrize("c", CURVES, ids=IDS)
def test_corpus_criterion_matches_oracle(c):
    oracle_checks(c, classify(c))


def test_tau_is_sum_of_local_tjurina_numbers():
    for name in ("w13-t0", "w13-t1", "four_conics_line", "ten_lines_conic"):
        c = CURVES[IDS.index(name)]
        total = sum(oracle(c, p).tau for p in c.data.singular_points)
        assert total == classify(c).tau, name


# -- randomized families -------------------------------------------------------------


@st.composite
def line_arrangements(draw):
    lines = draw(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
                          .filter(any), min_size=3, max_size=6))
    f = Polynomial.constant(1)
    for a, b, c in lines:
        f = f * (X0.scale(a) + X1.scale(b) + X2.scale(c))
    return f


def _validated(f):
    try:
        return validate_curve(f)
    except CurveRejected:
        return None


@settings(max_examples=30)
@given(line_arrangements())
def test_random_line_arrangements(f):
    c = _validated(f)
    assume(c is not None)
    cls = structural_checks(c)
    # every singularity of a line arrangement is quasi-homogeneous
    assert oracle_checks(c, cls)
    if cls.criterion_hypotheses()[0]:
        assert qh_criterion_global(c).verdict == ALL_QH


@settings(max_examples=15)
@given(st.integers(4, 9).flatmap(lambda d: st.tuples(st.just(d), st.integers(1, d - 1))))
def test_cuspidal_family(dr):
    d, r = dr
    c = _validated(cuspidal_free(d, r)[0])
    assume(c is not None)
    cls = structural_checks(c)
    oracle_checks(c, cls)


@st.composite
def conic_line_products(draw):
    """Products of conics from the pencil x0 x2 + a x1^2, optionally with x1."""
    a = draw(st.lists(st.integers(-4, 4).filter(bool), min_size=1, max_size=3, unique=True))
    f = Polynomial.constant(1)
    for v in a:
        f = f * (X0 * X2 + (X1 ** 2).scale(v))
    if draw(st.booleans()):
        f = f * X1
    if draw(st.booleans()):
        f = f * (X0 + X2)
    return f


@settings(max_examples=20)
@given(conic_line_products())
def test_random_conic_pencils(f):
    c = _validated(f)
    assume(c is not None)
    cls = structural_checks(c)
    oracle_checks(c, cls)
