import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qhcurve.families import family_curve
from qhcurve.parser import parse_polynomial
from qhcurve.poly import Polynomial, monomials_of_degree
from qhcurve.curves import validate_curve

settings.register_profile(
    "repo", deadline=None, derandomize=True, print_blob=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


# Family members used by the corpus-wide checks.  The degree-12 arrangement
# is included; its invariants are cached per process after the first use.
CORPUS = [
    ("septic", {"n": 1}), ("septic", {"n": 2}), ("septic", {"n": 3}),
    ("w13", {"t": 0}), ("w13", {"t": 1}), ("q10", {"t": 1}),
    ("ploski_even", {"m": 2}), ("ploski_even", {"m": 3}), ("ploski_even", {"m": 4}),
    ("ploski_odd", {"m": 2}), ("ploski_odd", {"m": 3}), ("ploski_odd", {"m": 4}),
    ("line_arrangement", {"r": 2, "s": 2}), ("line_arrangement", {"r": 2, "s": 3}),
    ("line_arrangement", {"r": 3, "s": 3}),
    ("tangent_conics", {"m": 2}), ("tangent_conics", {"m": 3}), ("tangent_conics_line", {"m": 2}),
    ("four_conics_line", {}), ("ten_lines_conic", {}),
    ("fermat_product", {"d": 2}), ("fermat_product", {"d": 3}),
    ("three_syzygy", {"k": 2}), ("three_syzygy", {"k": 3}),
    ("cuspidal_free", {"d": 6, "r": 2}), ("cuspidal_free", {"d": 8, "r": 3}),
]

# Explicit curves that are not family members.
EXTRA = {
    "two_lines_conic": "x0*x1*(x0^2+x1^2-x2^2)",
    "a2_quartic": "x0^2*x2^2 + x1^4 + x0^3*x1",
    "fermat_cubic": "x0^3+x1^3+x2^3",
}


def corpus_ids():
    return ["%s%s" % (n, "".join("-%s%s" % kv for kv in sorted(p.items()))) for n, p in CORPUS]


def corpus_curves():
    out = [family_curve(n, **p) for n, p in CORPUS]
    out += [validate_curve(parse_polynomial(s), label=k) for k, s in EXTRA.items()]
    return out


@pytest.fixture(scope="session")
def corpus():
    return corpus_curves()


@st.composite
def homogeneous_polys(draw, min_degree=1, max_degree=8, max_terms=8, coeff=5):
    """Random homogeneous polynomial in x0, x1, x2 (possibly sparse)."""
    d = draw(st.integers(min_degree, max_degree))
    monos = monomials_of_degree(d)
    k = draw(st.integers(1, min(max_terms, len(monos))))
    picked = draw(st.lists(st.sampled_from(monos), min_size=k, max_size=k, unique=True))
    terms = {}
    for e in picked:
        c = draw(st.sampled_from([v for v in range(-coeff, coeff + 1) if v]))
        terms[tuple(e)] = c
    return Polynomial(terms)


@st.composite
def small_curves(draw, max_degree=5):
    """Sparse plane curves of degree 3..max_degree; many have singular points."""
    return draw(homogeneous_polys(min_degree=3, max_degree=max_degree, max_terms=5, coeff=3))
