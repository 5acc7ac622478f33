"""Quasi-homogeneity of plane curve singularities via Jacobian syzygies.

Exact computer algebra over Q: polynomials, Groebner bases, minimal free
resolutions, and the free / nearly free curve pipeline built on them.
"""

from .config import AnalysisConfig, load_config
from .curves import (CurveInput, classify, conjecture_experiment, curl_check, dp_wall_bounds,
                     identity_checks, milnor_tjurina_local, qh_criterion_global, rank_at_point,
                     special_syzygy_matrix, validate_curve)
from .families import family_curve
from .groebner import (GroebnerBasis, Ideal, MonomialOrder, buchberger, eliminate,
                       hilbert_function, ideal_quotient, krull_dimension, normal_form,
                       radical_membership, saturate, stable_degree)
from .parser import ParseError, parse_polynomial
from .points import ProjectivePoint, dehomogenize_at
from .poly import Polynomial
from .syzygy import (BettiTable, FreeModuleVector, FreeResolution, GradedMatrix,
                     first_syzygy_matrix, mdr, minimal_free_resolution, syzygy_basis)

__version__ = "0.1.0"
