"""Arbitrary-precision checks of degree-7 theta-function identities and their special values."""

from .checks import check_ids, run_all, run_check
from .closed_forms import closed_form_ids, evaluate_closed_form, missing_terms
from .errors import (
    AmbiguousOrientationError,
    CacheParseError,
    ConstructionError,
    DomainError,
    InvalidPrecisionError,
    NonConvergenceError,
    NonFiniteError,
    RegistryError,
    SepticaError,
    UnexpectedDiscriminantError,
    UnknownInvariantError,
)
from .invariants import class_invariant, class_invariant_closed, class_invariant_numeric, p_from_invariants
from .pipeline import SepticSolution, run_pipeline
from .precision import PrecisionContext, agree_digits, decimal_string, make_context
from .theta import chi, f_product, f_series, phi, phi_ratio, uvw_series
from .verification import VerificationResult

__version__ = "0.1.0"

__all__ = [
    "AmbiguousOrientationError", "CacheParseError", "ConstructionError", "DomainError",
    "InvalidPrecisionError", "NonConvergenceError", "NonFiniteError", "PrecisionContext",
    "RegistryError", "SepticSolution", "SepticaError", "UnexpectedDiscriminantError",
    "UnknownInvariantError", "VerificationResult", "agree_digits", "check_ids", "chi",
    "class_invariant", "class_invariant_closed", "class_invariant_numeric", "closed_form_ids",
    "decimal_string", "evaluate_closed_form", "f_product", "f_series", "make_context",
    "missing_terms", "p_from_invariants", "phi", "phi_ratio", "run_all", "run_check",
    "run_pipeline", "uvw_series",
]
