"""Groebner bases, zero-dimensional solving and ideal operations."""

from .basis import (
    DEFAULT_MAX_BASIS,
    DEFAULT_MAX_DEGREE,
    GroebnerBasis,
    GroebnerResourceError,
    GroebnerStats,
    Ideal,
    buchberger,
    certify,
    certify_all,
    normal_form,
    resource_caps,
    spoly,
)
from .ideals import (
    eliminate,
    exact_divide,
    ideal_quotient,
    ideal_quotient_by_ideal,
    intersection,
    saturate,
    saturate_rabinowitsch,
)
from .zerodim import (
    DEFAULT_TRIALS,
    NotZeroDimensional,
    PointCapExceeded,
    ZeroDimSolution,
    contains_irrelevant_power,
    distinct_point_count,
    is_zero_dimensional,
    minimal_polynomial,
    multiplication_matrix,
    quotient_dimension,
    radical_point_count,
    rational_points_zero_dim,
    standard_monomials,
)

__all__ = [
    "DEFAULT_MAX_BASIS",
    "DEFAULT_MAX_DEGREE",
    "DEFAULT_TRIALS",
    "GroebnerBasis",
    "GroebnerResourceError",
    "GroebnerStats",
    "Ideal",
    "NotZeroDimensional",
    "PointCapExceeded",
    "ZeroDimSolution",
    "buchberger",
    "certify",
    "certify_all",
    "contains_irrelevant_power",
    "distinct_point_count",
    "eliminate",
    "exact_divide",
    "ideal_quotient",
    "ideal_quotient_by_ideal",
    "intersection",
    "is_zero_dimensional",
    "minimal_polynomial",
    "multiplication_matrix",
    "normal_form",
    "resource_caps",
    "quotient_dimension",
    "radical_point_count",
    "rational_points_zero_dim",
    "saturate",
    "saturate_rabinowitsch",
    "spoly",
    "standard_monomials",
]
