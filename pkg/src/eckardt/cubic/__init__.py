"""Cubic threefolds, their polar quadrics, Eckardt points and elliptic curves."""

from .builtins import ALIASES, EXPECTED, EXPECTED_CHART, FAMILY_DATA, FORMS, TABLE_NAMES, builtin, names
from .eckardt import (
    MAX_ECKARDT,
    EckardtReport,
    StratumCount,
    conjugate,
    eckardt_count,
    eckardt_counts_mod_p,
    eckardt_points_exact,
    eckardt_rational_points,
    galois_orbits,
    rational_minors_ideal,
    stratum_count,
)
from .family import WITNESS_LINE, FamilyError, FamilySample, generate_family, sample_no_eckardt
from .normal import (
    EllipticCurveModel,
    InflectionCounts,
    NormalForm,
    elliptic_curve_at,
    hessian_determinant,
    inflection_analysis,
    normalize_at,
    plane_cubic,
)
from .polar import (
    PolarMatrix,
    SmoothnessVerdict,
    evaluate_form,
    find_rational_singular_point,
    gradient_at,
    is_eckardt,
    minors_ideal_stratum,
    polar_matrix,
    smooth_mod_p,
    smoothness_check,
)
from .threefold import RING, VARS, CubicError, CubicThreefold, ProjPoint, SingularPointError, unit_point

__all__ = [
    "ALIASES",
    "EXPECTED",
    "EXPECTED_CHART",
    "FAMILY_DATA",
    "FORMS",
    "MAX_ECKARDT",
    "RING",
    "TABLE_NAMES",
    "VARS",
    "WITNESS_LINE",
    "CubicError",
    "CubicThreefold",
    "EckardtReport",
    "EllipticCurveModel",
    "FamilyError",
    "FamilySample",
    "InflectionCounts",
    "NormalForm",
    "PolarMatrix",
    "ProjPoint",
    "SingularPointError",
    "SmoothnessVerdict",
    "StratumCount",
    "builtin",
    "conjugate",
    "eckardt_count",
    "eckardt_counts_mod_p",
    "eckardt_points_exact",
    "eckardt_rational_points",
    "elliptic_curve_at",
    "evaluate_form",
    "find_rational_singular_point",
    "galois_orbits",
    "generate_family",
    "gradient_at",
    "hessian_determinant",
    "inflection_analysis",
    "is_eckardt",
    "minors_ideal_stratum",
    "names",
    "normalize_at",
    "plane_cubic",
    "polar_matrix",
    "rational_minors_ideal",
    "sample_no_eckardt",
    "smooth_mod_p",
    "smoothness_check",
    "stratum_count",
    "unit_point",
]
