"""Lines on cubic threefolds: Schubert cells, triple lines and the curve of second-type lines."""

from .cells import SchubertCell, cell_of, cells, plucker, plucker_relations
from .incidence import CHART01, elliptic_curve_chart_ideal, lines_through_point_ideal, point_conditions
from .lines import (
    TripleLineReport,
    line_type,
    triple_counts_mod_p,
    triple_line_count,
    triple_lines_in_chart01,
    triple_lines_through,
)
from .main import Intersection, MainComponentModel, main_component_model
from .systems import (
    ALPHA_STRATA,
    SecondTypeSystem,
    TripleLineSystem,
    cell_ring,
    fano_ideal,
    second_type_system,
    triple_line_system,
)

__all__ = [
    "ALPHA_STRATA",
    "CHART01",
    "Intersection",
    "MainComponentModel",
    "SchubertCell",
    "SecondTypeSystem",
    "TripleLineReport",
    "TripleLineSystem",
    "cell_of",
    "cell_ring",
    "cells",
    "elliptic_curve_chart_ideal",
    "fano_ideal",
    "line_type",
    "lines_through_point_ideal",
    "main_component_model",
    "plucker",
    "plucker_relations",
    "point_conditions",
    "second_type_system",
    "triple_counts_mod_p",
    "triple_line_count",
    "triple_lines_in_chart01",
    "triple_lines_through",
    "triple_line_system",
]
