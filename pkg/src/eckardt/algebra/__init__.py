"""Exact fields, multivariate polynomials and the polynomial text format."""

from .fields import QQ, ExtensionField, Field, FieldError, PrimeField, RationalField, eisenstein_field
from .monomials import GREVLEX, LEX, MonomialOrder, block_order
from .ops import (
    from_dense,
    linear_substitute,
    poly_diff,
    poly_eval,
    restrict_line_expansion,
    to_dense,
    univ_squarefree_degree,
)
from .parser import PolySyntaxError, poly_parse
from .poly import MultiPoly, PolyRing, format_poly, reduce_mod_prime

__all__ = [
    "QQ",
    "ExtensionField",
    "Field",
    "FieldError",
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "MultiPoly",
    "PolyRing",
    "PolySyntaxError",
    "PrimeField",
    "RationalField",
    "block_order",
    "eisenstein_field",
    "format_poly",
    "from_dense",
    "linear_substitute",
    "poly_diff",
    "poly_eval",
    "poly_parse",
    "reduce_mod_prime",
    "restrict_line_expansion",
    "to_dense",
    "univ_squarefree_degree",
]
