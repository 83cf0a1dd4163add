"""Exact polynomial arithmetic over the rationals."""

from sabar.algebra.parser import parse_poly
from sabar.algebra.poly import MultiPoly
from sabar.algebra.resultant import bareiss_determinant, resultant, sylvester_matrix
from sabar.algebra.univariate import (
    UniPoly,
    cauchy_bound,
    derivatives,
    poly_gcd,
    sign,
    square_free,
    sturm_count,
    sturm_sequence,
)

__all__ = [
    "MultiPoly",
    "UniPoly",
    "bareiss_determinant",
    "cauchy_bound",
    "derivatives",
    "parse_poly",
    "poly_gcd",
    "resultant",
    "sign",
    "square_free",
    "sturm_count",
    "sturm_sequence",
    "sylvester_matrix",
]
