"""Simplicial complexes, filtrations and exact persistent homology over Q."""

from sabar.persistence.complex import (
    Simplex,
    SimplicialComplex,
    betti,
    betti_numbers,
    boundary_matrix,
)
from sabar.persistence.filtration import (
    Bar,
    Barcode,
    Filtration,
    barcode,
    barcodes,
    multiplicity,
    persistent_betti,
)
from sabar.persistence.oracle import SubquotientReport, homology_basis, subquotient_oracle
from sabar.persistence.values import (
    INF,
    MINUS_INF,
    Algebraic,
    Exact,
    FiltrationValue,
    Index,
    MinusInfinity,
    PlusInfinity,
    compare_values,
    value_from_json,
    value_to_json,
)

__all__ = [
    "INF",
    "MINUS_INF",
    "Algebraic",
    "Bar",
    "Barcode",
    "Exact",
    "Filtration",
    "FiltrationValue",
    "Index",
    "MinusInfinity",
    "PlusInfinity",
    "Simplex",
    "SimplicialComplex",
    "SubquotientReport",
    "barcode",
    "barcodes",
    "betti",
    "betti_numbers",
    "boundary_matrix",
    "compare_values",
    "homology_basis",
    "multiplicity",
    "persistent_betti",
    "subquotient_oracle",
    "value_from_json",
    "value_to_json",
]
