"""Semi-algebraic sub-level filtrations and Rips filtrations."""

from sabar.pipeline.barcode import barcode_from_critical_values, barcode_semialgebraic
from sabar.pipeline.critical import CriticalValueList, critical_value_polys, critical_values
from sabar.pipeline.elimination import eliminate
from sabar.pipeline.family import (
    CriticalSystem,
    Member,
    PerturbedFamily,
    SemialgebraicInput,
    critical_systems,
    jacobian_minors,
    perturb,
)
from sabar.pipeline.grid import Grid, half_width, sublevel_complex, sublevel_filtration
from sabar.pipeline.rips import rips_filtration

__all__ = [
    "CriticalSystem",
    "CriticalValueList",
    "Grid",
    "Member",
    "PerturbedFamily",
    "SemialgebraicInput",
    "barcode_from_critical_values",
    "barcode_semialgebraic",
    "critical_systems",
    "critical_value_polys",
    "critical_values",
    "eliminate",
    "half_width",
    "jacobian_minors",
    "perturb",
    "rips_filtration",
    "sublevel_complex",
    "sublevel_filtration",
]
