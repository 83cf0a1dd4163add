"""Barcodes of sub-level filtrations of closed bounded semi-algebraic sets."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from sabar.errors import InputContractError
from sabar.persistence.filtration import Barcode
from sabar.persistence.values import Algebraic, Exact
from sabar.pipeline.critical import DEFAULT_MAX_EXACT_DIM, CriticalValueList, critical_values
from sabar.pipeline.family import SemialgebraicInput
from sabar.pipeline.grid import sublevel_filtration

logger = logging.getLogger(__name__)

DEFAULT_WIDTH = Fraction(1, 1000)


def barcode_from_critical_values(
    inp: SemialgebraicInput,
    values: CriticalValueList,
    grid_n: int,
    approx_width: Fraction = DEFAULT_WIDTH,
    threads: int | None = None,
) -> list[Barcode]:
    """B_0 .. B_level of the filtration K_0 ⊆ ... ⊆ K_M indexed by the critical values.

    K_i is the sub-level complex at the sample just above s_i; births and deaths
    are reported as the Thom encodings of the s_i.
    """
    if not values.encodings:
        return [Barcode(p) for p in range(inp.level + 1)]
    labels = [Algebraic.of(s, approx_width) for s in values.encodings]
    f = sublevel_filtration(inp, values.levels, grid_n, labels, threads)
    logger.info("sub-level filtration: %r", f)
    return f.barcodes(inp.level)


def barcode_semialgebraic(
    inp: SemialgebraicInput,
    grid_n: int,
    levels: Sequence[Fraction | int] | None = None,
    *,
    max_exact_dim: int = DEFAULT_MAX_EXACT_DIM,
    approx_width: Fraction = DEFAULT_WIDTH,
    threads: int | None = None,
) -> list[Barcode]:
    """Barcodes of the sub-level filtration of the input set by P, for p <= level.

    Without ``levels`` the filtration steps are the exact critical values.
    With explicit rational ``levels`` the critical values are skipped and K_i is
    the sub-level complex at levels[i]; births are then rational values.
    """
    if levels is None:
        return barcode_from_critical_values(
            inp, critical_values(inp, max_exact_dim), grid_n, approx_width, threads
        )
    ordered = sorted({Fraction(t) for t in levels})
    if not ordered:
        raise InputContractError("the grid-only path needs at least one level")
    f = sublevel_filtration(inp, ordered, grid_n, [Exact(t) for t in ordered], threads)
    return f.barcodes(inp.level)
