"""Vietoris-Rips filtrations of finite point clouds over squared distances."""

from __future__ import annotations

import logging
from bisect import bisect_left
from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations

from sabar.errors import InputContractError
from sabar.persistence.complex import Simplex
from sabar.persistence.filtration import Filtration
from sabar.persistence.values import Exact

logger = logging.getLogger(__name__)

MAX_RIPS_DIM = 3

Point = tuple[Fraction, ...]


def squared_distance(a: Point, b: Point) -> Fraction:
    return sum(((x - y) ** 2 for x, y in zip(a, b)), Fraction(0))


def _thin(thresholds: list[Fraction], steps: int) -> list[Fraction]:
    """At most ``steps`` evenly spread thresholds, always keeping the largest."""
    if steps < 1:
        raise InputContractError("steps must be positive")
    if len(thresholds) <= steps:
        return thresholds
    last = len(thresholds) - 1
    if steps == 1:
        return [thresholds[last]]
    picked = sorted({last - (j * last) // (steps - 1) for j in range(steps)})
    return [thresholds[i] for i in picked]


def rips_filtration(
    points: Sequence[Sequence[Fraction | int]], max_dim: int, steps: int | None = None
) -> Filtration:
    """Rips filtration whose simplices enter when their longest squared edge is reached.

    Simplices go up to dimension ``max_dim + 1``; H_p is exact for p <= max_dim.
    Filtration values are the sorted distinct squared distances (0 included for
    the vertices).
    """
    if not 0 <= max_dim <= MAX_RIPS_DIM:
        raise InputContractError(f"max_dim must be in 0..{MAX_RIPS_DIM}, got {max_dim}")
    pts: list[Point] = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise InputContractError("a Rips filtration needs at least one point")
    if len({len(p) for p in pts}) != 1:
        raise InputContractError("points have different dimensions")
    if len(set(pts)) != len(pts):
        raise InputContractError("points must be distinct")

    n = len(pts)
    dist = {(i, j): squared_distance(pts[i], pts[j]) for i, j in combinations(range(n), 2)}
    thresholds = sorted({Fraction(0), *dist.values()})
    if steps is not None:
        thresholds = _thin(thresholds, steps)

    births: dict[Simplex, int] = {}
    top = thresholds[-1]
    for size in range(1, min(max_dim + 2, n) + 1):
        for simplex in combinations(range(n), size):
            diameter = max((dist[e] for e in combinations(simplex, 2)), default=Fraction(0))
            if diameter > top:
                continue
            births[simplex] = bisect_left(thresholds, diameter)
    logger.debug("Rips: %d points, %d simplices, %d thresholds", n, len(births), len(thresholds))
    return Filtration(births, len(thresholds), [Exact(t) for t in thresholds])
