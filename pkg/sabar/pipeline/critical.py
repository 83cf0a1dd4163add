"""Critical values of the filtering polynomial on the perturbed family."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from sabar.algebra.poly import MultiPoly
from sabar.errors import ExactPathUnavailableError
from sabar.infinitesimals.eps import EpsPoly, remove_infinitesimals
from sabar.pipeline.elimination import eliminate
from sabar.pipeline.family import (
    LEVEL_VAR,
    PerturbedFamily,
    SemialgebraicInput,
    critical_systems,
    perturb,
)
from sabar.roots.thom import Order, ThomEncoding, compare, separate

logger = logging.getLogger(__name__)

DEFAULT_MAX_EXACT_DIM = 3


def _branch_poly(branch: list[MultiPoly]) -> MultiPoly:
    """The branch equation with the fewest candidate values."""
    return min(branch, key=lambda p: (p.degree(LEVEL_VAR), len(p.terms), str(p)))


def critical_value_polys(
    fam: PerturbedFamily, max_exact_dim: int = DEFAULT_MAX_EXACT_DIM
) -> list[EpsPoly]:
    """Polynomials in Y (with infinitesimal coefficients) whose roots contain every
    critical value of P on the intersections of the perturbed family."""
    k = len(fam.variables)
    if k > max_exact_dim:
        raise ExactPathUnavailableError(
            f"exact critical values need k <= {max_exact_dim}, got k={k}; "
            "pass explicit levels to use the grid-only path"
        )
    found: dict[MultiPoly, None] = {}
    for system in critical_systems(fam):
        for branch in eliminate(system.equations, fam.variables, (LEVEL_VAR,)):
            if not branch:
                continue
            found.setdefault(_branch_poly(branch).primitive(), None)
    logger.info("elimination produced %d polynomials in %s", len(found), LEVEL_VAR)
    return [EpsPoly(p, LEVEL_VAR) for p in found]


@dataclass(frozen=True)
class CriticalValueList:
    """s_0 < ... < s_M with rational samples interleaving them.

    ``samples[0]`` lies below s_0, ``samples[i + 1]`` strictly inside
    (s_i, s_{i+1}) and the last one above s_M.
    """

    encodings: tuple[ThomEncoding, ...]
    samples: tuple[Fraction, ...]

    @classmethod
    def build(cls, encodings: Sequence[ThomEncoding]) -> CriticalValueList:
        if not encodings:
            return cls((), (Fraction(0),))
        sep = separate(encodings)
        samples = [sep[0].lo - 1]
        samples.extend((a.hi + b.lo) / 2 for a, b in zip(sep, sep[1:]))
        samples.append(sep[-1].hi + 1)
        return cls(tuple(sep), tuple(samples))

    def with_levels(self, levels: Iterable[Fraction | int]) -> CriticalValueList:
        """Insert extra rational values; values already present are not repeated."""
        merged = list(self.encodings)
        for level in levels:
            t = ThomEncoding.from_rational(Fraction(level), LEVEL_VAR)
            if not any(compare(t, s) is Order.EQ for s in merged):
                merged.append(t)
        merged.sort(key=cmp_to_key(lambda a, b: int(compare(a, b))))
        return CriticalValueList.build(merged)

    @property
    def levels(self) -> tuple[Fraction, ...]:
        """Sub-level values of K_0 .. K_M: the samples just above each s_i."""
        return self.samples[1:]

    def __len__(self) -> int:
        return len(self.encodings)


def critical_values(
    inp: SemialgebraicInput, max_exact_dim: int = DEFAULT_MAX_EXACT_DIM
) -> CriticalValueList:
    fam = perturb(inp)
    polys = critical_value_polys(fam, max_exact_dim)
    values = CriticalValueList.build(remove_infinitesimals(polys))
    logger.info("%d critical values", len(values))
    return values
