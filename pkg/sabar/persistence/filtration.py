"""Finite filtrations, persistent Betti numbers and barcodes.

Persistent Betti numbers come from one column reduction of each boundary
matrix with rows and columns in filtration order. With ``pivots_{p+1}`` the
(column birth, pivot row birth) pairs of the reduced d_(p+1):

    b_p^{i,j} = n_p(i) - #{pivots of d_p born <= i}
                       - #{pivots of d_(p+1) with column born <= j, row born <= i}

The reduction of each dimension is computed once per filtration and cached
behind a lock, so concurrent queries see only completed entries.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from sabar.errors import FiltrationError, IndexRangeError, InvariantError
from sabar.persistence.complex import Simplex, SimplicialComplex, boundary_faces, normalize
from sabar.persistence.linalg import reduce_columns
from sabar.persistence.values import (
    INF,
    FiltrationValue,
    Index,
    compare_values,
    sort_key,
)
from sabar.roots.thom import Order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bar:
    birth: FiltrationValue
    death: FiltrationValue
    mult: int

    @property
    def is_infinite(self) -> bool:
        return self.death == INF


@dataclass(frozen=True)
class Barcode:
    p: int
    bars: tuple[Bar, ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for bar in self.bars:
            if bar.mult <= 0:
                raise FiltrationError(f"bar multiplicity must be positive: {bar}")
            key = (bar.birth, bar.death)
            if key in seen:
                raise FiltrationError(f"duplicate bar {key}")
            seen.add(key)

    def bars_sorted(self) -> list[Bar]:
        return sorted(self.bars, key=lambda b: (sort_key(b.birth), sort_key(b.death)))

    def infinite(self) -> list[Bar]:
        return [b for b in self.bars_sorted() if b.is_infinite]

    @property
    def total(self) -> int:
        return sum(b.mult for b in self.bars)

    def __len__(self) -> int:
        return len(self.bars)

    def as_tuples(self) -> set[tuple[FiltrationValue, FiltrationValue, int]]:
        return {(b.birth, b.death, b.mult) for b in self.bars}


@dataclass
class _Reduction:
    # (column birth, row birth) for every nonzero reduced column of d_p
    pivots: list[tuple[int, int]]
    # simplices that are pivot rows
    rows: frozenset[Simplex]


class Filtration:
    """K_0 ⊆ K_1 ⊆ ... ⊆ K_N given by the index at which each simplex is born."""

    def __init__(
        self,
        births: Mapping[Simplex, int],
        length: int,
        values: Sequence[FiltrationValue] | None = None,
    ) -> None:
        if length < 1:
            raise FiltrationError("a filtration needs at least one complex")
        self.births: dict[Simplex, int] = {}
        for s, b in births.items():
            simplex = normalize(s)
            if not 0 <= b < length:
                raise FiltrationError(f"birth index {b} of {simplex} outside 0..{length - 1}")
            self.births[simplex] = b
        for s, b in self.births.items():
            for _, face in boundary_faces(s):
                if face not in self.births:
                    raise FiltrationError(f"face {face} of {s} is missing")
                if self.births[face] > b:
                    raise FiltrationError(f"face {face} is born after its coface {s}")
        self.length = length
        if values is not None:
            values = list(values)
            if len(values) != length:
                raise FiltrationError(f"{len(values)} values for {length} complexes")
            for a, b in zip(values, values[1:]):
                if compare_values(a, b) is not Order.LT:
                    raise FiltrationError(f"filtration values not increasing: {a}, {b}")
        self.values: list[FiltrationValue] | None = values
        # filtration order: birth, then dimension, then lexicographic
        self.order = sorted(self.births, key=lambda s: (self.births[s], len(s), s))
        self._lock = threading.Lock()
        self._reductions: dict[int, _Reduction] = {}
        self._counts: dict[int, list[int]] = {}

    @classmethod
    def from_births(
        cls, births: Mapping[Simplex, int], values: Sequence[FiltrationValue] | None = None
    ) -> Filtration:
        length = len(values) if values is not None else max(births.values(), default=0) + 1
        return cls(births, length, values)

    @classmethod
    def from_complexes(
        cls,
        complexes: Sequence[SimplicialComplex],
        values: Sequence[FiltrationValue] | None = None,
    ) -> Filtration:
        births: dict[Simplex, int] = {}
        for i, k in enumerate(complexes):
            if i and not complexes[i - 1].issubset(k):
                raise FiltrationError(f"complex {i - 1} is not contained in complex {i}")
            for s in k.simplices:
                births.setdefault(s, i)
        return cls(births, len(complexes), values)

    @property
    def n(self) -> int:
        """Index N of the last complex."""
        return self.length - 1

    def complex_at(self, i: int) -> SimplicialComplex:
        """K_i, with K_{-1} empty and K_{N+1} = K_N."""
        if not -1 <= i <= self.length:
            raise IndexRangeError(f"index {i} outside -1..{self.length}")
        return SimplicialComplex(frozenset(s for s, b in self.births.items() if b <= i))

    def complexes(self) -> list[SimplicialComplex]:
        return [self.complex_at(i) for i in range(self.length)]

    def value(self, i: int) -> FiltrationValue:
        if i == self.length:
            return INF
        return self.values[i] if self.values is not None else Index(i)

    @property
    def max_dim(self) -> int:
        return max((len(s) - 1 for s in self.births), default=-1)

    # -- reductions ------------------------------------------------------------

    def _reduction(self, p: int) -> _Reduction:
        """Reduced d_p (p >= 1) in filtration order, cached.

        Columns of p-simplices that are pivot rows of the reduced d_(p+1)
        reduce to zero and are skipped.
        """
        with self._lock:
            cached = self._reductions.get(p)
        if cached is not None:
            return cached
        if p > self.max_dim:
            with self._lock:
                return self._reductions.setdefault(p, _Reduction([], frozenset()))
        cleared = self._reduction(p + 1).rows if p > 0 else frozenset()
        cols = [s for s in self.order if len(s) == p + 1 and s not in cleared]
        rows = [s for s in self.order if len(s) == p]
        row_index = {s: i for i, s in enumerate(rows)}
        columns = [
            {row_index[face]: sgn for sgn, face in boundary_faces(s)} if p > 0 else {}
            for s in cols
        ]
        lows = reduce_columns(columns)
        paired = [(s, rows[low]) for s, low in zip(cols, lows) if low is not None]
        result = _Reduction(
            [(self.births[s], self.births[r]) for s, r in paired],
            frozenset(r for _, r in paired),
        )
        logger.debug(
            "reduced d_%d: %d columns (%d cleared), %d pivots",
            p,
            len(cols),
            len(cleared),
            len(paired),
        )
        with self._lock:
            return self._reductions.setdefault(p, result)

    def _count(self, p: int, i: int) -> int:
        """Number of p-simplices in K_i."""
        with self._lock:
            counts = self._counts.get(p)
        if counts is None:
            counts = [0] * (self.length + 1)
            for s, b in self.births.items():
                if len(s) == p + 1:
                    counts[b] += 1
            for k in range(1, self.length + 1):
                counts[k] += counts[k - 1]
            with self._lock:
                counts = self._counts.setdefault(p, counts)
        if i < 0:
            return 0
        return counts[min(i, self.length - 1)]

    def _check_pair(self, i: int, j: int, low: int) -> None:
        if not (low <= i <= j <= self.length):
            raise IndexRangeError(f"need {low} <= i <= j <= {self.length}, got i={i}, j={j}")

    # -- persistence -------------------------------------------------------------

    def persistent_betti(self, p: int, i: int, j: int) -> int:
        """Rank of H_p(K_i) -> H_p(K_j)."""
        if p < 0:
            raise IndexRangeError("dimension must be non-negative")
        self._check_pair(i, j, -1)
        if i < 0:
            return 0
        cycles = self._count(p, i) - (
            sum(1 for c, _ in self._reduction(p).pivots if c <= i) if p > 0 else 0
        )
        boundaries = sum(1 for c, r in self._reduction(p + 1).pivots if c <= j and r <= i)
        return cycles - boundaries

    def rank_table(self, p: int) -> list[list[int]]:
        """b_p^{i,j} for 0 <= i <= j <= N (zero below the diagonal)."""
        n = self.length
        return [
            [self.persistent_betti(p, i, j) if j >= i else 0 for j in range(n)]
            for i in range(n)
        ]

    def betti(self, p: int, i: int) -> int:
        return self.persistent_betti(p, i, i)

    def multiplicity(self, p: int, i: int, j: int) -> int:
        """mu_p^{i,j}; j = N+1 stands for death at infinity."""
        self._check_pair(i, j, 0)
        if i == j:
            return 0
        b = self.persistent_betti
        if j == self.length:
            return b(p, i, self.n) - b(p, i - 1, self.n)
        return (b(p, i, j - 1) - b(p, i, j)) - (b(p, i - 1, j - 1) - b(p, i - 1, j))

    def barcode(self, p: int) -> Barcode:
        bars = []
        for i in range(self.length):
            for j in range(i + 1, self.length + 1):
                mu = self.multiplicity(p, i, j)
                if mu < 0:
                    raise InvariantError(f"negative multiplicity {mu} at p={p}, ({i}, {j})")
                if mu:
                    bars.append(Bar(self.value(i), self.value(j), mu))
        return Barcode(p, tuple(bars))

    def barcodes(self, max_dim: int) -> list[Barcode]:
        return [self.barcode(p) for p in range(max_dim + 1)]

    def __repr__(self) -> str:
        return f"Filtration({len(self.births)} simplices, {self.length} steps)"


def barcode(f: Filtration, p: int) -> Barcode:
    return f.barcode(p)


def persistent_betti(f: Filtration, p: int, i: int, j: int) -> int:
    return f.persistent_betti(p, i, j)


def multiplicity(f: Filtration, p: int, i: int, j: int) -> int:
    return f.multiplicity(p, i, j)


def barcodes(f: Filtration, max_dim: int) -> list[Barcode]:
    return f.barcodes(max_dim)
