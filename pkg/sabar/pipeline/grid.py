"""Sub-level complexes on the Freudenthal triangulation of a cubical grid.

The cube [-B, B]^k, B = ceil(sqrt(R)), is cut into grid_n^k cells, each split
into k! simplices along the monotone lattice paths from its lowest corner.
Polynomials are evaluated exactly at the vertices: with vertex coordinates
c/grid_n for integers c, ``L * grid_n^d * p`` is an integer for L the lcm
of the coefficient denominators and d the total degree of p.
"""

from __future__ import annotations

import logging
import os
from bisect import bisect_left
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import isqrt, lcm

from sabar.algebra.poly import MultiPoly
from sabar.errors import InputContractError
from sabar.formulas.ast import Relation
from sabar.persistence.complex import Simplex, SimplicialComplex, all_faces
from sabar.persistence.filtration import Filtration
from sabar.persistence.values import FiltrationValue
from sabar.pipeline.family import SemialgebraicInput

logger = logging.getLogger(__name__)

THREADS_ENV = "SABAR_THREADS"


def thread_count(default: int = 1) -> int:
    """Worker cap from SABAR_THREADS, falling back to ``default``."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        logger.warning("ignoring %s=%r: expected a positive integer", THREADS_ENV, raw)
        return default
    return value


def half_width(radius: Fraction) -> int:
    """Smallest integer B with B^2 >= radius."""
    ceiling = -(-radius.numerator // radius.denominator)
    b = isqrt(ceiling)
    return b if b * b >= ceiling else b + 1


@dataclass(frozen=True)
class Grid:
    k: int
    n: int
    half: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InputContractError(f"grid_n must be at least 2, got {self.n}")

    def numerator(self, m: int) -> int:
        """Coordinate of grid index m times n."""
        return self.half * (2 * m - self.n)

    def coordinate(self, m: int) -> Fraction:
        return Fraction(self.numerator(m), self.n)

    def vertex_id(self, index: Sequence[int]) -> int:
        vid = 0
        for m in reversed(index):
            vid = vid * (self.n + 1) + m
        return vid

    def vertex_index(self, vid: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            vid, m = divmod(vid, self.n + 1)
            out.append(m)
        return tuple(out)

    @property
    def vertex_count(self) -> int:
        return (self.n + 1) ** self.k

    def cells(self) -> Iterator[tuple[int, ...]]:
        return product(range(self.n), repeat=self.k)

    def corners(self, cell: tuple[int, ...]) -> list[int]:
        return [
            self.vertex_id([c + d for c, d in zip(cell, bits)])
            for bits in product((0, 1), repeat=self.k)
        ]

    def freudenthal(self, cell: tuple[int, ...]) -> list[Simplex]:
        """The k! top simplices of a cell; vertex ids increase along each path."""
        tops = []
        for order in permutations(range(self.k)):
            point = list(cell)
            path = [self.vertex_id(point)]
            for axis in order:
                point[axis] += 1
                path.append(self.vertex_id(point))
            tops.append(tuple(path))
        return tops


class ScaledPoly:
    """Exact evaluation of a polynomial at grid vertices, scaled to an integer."""

    def __init__(self, poly: MultiPoly, variables: Sequence[str], grid: Grid) -> None:
        self.grid = grid
        self.degree = max(poly.degree(), 0)
        denominators = lcm(*(c.denominator for c in poly.terms.values())) if poly.terms else 1
        self.scale = Fraction(1, denominators * grid.n**self.degree)
        slots = [variables.index(v) for v in poly.variables]
        self.terms = [
            (
                int(c * denominators) * grid.n ** (self.degree - sum(exp)),
                [(slot, e) for slot, e in zip(slots, exp) if e],
            )
            for exp, c in poly.terms.items()
        ]

    def at(self, index: Sequence[int]) -> int:
        coords = [self.grid.numerator(m) for m in index]
        total = 0
        for c, factors in self.terms:
            for slot, e in factors:
                c *= coords[slot] ** e
            total += c
        return total

    def value(self, scaled: int) -> Fraction:
        return scaled * self.scale


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _atom_holds(rel: Relation, lo: int, hi: int) -> bool:
    """Whether ``rel`` holds on a simplex whose vertex signs range over [lo, hi]."""
    if rel is Relation.LE:
        return hi <= 0
    if rel is Relation.GE:
        return lo >= 0
    return lo <= 0 <= hi


def _atom_possible(rel: Relation, lo: int, hi: int) -> bool:
    """Whether ``rel`` can hold on some simplex of a cell whose corner signs range over [lo, hi]."""
    if rel is Relation.LE:
        return lo <= 0
    if rel is Relation.GE:
        return hi >= 0
    return lo <= 0 <= hi


class SublevelBuilder:
    """Vertex data and admissibility tests shared by every sub-level complex of one input."""

    def __init__(self, inp: SemialgebraicInput, grid_n: int, threads: int | None = None) -> None:
        self.inp = inp
        self.grid = Grid(inp.k, grid_n, half_width(inp.radius))
        self.threads = threads if threads is not None else thread_count()
        xs = inp.variables
        atom_polys = inp.formula.polys()
        self.conjuncts = [
            [(atom_polys.index(a.poly), a.rel) for a in conjunct] for conjunct in inp.formula.dnf
        ]
        self.atoms = [ScaledPoly(p, xs, self.grid) for p in atom_polys]
        self.level = ScaledPoly(inp.poly, xs, self.grid)
        self.signs: list[list[int]] = [[] for _ in self.atoms]
        self.values: list[int] = []
        self._evaluate()

    def _evaluate_chunk(self, start: int, stop: int) -> tuple[list[list[int]], list[int]]:
        signs: list[list[int]] = [[] for _ in self.atoms]
        values = []
        for vid in range(start, stop):
            index = self.grid.vertex_index(vid)
            for out, atom in zip(signs, self.atoms):
                out.append(_sign(atom.at(index)))
            values.append(self.level.at(index))
        return signs, values

    def _evaluate(self) -> None:
        total = self.grid.vertex_count
        workers = max(1, min(self.threads, total))
        step = -(-total // workers)
        bounds = [(s, min(s + step, total)) for s in range(0, total, step)]
        logger.info(
            "evaluating %d vertices of a %d^%d grid on %d threads",
            total,
            self.grid.n,
            self.grid.k,
            workers,
        )
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda b: self._evaluate_chunk(*b), bounds))
        for signs, values in chunks:
            for out, part in zip(self.signs, signs):
                out.extend(part)
            self.values.extend(values)

    def _sign_range(self, atom: int, vertices: Sequence[int]) -> tuple[int, int]:
        signs = self.signs[atom]
        seen = [signs[v] for v in vertices]
        return min(seen), max(seen)

    def admissible(self, simplex: Sequence[int]) -> bool:
        return any(
            all(_atom_holds(rel, *self._sign_range(i, simplex)) for i, rel in conjunct)
            for conjunct in self.conjuncts
        )

    def cell_possible(self, corners: Sequence[int]) -> bool:
        return any(
            all(_atom_possible(rel, *self._sign_range(i, corners)) for i, rel in conjunct)
            for conjunct in self.conjuncts
        )

    def births(self, levels: Sequence[Fraction]) -> dict[Simplex, int]:
        """Birth index of every simplex of the nested complexes at ``levels``.

        A simplex enters K_i when it is admissible and P <= levels[i] at all its
        vertices; K_i is the closure of those simplices.
        """
        scaled = [t / self.level.scale for t in levels]
        if not scaled:
            return {}
        top = scaled[-1]
        births: dict[Simplex, int] = {}
        seen: set[Simplex] = set()
        for cell in self.grid.cells():
            corners = self.grid.corners(cell)
            if min(self.values[v] for v in corners) > top:
                continue
            if not self.cell_possible(corners):
                continue
            for simplex in self.grid.freudenthal(cell):
                for face in all_faces(simplex):
                    if face in seen:
                        continue
                    seen.add(face)
                    peak = max(self.values[v] for v in face)
                    if peak > top or not self.admissible(face):
                        continue
                    birth = bisect_left(scaled, peak)
                    for sub in all_faces(face):
                        if births.get(sub, birth + 1) > birth:
                            births[sub] = birth
        logger.debug("%d simplices over %d levels", len(births), len(levels))
        return births


def sublevel_complex(
    inp: SemialgebraicInput, t: Fraction, grid_n: int, threads: int | None = None
) -> SimplicialComplex:
    """Closure of the admissible grid simplices with P <= t at every vertex."""
    builder = SublevelBuilder(inp, grid_n, threads)
    return SimplicialComplex(frozenset(builder.births([Fraction(t)])))


def sublevel_filtration(
    inp: SemialgebraicInput,
    levels: Sequence[Fraction],
    grid_n: int,
    values: Sequence[FiltrationValue] | None = None,
    threads: int | None = None,
) -> Filtration:
    """All sub-level complexes at increasing ``levels`` as one birth-indexed filtration."""
    levels = [Fraction(t) for t in levels]
    if any(a >= b for a, b in zip(levels, levels[1:])):
        raise InputContractError("levels must be strictly increasing")
    if not levels:
        raise InputContractError("at least one level is required")
    builder = SublevelBuilder(inp, grid_n, threads)
    return Filtration(builder.births(levels), len(levels), values)
