"""Exact realizations of univariate formulas and realizable sign conditions."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sabar.algebra.poly import MultiPoly
from sabar.algebra.univariate import UniPoly, sign
from sabar.errors import InputContractError
from sabar.formulas.ast import Formula, evaluate_signs, polys, variables
from sabar.roots.thom import Order, ThomEncoding, compare, order_roots, separate, signs_at_root

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Point:
    at: ThomEncoding

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Point) and compare(self.at, other.at) is Order.EQ

    def __str__(self) -> str:
        return "{" + str(self.at) + "}"


@dataclass(frozen=True)
class Interval:
    """Interval with Thom-encoded ends; ``None`` is -inf (``lo``) or +inf (``hi``)."""

    lo: ThomEncoding | None
    hi: ThomEncoding | None
    lo_closed: bool = False
    hi_closed: bool = False

    @classmethod
    def open(cls, lo: ThomEncoding | None, hi: ThomEncoding | None) -> Interval:
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo: ThomEncoding | None, hi: ThomEncoding | None) -> Interval:
        return cls(lo, hi, lo is not None, hi is not None)

    @property
    def is_closed(self) -> bool:
        return (self.lo is None or self.lo_closed) and (self.hi is None or self.hi_closed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return False
        return (
            _same_end(self.lo, other.lo)
            and _same_end(self.hi, other.hi)
            and self.lo_closed == other.lo_closed
            and self.hi_closed == other.hi_closed
        )

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"{left}{lo}, {hi}{right}"


Piece = Union[Point, Interval]


def _same_end(a: ThomEncoding | None, b: ThomEncoding | None) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return compare(a, b) is Order.EQ


@dataclass(frozen=True)
class UnivariateRealization:
    """Sorted, disjoint, maximally merged pieces."""

    pieces: tuple[Piece, ...]

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    def is_closed(self) -> bool:
        return all(isinstance(p, Point) or p.is_closed for p in self.pieces)

    def __str__(self) -> str:
        return " u ".join(str(p) for p in self.pieces) if self.pieces else "{}"


@dataclass(frozen=True)
class Cell:
    """A root (``point``) or the open gap between two consecutive roots."""

    point: ThomEncoding | None
    lo: ThomEncoding | None
    hi: ThomEncoding | None
    sample: Fraction | None


def cells(roots: Sequence[ThomEncoding]) -> list[Cell]:
    """Alternating gaps and roots covering the line; ``roots`` must be increasing."""
    roots = separate(roots)
    if not roots:
        return [Cell(None, None, None, Fraction(0))]
    out = [Cell(None, None, roots[0], roots[0].lo - 1)]
    for i, r in enumerate(roots):
        out.append(Cell(r, None, None, None))
        if i + 1 < len(roots):
            out.append(Cell(None, r, roots[i + 1], (r.hi + roots[i + 1].lo) / 2))
    out.append(Cell(None, roots[-1], None, roots[-1].hi + 1))
    return out


def _cell_signs(cell: Cell, qs: Sequence[UniPoly]) -> list[int]:
    if cell.point is not None:
        return signs_at_root(cell.point, qs)
    assert cell.sample is not None
    return [sign(q(cell.sample)) for q in qs]


def _univariate_var(phi: Formula) -> str:
    names = variables(phi)
    if len(names) > 1:
        raise InputContractError(f"formula is not univariate: variables {names}")
    return names[0] if names else "X"


def realize_univariate(phi: Formula) -> UnivariateRealization:
    """Exact realization of a formula in one variable."""
    var = _univariate_var(phi)
    atom_polys = polys(phi)
    unis = [p.to_univariate(var) for p in atom_polys]
    roots = order_roots(u for u in unis if u.degree > 0)
    truth: list[tuple[Cell, bool]] = []
    for cell in cells(roots):
        signs = dict(zip(atom_polys, _cell_signs(cell, unis)))
        truth.append((cell, evaluate_signs(phi, signs.__getitem__)))
    return UnivariateRealization(tuple(_merge(truth)))


def _merge(truth: list[tuple[Cell, bool]]) -> list[Piece]:
    pieces: list[Piece] = []
    i = 0
    while i < len(truth):
        if not truth[i][1]:
            i += 1
            continue
        j = i
        while j + 1 < len(truth) and truth[j + 1][1]:
            j += 1
        first, last = truth[i][0], truth[j][0]
        if i == j and first.point is not None:
            pieces.append(Point(first.point))
        else:
            lo, lo_closed = (first.point, True) if first.point is not None else (first.lo, False)
            hi, hi_closed = (last.point, True) if last.point is not None else (last.hi, False)
            pieces.append(Interval(lo, hi, lo_closed, hi_closed))
        i = j + 1
    return pieces


# -- sign conditions -----------------------------------------------------------


@dataclass(frozen=True)
class SignCondition:
    """Sign of each polynomial of a family, keyed by its index in the family."""

    assignments: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, signs: Sequence[int]) -> SignCondition:
        return cls(tuple(enumerate(signs)))

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.assignments)

    def relaxation(self) -> WeakSignCondition:
        return WeakSignCondition(
            tuple((i, frozenset({0, s})) for i, s in self.assignments)
        )


@dataclass(frozen=True)
class WeakSignCondition:
    """Allowed signs {0}, {0, 1} or {0, -1} per polynomial index."""

    assignments: tuple[tuple[int, frozenset[int]], ...]

    def admits(self, signs: Sequence[int]) -> bool:
        return all(signs[i] in allowed for i, allowed in self.assignments)


def _as_uni(p: UniPoly | MultiPoly) -> UniPoly:
    return p if isinstance(p, UniPoly) else p.to_univariate()


def realizable_sign_conditions(family: Sequence[UniPoly | MultiPoly]) -> set[SignCondition]:
    """Every sign vector the family takes somewhere on the real line.

    Signs are read at each root of each member and at one rational sample in
    each gap between consecutive roots.
    """
    unis = [_as_uni(f) for f in family]
    for u in unis:
        if u.is_zero():
            raise InputContractError("sign conditions need nonzero polynomials")
    roots = order_roots(u for u in unis if u.degree > 0)
    found = {SignCondition.of(_cell_signs(cell, unis)) for cell in cells(roots)}
    logger.debug("%d realizable sign conditions on %d polynomials", len(found), len(unis))
    return found
