"""Inputs of the semi-algebraic pipeline and their perturbation."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from sabar.algebra.poly import MultiPoly
from sabar.algebra.resultant import bareiss_determinant
from sabar.errors import InputContractError
from sabar.formulas.ast import ClosedFormula
from sabar.infinitesimals.eps import eps_name, is_eps

logger = logging.getLogger(__name__)

LEVEL_VAR = "Y"


@dataclass(frozen=True)
class SemialgebraicInput:
    """Closed formula, filtering polynomial P, ball constant R (P_0 = sum X^2 - R), level."""

    formula: ClosedFormula
    poly: MultiPoly
    radius: Fraction
    level: int

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise InputContractError("radius must be positive")
        if self.level < 0:
            raise InputContractError("level must be non-negative")
        names = self.variables
        if not names:
            raise InputContractError("the input needs at least one variable")
        reserved = [v for v in names if v == LEVEL_VAR or is_eps(v)]
        if reserved:
            raise InputContractError(f"variable names {reserved} are reserved")

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.formula.variables()) | set(self.poly.variables)))

    @property
    def k(self) -> int:
        return len(self.variables)


@dataclass(frozen=True)
class Member:
    """One polynomial of the perturbed family.

    ``source`` is 0 for the ball polynomial, i for P_i and s+1 for P - Y;
    ``sign`` is the sign of the infinitesimal added (0 when unperturbed).
    """

    poly: MultiPoly
    source: int
    sign: int

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class PerturbedFamily:
    members: tuple[Member, ...]
    variables: tuple[str, ...]

    @property
    def level_member(self) -> Member:
        return self.members[-1]

    def polys(self) -> list[MultiPoly]:
        return [m.poly for m in self.members]


def perturb(inp: SemialgebraicInput) -> PerturbedFamily:
    """P_0 = sum X_i^2 - R, P_i + e_i and P_i - e_i for each formula polynomial, and P - Y."""
    xs = inp.variables
    ball = sum((MultiPoly.var(x) ** 2 for x in xs), MultiPoly.zero()) - inp.radius
    members = [Member(ball, 0, 0)]
    polys = [p for p in inp.formula.polys() if not p.is_constant()]
    for i, p in enumerate(polys, start=1):
        eps = MultiPoly.var(eps_name(i))
        members.append(Member(p + eps, i, 1))
        members.append(Member(p - eps, i, -1))
    members.append(Member(inp.poly - MultiPoly.var(LEVEL_VAR), len(polys) + 1, 0))
    logger.debug("perturbed family has %d members", len(members))
    return PerturbedFamily(tuple(members), xs)


@dataclass(frozen=True)
class CriticalSystem:
    """Equations whose common zeros over X project onto critical values of Y.

    For card(Q) <= k the equations are Q and all maximal minors of the
    X-Jacobian of Q; ``jac_poly`` is the sum of their squares. For
    card(Q) = k + 1 the equations are Q and ``sigma_poly`` is the sum of squares.
    """

    members: tuple[Member, ...]
    equations: tuple[MultiPoly, ...]
    jac_poly: MultiPoly | None = None
    sigma_poly: MultiPoly | None = None


def jacobian_minors(polys: list[MultiPoly], xs: tuple[str, ...]) -> list[MultiPoly]:
    """All card(polys) x card(polys) minors of the Jacobian with respect to xs."""
    rows = [[p.diff(x) for x in xs] for p in polys]
    size = len(polys)
    minors = []
    for cols in combinations(range(len(xs)), size):
        minor = bareiss_determinant([[row[c] for c in cols] for row in rows])
        if not minor.is_zero():
            minors.append(minor)
    return minors


def _subsets(fam: PerturbedFamily) -> Iterator[tuple[Member, ...]]:
    """Subsets containing P - Y, at most k + 1 members, never both copies of one P_i."""
    k = len(fam.variables)
    others = fam.members[:-1]
    for size in range(0, k + 1):
        for combo in combinations(others, size):
            sources = [m.source for m in combo]
            if len(set(sources)) != len(sources):
                continue
            yield combo + (fam.level_member,)


def critical_systems(fam: PerturbedFamily) -> list[CriticalSystem]:
    k = len(fam.variables)
    systems = []
    for q in _subsets(fam):
        polys = [m.poly for m in q]
        if len(q) <= k:
            minors = jacobian_minors(polys, fam.variables)
            jac = sum((m * m for m in minors), MultiPoly.zero())
            systems.append(CriticalSystem(q, tuple(polys + minors), jac_poly=jac))
        else:
            sigma = sum((p * p for p in polys), MultiPoly.zero())
            systems.append(CriticalSystem(q, tuple(polys), sigma_poly=sigma))
    logger.info("%d critical systems for k=%d", len(systems), k)
    return systems
