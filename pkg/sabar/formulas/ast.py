"""Quantifier-free formulas over polynomial sign atoms."""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from sabar.algebra.poly import MultiPoly
from sabar.algebra.univariate import sign
from sabar.errors import FormulaBudgetError, InputContractError, ZeroPolynomialError

DEFAULT_ATOM_BUDGET = 64


class Relation(Enum):
    LT = "<"
    LE = "<="
    EQ = "="
    GE = ">="
    GT = ">"
    NE = "!="

    @property
    def allowed(self) -> frozenset[int]:
        """Signs of the polynomial for which ``poly rel 0`` holds."""
        return _ALLOWED[self]

    def holds(self, s: int) -> bool:
        return s in _ALLOWED[self]

    @property
    def negated(self) -> Relation:
        return _NEGATION[self]

    @property
    def is_weak(self) -> bool:
        return self in (Relation.LE, Relation.EQ, Relation.GE)

    @property
    def weakened(self) -> Relation:
        return {Relation.LT: Relation.LE, Relation.GT: Relation.GE}.get(self, self)

    @classmethod
    def from_signs(cls, signs: frozenset[int]) -> Relation:
        for rel, allowed in _ALLOWED.items():
            if allowed == signs:
                return rel
        raise ValueError(f"no relation allows exactly {set(signs)}")


_ALLOWED = {
    Relation.LT: frozenset({-1}),
    Relation.LE: frozenset({-1, 0}),
    Relation.EQ: frozenset({0}),
    Relation.GE: frozenset({0, 1}),
    Relation.GT: frozenset({1}),
    Relation.NE: frozenset({-1, 1}),
}

_NEGATION = {
    Relation.LT: Relation.GE,
    Relation.LE: Relation.GT,
    Relation.EQ: Relation.NE,
    Relation.GE: Relation.LT,
    Relation.GT: Relation.LE,
    Relation.NE: Relation.EQ,
}


@dataclass(frozen=True)
class Atom:
    poly: MultiPoly
    rel: Relation

    def __post_init__(self) -> None:
        if self.poly.is_zero():
            raise ZeroPolynomialError("atom polynomial must be nonzero")


@dataclass(frozen=True)
class And:
    children: tuple[Formula, ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise InputContractError("And needs at least one child")


@dataclass(frozen=True)
class Or:
    children: tuple[Formula, ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise InputContractError("Or needs at least one child")


@dataclass(frozen=True)
class Not:
    child: Formula


Formula = Union[Atom, And, Or, Not]

TRUE = Atom(MultiPoly.constant(1), Relation.GE)
FALSE = Atom(MultiPoly.constant(1), Relation.LE)


def conj(children: Sequence[Formula]) -> Formula:
    return children[0] if len(children) == 1 else And(tuple(children))


def disj(children: Sequence[Formula]) -> Formula:
    return children[0] if len(children) == 1 else Or(tuple(children))


def atoms(phi: Formula) -> Iterator[Atom]:
    if isinstance(phi, Atom):
        yield phi
    elif isinstance(phi, Not):
        yield from atoms(phi.child)
    else:
        for child in phi.children:
            yield from atoms(child)


def polys(phi: Formula) -> list[MultiPoly]:
    """Distinct atom polynomials in order of first appearance."""
    seen: dict[MultiPoly, None] = {}
    for a in atoms(phi):
        seen.setdefault(a.poly, None)
    return list(seen)


def variables(phi: Formula) -> tuple[str, ...]:
    return tuple(sorted({v for p in polys(phi) for v in p.variables}))


def evaluate_signs(phi: Formula, sign_of: Callable[[MultiPoly], int]) -> bool:
    """Truth of phi given the sign of each atom polynomial."""
    if isinstance(phi, Atom):
        return phi.rel.holds(sign_of(phi.poly))
    if isinstance(phi, Not):
        return not evaluate_signs(phi.child, sign_of)
    if isinstance(phi, And):
        return all(evaluate_signs(c, sign_of) for c in phi.children)
    return any(evaluate_signs(c, sign_of) for c in phi.children)


def evaluate(phi: Formula, point: Mapping[str, Fraction | int]) -> bool:
    """Exact truth value of phi at a rational point."""
    values: dict[MultiPoly, int] = {}
    for p in polys(phi):
        values[p] = sign(p.evaluate(point))
    return evaluate_signs(phi, values.__getitem__)


# -- disjunctive normal form ---------------------------------------------------

Conjunct = tuple[Atom, ...]


def _nnf(phi: Formula, negate: bool = False) -> Formula:
    """Push negations into atoms and split != into a strict disjunction."""
    if isinstance(phi, Not):
        return _nnf(phi.child, not negate)
    if isinstance(phi, Atom):
        rel = phi.rel.negated if negate else phi.rel
        if rel is Relation.NE:
            return Or((Atom(phi.poly, Relation.LT), Atom(phi.poly, Relation.GT)))
        return Atom(phi.poly, rel)
    children = tuple(_nnf(c, negate) for c in phi.children)
    if isinstance(phi, And) != negate:
        return And(children)
    return Or(children)


def _dnf(phi: Formula, budget: int) -> list[Conjunct]:
    if isinstance(phi, Atom):
        return [(phi,)]
    parts = [_dnf(c, budget) for c in phi.children]  # type: ignore[union-attr]
    if isinstance(phi, Or):
        out = [c for part in parts for c in part]
    else:
        out = [()]
        for part in parts:
            out = [a + b for a in out for b in part]
            _check_budget(out, budget)
    _check_budget(out, budget)
    return out


def _check_budget(conjuncts: list[Conjunct], budget: int) -> None:
    size = sum(len(c) for c in conjuncts)
    if size > budget:
        raise FormulaBudgetError(
            f"DNF expansion needs more than {budget} atoms (reached {size})"
        )


def _dedupe(conjunct: Conjunct) -> Conjunct:
    return tuple(dict.fromkeys(conjunct))


def to_dnf(phi: Formula, budget: int = DEFAULT_ATOM_BUDGET) -> list[Conjunct]:
    """DNF of phi without negations; atoms use <, <=, =, >=, >."""
    out = []
    for conjunct in _dnf(_nnf(phi), budget):
        c = _dedupe(conjunct)
        if c not in out:
            out.append(c)
    return out


# -- printing ------------------------------------------------------------------


def format_formula(phi: Formula) -> str:
    """Canonical text; ``parse_formula(format_formula(phi)) == phi``."""
    if isinstance(phi, Atom):
        return f"({phi.poly} {phi.rel.value} 0)"
    if isinstance(phi, Not):
        inner = format_formula(phi.child)
        return f"!{inner}" if isinstance(phi.child, (Atom, Not)) else f"!({inner})"
    joiner = " & " if isinstance(phi, And) else " | "
    return joiner.join(
        format_formula(c) if isinstance(c, (Atom, Not)) else f"({format_formula(c)})"
        for c in phi.children
    )


@dataclass(frozen=True)
class ClosedFormula:
    """Negation-free DNF with weak atoms only. An empty conjunct is true."""

    dnf: tuple[Conjunct, ...]

    def __post_init__(self) -> None:
        for conjunct in self.dnf:
            for a in conjunct:
                if not a.rel.is_weak:
                    raise InputContractError(f"closed formula has strict atom {format_formula(a)}")

    @classmethod
    def from_formula(cls, phi: Formula, budget: int = DEFAULT_ATOM_BUDGET) -> ClosedFormula:
        """Accept a formula that is closed as written (weak atoms, no negation)."""
        dnf = to_dnf(phi, budget)
        for conjunct in dnf:
            for a in conjunct:
                if not a.rel.is_weak:
                    raise InputContractError(
                        f"{format_formula(phi)} is not P-closed: strict atom {format_formula(a)}"
                    )
        return cls(tuple(dnf))

    def to_formula(self) -> Formula:
        if not self.dnf:
            return FALSE
        return disj([conj(c) if c else TRUE for c in self.dnf])

    def atoms(self) -> list[Atom]:
        return [a for c in self.dnf for a in c]

    def polys(self) -> list[MultiPoly]:
        return list(dict.fromkeys(a.poly for a in self.atoms()))

    def variables(self) -> tuple[str, ...]:
        return tuple(sorted({v for p in self.polys() for v in p.variables}))

    def evaluate(self, point: Mapping[str, Fraction | int]) -> bool:
        return evaluate(self.to_formula(), point)

    def __str__(self) -> str:
        return format_formula(self.to_formula())
