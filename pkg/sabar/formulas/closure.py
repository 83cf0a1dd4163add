"""Closed formulas with the same realization as a univariate formula.

Relaxing strict atoms one by one is wrong in general: ``(X^2*(X-1) > 0) &
((X >= 2) | (X <= 0))`` is realized by [2, +inf) but its naive weakening also
admits 0. Replacing a strict condition by the relaxations of the realizable
sign conditions on a derivative-closed family gives exactly the closure of
its realization (Thom's lemma).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import product
from typing import NoReturn

from sabar.algebra.poly import MultiPoly
from sabar.algebra.univariate import UniPoly, derivatives
from sabar.errors import FormulaBudgetError, InvariantError, NotClosedError
from sabar.formulas.ast import (
    DEFAULT_ATOM_BUDGET,
    Atom,
    ClosedFormula,
    Conjunct,
    Formula,
    Relation,
    to_dnf,
    variables,
)
from sabar.formulas.realization import (
    SignCondition,
    realizable_sign_conditions,
    realize_univariate,
)

logger = logging.getLogger(__name__)


def _derivative_closure(polys: Sequence[UniPoly]) -> list[UniPoly]:
    """Union of the Der tuples, without duplicates or constants."""
    family: dict[UniPoly, None] = {}
    for p in polys:
        for d in derivatives(p):
            if d.degree > 0:
                family.setdefault(d.primitive(), None)
    return list(family)


def _relaxed_atoms(
    family: Sequence[UniPoly], condition: SignCondition, var: str
) -> tuple[Atom, ...]:
    weak = {0: Relation.EQ, 1: Relation.GE, -1: Relation.LE}
    return tuple(
        Atom(MultiPoly.from_coefficients(var, family[i].coeffs), weak[s])
        for i, s in condition.assignments
    )


def _conjunct_truth(conjunct: Conjunct) -> tuple[bool, list[Atom]]:
    """Split off constant atoms: (are they all true, remaining atoms)."""
    ok = True
    rest = []
    for a in conjunct:
        if a.poly.is_constant():
            value = a.poly.constant_value()
            ok = ok and a.rel.holds((value > 0) - (value < 0))
        else:
            rest.append(a)
    return ok, rest


def _close_conjunct(conjunct: list[Atom], var: str, budget: int) -> list[Conjunct]:
    """Closure of the realization of one conjunct, as a DNF."""
    unis = [a.poly.to_univariate(var).primitive() for a in conjunct]
    family = _derivative_closure(unis)
    index = {p: i for i, p in enumerate(family)}
    scales = [a.poly.to_univariate(var).lc for a in conjunct]
    out: list[Conjunct] = []
    for condition in sorted(realizable_sign_conditions(family), key=lambda c: c.signs):
        signs = condition.signs
        # primitive() made the leading coefficient positive; undo the sign flip
        if all(
            a.rel.holds(signs[index[u]] * (1 if scale > 0 else -1))
            for a, u, scale in zip(conjunct, unis, scales)
        ):
            out.append(_relaxed_atoms(family, condition, var))
            if sum(len(c) for c in out) > budget:
                _over_budget(budget)
    return out


def _close_atomwise(conjunct: list[Atom], var: str, budget: int) -> list[Conjunct]:
    """Relax every strict atom on its own Der tuple and distribute."""
    options: list[list[Conjunct]] = []
    for a in conjunct:
        if a.rel.is_weak:
            options.append([(a,)])
            continue
        u = a.poly.to_univariate(var)
        family = derivatives(u)
        choices = []
        for condition in sorted(realizable_sign_conditions(family), key=lambda c: c.signs):
            if a.rel.holds(condition.signs[0]):
                weak = _relaxed_atoms(family, condition, var)
                choices.append(tuple(x for x in weak if not x.poly.is_constant()))
        options.append(choices)
    out = [tuple(a for part in combo for a in part) for combo in product(*options)]
    if sum(len(c) for c in out) > budget:
        _over_budget(budget)
    return out


def _over_budget(budget: int) -> NoReturn:
    raise FormulaBudgetError(f"closed formula needs more than {budget} atoms")


def make_closed(
    theta: Formula, *, per_conjunct: bool = True, budget: int = DEFAULT_ATOM_BUDGET
) -> ClosedFormula:
    """A negation-free DNF of weak atoms with the same realization as ``theta``.

    ``theta`` must be univariate with a closed realization. With
    ``per_conjunct=False`` each strict atom is relaxed separately; that variant
    can enlarge the realization, e.g. ``(X > 0) & (X < 0)`` becomes {0}.
    """
    realization = realize_univariate(theta)
    if not realization.is_closed():
        raise NotClosedError()
    names = variables(theta)
    var = names[0] if names else "X"
    dnf: list[Conjunct] = []
    for conjunct in to_dnf(theta, budget):
        ok, rest = _conjunct_truth(conjunct)
        if not ok:
            continue
        closed = (
            _close_conjunct(rest, var, budget)
            if per_conjunct
            else _close_atomwise(rest, var, budget)
        )
        for c in closed:
            if c not in dnf:
                dnf.append(c)
        if sum(len(c) for c in dnf) > budget:
            _over_budget(budget)
    psi = ClosedFormula(tuple(dnf))
    if per_conjunct and realize_univariate(psi.to_formula()) != realization:
        raise InvariantError(f"closed form {psi} changed the realization of the input")
    logger.debug("closed %d conjuncts into %d", len(dnf), len(psi.dnf))
    return psi


def weaken(theta: Formula, budget: int = DEFAULT_ATOM_BUDGET) -> ClosedFormula:
    """Replace < by <= and > by >= in the DNF of theta (not realization-preserving)."""
    dnf: list[Conjunct] = []
    for conjunct in to_dnf(theta, budget):
        c = tuple(dict.fromkeys(Atom(a.poly, a.rel.weakened) for a in conjunct))
        if c not in dnf:
            dnf.append(c)
    return ClosedFormula(tuple(dnf))
