"""Projection of polynomial systems onto the level variable by iterated resultants.

The eliminated variables are removed one at a time. Before each step the
system is simplified:

- a monomial factor x^m of an equation splits the system into the branch
  x = 0 and the branch with the factor divided out;
- monomial factors in the infinitesimals are divided out (they are positive);
- an equation of degree one in x with a rational leading coefficient is
  solved for x and substituted into the others.

Otherwise the equation of least degree in some variable is the pivot, and
every other equation containing that variable is replaced by its resultant
with the pivot. The zeros of the result contain the projection of the
zeros of the system, so the returned polynomials may have extra roots.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from sabar.algebra.poly import MultiPoly
from sabar.algebra.resultant import resultant
from sabar.infinitesimals.eps import is_eps

logger = logging.getLogger(__name__)


def _normalize(p: MultiPoly) -> MultiPoly:
    p = p.primitive()
    eps_factor = {v: m for v, m in p.monomial_content().items() if is_eps(v)}
    if eps_factor:
        names = tuple(sorted(eps_factor))
        p = p.divexact(MultiPoly.from_terms(names, {tuple(eps_factor[v] for v in names): 1}))
    return p


def _is_inconsistent(p: MultiPoly, keep: Sequence[str], xs: Sequence[str]) -> bool:
    """A nonzero equation free of X and of the kept variables has no solution."""
    return not any(p.depends_on(v) for v in (*xs, *keep))


def _split_monomial(
    eqs: list[MultiPoly], xs: tuple[str, ...]
) -> tuple[str, list[MultiPoly], list[MultiPoly]] | None:
    for i, e in enumerate(eqs):
        factor = {v: m for v, m in e.monomial_content().items() if v in xs}
        if not factor:
            continue
        v = min(factor)
        quotient = e.divexact(MultiPoly.var(v) ** factor[v])
        on_zero = [q.substitute({v: 0}) for q in eqs]
        divided = eqs[:i] + [quotient] + eqs[i + 1 :]
        return v, on_zero, divided
    return None


def _linear_substitution(
    eqs: list[MultiPoly], live: list[str]
) -> tuple[str, list[MultiPoly]] | None:
    for v in live:
        for i, e in enumerate(eqs):
            if e.degree(v) != 1:
                continue
            rest, lead = e.coefficients_in(v)
            if not lead.is_constant():
                continue
            image = rest.scale(-1 / lead.constant_value())
            return v, [q.substitute({v: image}) for q in eqs[:i] + eqs[i + 1 :]]
    return None


def _pivot(eqs: list[MultiPoly], live: list[str]) -> tuple[str, MultiPoly]:
    candidates = [(v, e) for v in live for e in eqs if e.depends_on(v)]
    return min(candidates, key=lambda ve: (ve[1].degree(ve[0]), len(ve[1].terms), ve[0]))


def _dedupe(eqs: Sequence[MultiPoly]) -> list[MultiPoly]:
    return list(dict.fromkeys(_normalize(e) for e in eqs if not e.is_zero()))


def eliminate(
    equations: Sequence[MultiPoly], xs: Sequence[str], keep: Sequence[str] = ("Y",)
) -> list[list[MultiPoly]]:
    """Eliminate ``xs`` from ``equations``.

    Returns one list of polynomials per consistent branch; each is free of
    ``xs`` and every member involves a variable of ``keep``. An empty list of
    branches means the system has no solutions.
    """
    return _solve(_dedupe(equations), tuple(xs), tuple(keep))


def _solve(
    eqs: list[MultiPoly], xs: tuple[str, ...], keep: tuple[str, ...]
) -> list[list[MultiPoly]]:
    if any(_is_inconsistent(e, keep, xs) for e in eqs):
        return []

    split = _split_monomial(eqs, xs)
    if split is not None:
        v, on_zero, divided = split
        logger.debug("branching on %s = 0", v)
        rest = tuple(x for x in xs if x != v)
        return _solve(_dedupe(on_zero), rest, keep) + _solve(_dedupe(divided), xs, keep)

    live = [v for v in xs if any(e.depends_on(v) for e in eqs)]
    if not live:
        if not eqs:
            logger.warning("every equation was dropped; the branch does not constrain %s", keep)
        return [eqs]

    substituted = _linear_substitution(eqs, live)
    if substituted is not None:
        v, new = substituted
        return _solve(_dedupe(new), tuple(x for x in xs if x != v), keep)

    v, pivot = _pivot(eqs, live)
    new = []
    for g in eqs:
        if g is pivot:
            continue
        if not g.depends_on(v):
            new.append(g)
            continue
        res = resultant(pivot, g, v)
        if res.is_zero():
            logger.warning("zero resultant in %s of %s and %s dropped", v, pivot, g)
            continue
        new.append(res)
    return _solve(_dedupe(new), tuple(x for x in xs if x != v), keep)
