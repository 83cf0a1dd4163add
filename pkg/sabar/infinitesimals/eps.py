"""Polynomials with infinitesimal coefficients and their removal.

An ``EpsPoly`` is a polynomial in a main variable (``T`` by default) whose
coefficients are polynomials in the infinitesimals ``e0, e1, ...`` ordered
``e_m << ... << e1 << e0 << 1``.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from sabar.algebra.parser import parse_poly
from sabar.algebra.poly import Exponent, MultiPoly
from sabar.algebra.univariate import UniPoly
from sabar.errors import InputContractError, ZeroPolynomialError
from sabar.roots.thom import ThomEncoding, count_open, order_roots, separate

logger = logging.getLogger(__name__)

EPS_RE = re.compile(r"e(\d+)$")


def eps_name(i: int) -> str:
    return f"e{i}"


def eps_index(name: str) -> int:
    match = EPS_RE.match(name)
    if not match:
        raise ValueError(f"{name!r} is not an infinitesimal")
    return int(match.group(1))


def is_eps(name: str) -> bool:
    return EPS_RE.match(name) is not None


@dataclass(frozen=True)
class EpsPoly:
    body: MultiPoly
    main: str = "T"

    def __post_init__(self) -> None:
        if self.body.is_zero():
            raise ZeroPolynomialError("EpsPoly must be nonzero")
        stray = [v for v in self.body.variables if v != self.main and not is_eps(v)]
        if stray:
            raise InputContractError(f"unexpected variables {stray} in {self.body}")

    @classmethod
    def parse(cls, text: str, main: str = "T") -> EpsPoly:
        return cls(parse_poly(text), main)

    @property
    def eps_vars(self) -> tuple[str, ...]:
        """Infinitesimals present, strongest (e0) first."""
        return tuple(sorted((v for v in self.body.variables if is_eps(v)), key=eps_index))

    def substitute_eta(self, eta: Fraction) -> UniPoly:
        """Real polynomial obtained from e_i -> eta^(i+1)."""
        values = {v: Fraction(eta) ** (eps_index(v) + 1) for v in self.eps_vars}
        return self.body.substitute(values).to_univariate(self.main)

    def __str__(self) -> str:
        return str(self.body)


@dataclass(frozen=True)
class CoefficientDecomposition:
    """G = sum of monomial * part, monomials in the infinitesimals only."""

    main: str
    parts: tuple[tuple[MultiPoly, UniPoly], ...]

    def reassemble(self) -> MultiPoly:
        total = MultiPoly.zero()
        for monomial, part in self.parts:
            total = total + monomial * part.to_multipoly()
        return total

    def support(self) -> list[MultiPoly]:
        return [m for m, _ in self.parts]


def _monomial_key(item: tuple[tuple[str, ...], Exponent]) -> tuple[int, tuple[int, ...]]:
    names, exp = item
    dense: dict[int, int] = {eps_index(n): e for n, e in zip(names, exp)}
    width = max(dense, default=-1) + 1
    return (sum(exp), tuple(-dense.get(i, 0) for i in range(width)))


def decompose(g: EpsPoly) -> CoefficientDecomposition:
    """Group the terms of g by their monomial in the infinitesimals."""
    variables = g.body.variables
    eps_slots = [i for i, v in enumerate(variables) if is_eps(v)]
    eps_names = tuple(variables[i] for i in eps_slots)
    main_slot = variables.index(g.main) if g.main in variables else None
    groups: dict[Exponent, dict[int, Fraction]] = {}
    for exp, c in g.body.terms.items():
        key = tuple(exp[i] for i in eps_slots)
        degree = exp[main_slot] if main_slot is not None else 0
        groups.setdefault(key, {})[degree] = c
    ordered = sorted(groups, key=lambda k: _monomial_key((eps_names, k)))
    parts = []
    for key in ordered:
        coeffs = groups[key]
        part = UniPoly.from_coeffs(
            [coeffs.get(d, Fraction(0)) for d in range(max(coeffs) + 1)], g.main
        )
        monomial = MultiPoly.from_terms(eps_names, {key: 1})
        parts.append((monomial, part))
    return CoefficientDecomposition(g.main, tuple(parts))


def remove_infinitesimals(
    family: Iterable[EpsPoly], max_eps: int | None = None
) -> list[ThomEncoding]:
    """Real values s_0 < ... < s_M such that no root of any G, over the field with
    infinitesimals, lies in an open gap (s_i, s_{i+1}) except infinitesimally close
    to its ends."""
    parts: dict[UniPoly, None] = {}
    for g in family:
        if max_eps is not None and len(g.eps_vars) > max_eps:
            raise InputContractError(
                f"{g} depends on {len(g.eps_vars)} infinitesimals, more than {max_eps}"
            )
        for _, part in decompose(g).parts:
            if part.degree > 0:
                parts.setdefault(part.primitive(), None)
    values = order_roots(parts)
    logger.info("%d polynomial parts give %d real values", len(parts), len(values))
    return values


# Roots of a substituted polynomial within eta^(1/SPREAD) of a value are attributed to it.
SPREAD = 5


def _iroot(n: int, k: int) -> int:
    """Largest q with q^k <= n."""
    lo, hi = 0, 1
    while hi**k <= n:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def _margin(eta: Fraction) -> Fraction:
    """The least 1/q with q >= 1 and 1/q >= eta^(1/SPREAD)."""
    q = _iroot(eta.denominator // eta.numerator, SPREAD)
    return Fraction(1, max(q, 1))


def _gaps(
    values: Sequence[ThomEncoding], margin: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Rational intervals covering each open gap between consecutive values, shrunk by
    ``margin`` at both ends.

    The unbounded gaps are cut off at distance 1/(2 margin) from the outermost values;
    roots beyond that stand for infinitely large ones.
    """
    reach = 1 / (2 * margin)
    if not values:
        return [(-reach, reach)]
    refined = separate([v.refined(margin / 4) for v in values])
    first, last = refined[0].lo, refined[-1].hi
    gaps = [(first - reach, first - margin)]
    gaps.extend((a.hi + margin, b.lo - margin) for a, b in zip(refined, refined[1:]))
    gaps.append((last + margin, last + reach))
    return [(lo, hi) for lo, hi in gaps if lo < hi]


def lemma_check(
    family: Iterable[EpsPoly], values: Sequence[ThomEncoding], eta: Fraction
) -> bool:
    """Finite-eta check of the removal property.

    Each e_i is replaced by eta^(i+1). The resulting real polynomial must have no
    root in any gap between consecutive values (or beyond the outermost ones),
    except within eta^(1/5) of a gap end. Roots are counted exactly with Sturm
    sequences. A failure refutes the computation; a pass proves nothing about the
    infinitesimal statement.
    """
    eta = Fraction(eta)
    if eta <= 0:
        raise InputContractError("eta must be positive")
    gaps = _gaps(values, _margin(eta))
    for g in family:
        real = g.substitute_eta(eta)
        if real.is_zero():
            logger.warning("%s vanishes identically at eta=%s; skipped", g, eta)
            continue
        for lo, hi in gaps:
            if count_open(real, lo, hi):
                logger.debug("%s has a root in (%s, %s)", g, lo, hi)
                return False
    return True
