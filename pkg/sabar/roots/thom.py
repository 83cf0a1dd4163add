"""Thom encodings of real algebraic numbers.

An encoding carries the square-free defining polynomial, the signs of its
derivatives at the root and a rational isolating interval. Comparisons and sign
queries refine the interval by bisection and use Sturm counts for exact zero
tests, so no floating point is involved anywhere.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, replace
from enum import IntEnum
from fractions import Fraction
from functools import cmp_to_key
from typing import Any, Union

from sabar.algebra.parser import parse_poly
from sabar.algebra.poly import MultiPoly
from sabar.algebra.univariate import (
    Bound,
    UniPoly,
    cauchy_bound,
    derivatives,
    poly_gcd,
    sign,
    square_free,
    sturm_count,
)
from sabar.errors import InputContractError, InvariantError, ParseError

logger = logging.getLogger(__name__)

PolyInput = Union[UniPoly, MultiPoly]


class Order(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _univariate(q: PolyInput) -> UniPoly:
    return q if isinstance(q, UniPoly) else q.to_univariate()


def count_open(g: UniPoly, a: Bound, b: Bound) -> int:
    """Distinct roots of g in (a, b); a finite endpoint may itself be a root."""
    h = square_free(g)
    for end in (a, b):
        if end is not None and h(end) == 0:
            h = h // UniPoly.from_coeffs([-Fraction(end), 1], h.var)
    if h.degree <= 0:
        return 0
    return sturm_count(h, a, b)


@dataclass(frozen=True)
class ThomEncoding:
    """One real root of ``poly``.

    ``lo == hi`` means the root is exactly that rational. Otherwise
    ``poly(lo)`` and ``poly(hi)`` are nonzero and (lo, hi) holds exactly one root.
    """

    poly: UniPoly
    der_signs: tuple[int, ...]
    lo: Fraction
    hi: Fraction

    @classmethod
    def from_rational(cls, value: Fraction | int, var: str = "X") -> ThomEncoding:
        value = Fraction(value)
        return cls(UniPoly.from_coeffs([-value, 1], var), (0, 1), value, value)

    @property
    def isolating_interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        """The root itself, only when it is rational."""
        if not self.is_rational:
            raise ValueError(f"{self} is irrational or not yet pinned down")
        return self.lo

    def bisect(self) -> ThomEncoding:
        """Halve the isolating interval, pinning the root when it hits the midpoint."""
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        at_mid = self.poly.sign_at(mid)
        if at_mid == 0:
            return replace(self, lo=mid, hi=mid)
        if at_mid == self.poly.sign_at(self.lo):
            return replace(self, lo=mid)
        return replace(self, hi=mid)

    def refined(self, width: Fraction) -> ThomEncoding:
        if width <= 0:
            raise InputContractError("approximation width must be positive")
        t = self
        while t.hi - t.lo > width:
            t = t.bisect()
        return t

    def contains(self, x: Fraction) -> bool:
        if self.is_rational:
            return x == self.lo
        return self.lo < x < self.hi

    def __lt__(self, other: ThomEncoding) -> bool:
        return compare(self, other) is Order.LT

    def to_json(self) -> dict[str, Any]:
        return {
            "poly": str(self.poly),
            "der_signs": list(self.der_signs),
            "interval": [str(self.lo), str(self.hi)],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> ThomEncoding:
        try:
            poly = parse_poly(data["poly"])
            var = poly.variables[0] if poly.variables else "X"
            lo, hi = (Fraction(x) for x in data["interval"])
            der_signs = tuple(int(s) for s in data["der_signs"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ParseError(f"malformed Thom encoding {data!r}: {e}") from e
        enc = cls(poly.to_univariate(var), der_signs, lo, hi)
        _check(enc)
        return enc

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.lo)
        return f"root of {self.poly} in ({self.lo}, {self.hi})"


def _check(t: ThomEncoding) -> None:
    """Validate a deserialized encoding against its own interval."""
    if t.is_rational:
        if t.poly(t.lo) != 0:
            raise ParseError(f"{t.lo} is not a root of {t.poly}")
    elif not (t.lo < t.hi and t.poly(t.lo) != 0 and t.poly(t.hi) != 0):
        raise ParseError(f"bad isolating interval ({t.lo}, {t.hi})")
    elif sturm_count(t.poly, t.lo, t.hi) != 1:
        raise ParseError(f"({t.lo}, {t.hi}) does not isolate one root of {t.poly}")
    if t.der_signs != tuple(signs_at_root(t, derivatives(t.poly)[1:], leading_zero=True)):
        raise ParseError(f"derivative signs {t.der_signs} do not match the root")


def _isolate(g: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals of the roots of a square-free g, increasing."""
    bound = cauchy_bound(g)
    out: list[tuple[Fraction, Fraction]] = []
    # explicit stack, right half pushed first so roots come out increasing
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        if a == b:
            out.append((a, b))
            continue
        n = sturm_count(g, a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if g(mid) != 0:
            stack.append((mid, b))
            stack.append((a, mid))
            continue
        # rational root at the midpoint: step away until no root is adjacent
        delta = (b - a) / 4
        while g(mid - delta) == 0 or g(mid + delta) == 0 or (
            count_open(g, mid - delta, mid) + count_open(g, mid, mid + delta)
        ):
            delta /= 2
        stack.append((mid + delta, b))
        stack.append((mid, mid))
        stack.append((a, mid - delta))
    return out


def encode_roots(f: PolyInput) -> list[ThomEncoding]:
    """One encoding per distinct real root of f, increasing."""
    f = _univariate(f)
    if f.is_zero():
        raise InputContractError("the zero polynomial has no isolated roots")
    if f.degree <= 0:
        return []
    g = square_free(f)
    ders = derivatives(g)[1:]
    encodings = []
    for lo, hi in _isolate(g):
        bare = ThomEncoding(g, (), lo, hi)
        signs, refined = _signs_and_interval(bare, ders)
        encodings.append(replace(refined, der_signs=(0, *signs)))
    return encodings


def _signs_and_interval(
    t: ThomEncoding, qs: Sequence[PolyInput]
) -> tuple[list[int], ThomEncoding]:
    signs = []
    for q in qs:
        s, t = _sign_at(t, _univariate(q))
        signs.append(s)
    return signs, t


def _sign_at(t: ThomEncoding, q: UniPoly) -> tuple[int, ThomEncoding]:
    if q.is_zero():
        return 0, t
    if q.degree == 0:
        return sign(q.lc), t
    if t.is_rational:
        return q.sign_at(t.lo), t
    common = poly_gcd(t.poly, q)
    if common.degree > 0 and sturm_count(common, t.lo, t.hi) > 0:
        return 0, t
    while not t.is_rational and count_open(q, t.lo, t.hi) > 0:
        t = t.bisect()
    if t.is_rational:
        return q.sign_at(t.lo), t
    return q.sign_at((t.lo + t.hi) / 2), t


def signs_at_root(
    t: ThomEncoding, qs: Sequence[PolyInput], *, leading_zero: bool = False
) -> list[int]:
    """Exact sign of each q at the root encoded by t."""
    signs, _ = _signs_and_interval(t, qs)
    return [0, *signs] if leading_zero else signs


def _equal(t1: ThomEncoding, t2: ThomEncoding) -> bool:
    if t1.is_rational:
        return t2.contains(t1.lo) and t2.poly(t1.lo) == 0
    if t2.is_rational:
        return t1.contains(t2.lo) and t1.poly(t2.lo) == 0
    lo, hi = max(t1.lo, t2.lo), min(t1.hi, t2.hi)
    if lo >= hi:
        return False
    common = poly_gcd(t1.poly, t2.poly)
    return common.degree > 0 and sturm_count(common, lo, hi) > 0


def compare(t1: ThomEncoding, t2: ThomEncoding) -> Order:
    """Order of the two real numbers; EQ exactly when they coincide."""
    if t1.is_rational and t2.is_rational:
        return Order(sign(t1.lo - t2.lo))
    if _equal(t1, t2):
        return Order.EQ
    while not (t1.hi < t2.lo or t2.hi < t1.lo):
        if t1.hi - t1.lo >= t2.hi - t2.lo:
            t1 = t1.bisect()
        else:
            t2 = t2.bisect()
        if t1.is_rational and t2.is_rational:
            break
    if t1.is_rational and t2.is_rational:
        return Order(sign(t1.lo - t2.lo))
    return Order.LT if t1.hi < t2.lo else Order.GT


def _preference(t: ThomEncoding) -> tuple[int, int, str]:
    return (t.poly.degree, 0 if t.is_rational else 1, str(t.poly))


def order_roots(polys: Iterable[PolyInput]) -> list[ThomEncoding]:
    """Strictly increasing, duplicate-free encodings of all real roots of ``polys``."""
    found: list[ThomEncoding] = []
    for p in polys:
        p = _univariate(p)
        if p.is_zero():
            raise InputContractError("order_roots needs nonzero polynomials")
        found.extend(encode_roots(p))
    found.sort(key=cmp_to_key(lambda a, b: int(compare(a, b))))
    merged: list[ThomEncoding] = []
    for t in found:
        if merged and compare(merged[-1], t) is Order.EQ:
            if _preference(t) < _preference(merged[-1]):
                merged[-1] = t
            continue
        merged.append(t)
    return merged


def separate(encodings: Sequence[ThomEncoding]) -> list[ThomEncoding]:
    """Refine an increasing list until consecutive intervals are disjoint."""
    out = list(encodings)
    for i in range(len(out) - 1):
        guard = 0
        while not out[i].hi < out[i + 1].lo:
            a, b = out[i], out[i + 1]
            if a.is_rational and b.is_rational:
                raise InvariantError(f"encodings {a} and {b} are not increasing")
            if a.hi - a.lo >= b.hi - b.lo:
                out[i] = a.bisect()
            else:
                out[i + 1] = b.bisect()
            guard += 1
            if guard > 10_000:
                raise InvariantError(f"cannot separate {a} from {b}")
    return out


def rational_approx(t: ThomEncoding, width: Fraction) -> tuple[Fraction, Fraction]:
    """An isolating interval of length at most ``width``."""
    return t.refined(Fraction(width)).isolating_interval


def approximate(t: ThomEncoding, digits: int = 6) -> str:
    """Decimal rendering of the root rounded to ``digits`` places."""
    lo, hi = rational_approx(t, Fraction(1, 10 ** (digits + 1)))
    scaled = round((lo + hi) / 2 * 10**digits)
    negative = scaled < 0
    whole, frac = divmod(abs(scaled), 10**digits)
    text = f"{whole}.{frac:0{digits}d}" if digits else str(whole)
    return f"-{text}" if negative and scaled else text
