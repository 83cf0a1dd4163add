"""Dense univariate polynomials over Q, Sturm sequences and root bounds."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import TYPE_CHECKING, Union

from sabar.errors import EndpointRootError, InputContractError, ZeroPolynomialError

if TYPE_CHECKING:
    from sabar.algebra.poly import MultiPoly

Scalar = Union[int, Fraction]
# None stands for -inf as a lower bound and +inf as an upper bound.
Bound = Union[Fraction, int, None]


def sign(x: Scalar) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial, coefficients lowest degree first, no trailing zeros."""

    coeffs: tuple[Fraction, ...]
    var: str = "X"

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], var: str = "X") -> UniPoly:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs), var)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], var: str = "X") -> UniPoly:
        result = cls.from_coeffs([1], var)
        for r in roots:
            result = result * cls.from_coeffs([-Fraction(r), 1], var)
        return result

    @classmethod
    def x(cls, var: str = "X") -> UniPoly:
        return cls((Fraction(0), Fraction(1)), var)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Scalar) -> int:
        return sign(self(x))

    def derivative(self) -> UniPoly:
        return UniPoly.from_coeffs([c * i for i, c in enumerate(self.coeffs)][1:], self.var)

    def _with(self, coeffs: Iterable[Scalar]) -> UniPoly:
        return UniPoly.from_coeffs(coeffs, self.var)

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return self._with(x + y for x, y in zip(a, b))

    def __neg__(self) -> UniPoly:
        return self._with(-c for c in self.coeffs)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly | Scalar) -> UniPoly:
        if not isinstance(other, UniPoly):
            return self._with(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return self._with([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return self._with(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        result = self._with([1])
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return self._with([]), self
        quot = [Fraction(0)] * (len(rem) - dq)
        lead = other.lc
        for shift in range(len(rem) - 1 - dq, -1, -1):
            q = rem[shift + dq] / lead
            quot[shift] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[shift + i] -= q * c
        return self._with(quot), self._with(rem[:dq])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def primitive(self) -> UniPoly:
        """Integer coefficients with gcd 1 and a positive leading coefficient."""
        if not self.coeffs:
            return self
        return self._with(_int_primitive(self.coeffs))

    def to_multipoly(self) -> MultiPoly:
        from sabar.algebra.poly import MultiPoly

        return MultiPoly.from_coefficients(self.var, self.coeffs)

    def __str__(self) -> str:
        return str(self.to_multipoly())

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"


def _int_primitive(coeffs: Sequence[Fraction]) -> list[int]:
    """Positive integer multiple of ``coeffs`` scaled to content 1, leading coefficient > 0."""
    den = reduce(lcm, (c.denominator for c in coeffs), 1)
    ints = [int(c * den) for c in coeffs]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return []
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _pseudo_remainder(a: list[int], b: list[int]) -> list[int]:
    """Remainder of |lc(b)|^k * a by b, with k the number of reduction steps."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    steps = 0
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lead * c for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= top * c
        r.pop()
        _trim(r)
        steps += 1
    if lead < 0 and steps % 2:
        r = [-c for c in r]
    return r


def _reduce(cs: list[int]) -> list[int]:
    """Divide by the positive content, keeping signs."""
    g = reduce(gcd, cs, 0)
    return [c // g for c in cs] if g > 1 else cs


def sturm_sequence(f: UniPoly) -> list[list[int]]:
    """Signed remainder sequence of f, f' with primitive-part reduction, as integer lists."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has no Sturm sequence")
    s0 = _int_primitive(f.coeffs)
    seq = [s0]
    s1 = _int_primitive(f.derivative().coeffs) if f.degree > 0 else []
    if not s1:
        return seq
    seq.append(s1)
    while True:
        r = _pseudo_remainder(seq[-2], seq[-1])
        if not r:
            return seq
        seq.append(_reduce([-c for c in r]))


def _eval_sign(cs: list[int], x: Bound, side: int) -> int:
    """Sign of the integer polynomial ``cs`` at x, or at side*inf when x is None."""
    if not cs:
        return 0
    if x is None:
        s = sign(cs[-1])
        return s if side > 0 or (len(cs) - 1) % 2 == 0 else -s
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    n = len(cs) - 1
    # homogenized: sign of sum c_i p^i q^(n-i), q > 0
    total = 0
    for i, c in enumerate(cs):
        total += c * p**i * q ** (n - i)
    return sign(total)


def _variations(seq: list[list[int]], x: Bound, side: int) -> int:
    signs = [s for s in (_eval_sign(cs, x, side) for cs in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(f: UniPoly, a: Bound = None, b: Bound = None) -> int:
    """Number of distinct real roots of f in the open interval (a, b).

    ``None`` means -inf for ``a`` and +inf for ``b``.
    """
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has infinitely many roots")
    if a is not None and b is not None and Fraction(a) >= Fraction(b):
        raise InputContractError(f"empty interval ({a}, {b})")
    for end in (a, b):
        if end is not None and f(end) == 0:
            raise EndpointRootError()
    seq = sturm_sequence(f)
    return _variations(seq, a, -1) - _variations(seq, b, 1)


def derivatives(f: UniPoly) -> list[UniPoly]:
    """The tuple (f, f', ..., f^(deg f)); the last entry is a nonzero constant."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has no Der tuple")
    out = [f]
    while out[-1].degree > 0:
        out.append(out[-1].derivative())
    return out


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Primitive gcd with positive leading coefficient; gcd(0, 0) = 0."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.primitive()


def square_free(f: UniPoly) -> UniPoly:
    """f / gcd(f, f'), primitive."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has no square-free part")
    if f.degree <= 0:
        return f._with([1])
    return (f // poly_gcd(f, f.derivative())).primitive()


def cauchy_bound(f: UniPoly) -> Fraction:
    """Integer-valued B with every real root of f in (-B, B)."""
    if f.degree <= 0:
        return Fraction(1)
    lead = abs(f.lc)
    top = max(abs(c) / lead for c in f.coeffs[:-1])
    bound = 1 + top
    return Fraction(-((-bound.numerator) // bound.denominator)) + 1
