"""Exact multivariate polynomials over the rationals."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import TYPE_CHECKING, Union

from sabar.errors import MissingVariableError, NotUnivariateError

if TYPE_CHECKING:
    from sabar.algebra.univariate import UniPoly

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]
PolyLike = Union["MultiPoly", int, Fraction]


def _lift(
    terms: Mapping[Exponent, Fraction], src: tuple[str, ...], dst: tuple[str, ...]
) -> dict[Exponent, Fraction]:
    """Re-index exponent vectors from variable order ``src`` into ``dst``."""
    if src == dst:
        return dict(terms)
    slots = [dst.index(v) for v in src]
    width = len(dst)
    lifted: dict[Exponent, Fraction] = {}
    for exp, coeff in terms.items():
        new = [0] * width
        for slot, e in zip(slots, exp):
            new[slot] = e
        lifted[tuple(new)] = coeff
    return lifted


def _canonical(
    variables: Iterable[str], terms: Mapping[Exponent, Fraction]
) -> tuple[tuple[str, ...], dict[Exponent, Fraction]]:
    """Drop zero coefficients and unused variables, sort variables lexicographically."""
    variables = tuple(variables)
    live = {exp: Fraction(c) for exp, c in terms.items() if c != 0}
    used = [i for i in range(len(variables)) if any(exp[i] for exp in live)]
    ordered = sorted(used, key=lambda i: variables[i])
    new_vars = tuple(variables[i] for i in ordered)
    if len(new_vars) == len(variables) and ordered == list(range(len(variables))):
        return new_vars, live
    return new_vars, {tuple(exp[i] for i in ordered): c for exp, c in live.items()}


@dataclass(frozen=True, eq=False)
class MultiPoly:
    """Polynomial with rational coefficients in named variables.

    Variables are kept sorted and restricted to the ones that occur, so two
    equal polynomials always have identical ``variables`` and ``terms``.
    The zero polynomial has no variables and an empty term map.
    """

    variables: tuple[str, ...]
    terms: Mapping[Exponent, Fraction]

    @classmethod
    def from_terms(
        cls, variables: Iterable[str], terms: Mapping[Exponent, Scalar]
    ) -> MultiPoly:
        variables = tuple(variables)
        for exp in terms:
            if len(exp) != len(variables):
                raise ValueError(f"exponent {exp} does not match variables {variables}")
        merged: dict[Exponent, Fraction] = {}
        for exp, c in terms.items():
            merged[exp] = merged.get(exp, Fraction(0)) + Fraction(c)
        new_vars, new_terms = _canonical(variables, merged)
        return cls(new_vars, new_terms)

    @classmethod
    def constant(cls, value: Scalar) -> MultiPoly:
        value = Fraction(value)
        return cls((), {(): value} if value else {})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls((), {})

    @classmethod
    def coerce(cls, value: PolyLike) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return cls.constant(value)

    @classmethod
    def from_coefficients(cls, var: str, coeffs: Iterable[PolyLike]) -> MultiPoly:
        """Inverse of :meth:`coefficients_in`: build Σ coeffs[i]·var^i."""
        x = cls.var(var)
        result = cls.zero()
        power = cls.constant(1)
        for c in coeffs:
            result = result + cls.coerce(c) * power
            power = power * x
        return result

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.variables

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def depends_on(self, var: str) -> bool:
        return var in self.variables

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var``, or total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(exp) for exp in self.terms)
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        return max(exp[i] for exp in self.terms)

    def coefficients(self) -> list[Fraction]:
        return list(self.terms.values())

    def leading_term(self) -> tuple[Exponent, Fraction]:
        """Lex-leading term (variables in sorted order)."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> MultiPoly:
        """Integer-coefficient primitive part with a positive lex-leading coefficient."""
        if not self.terms:
            return self
        scale = self.content()
        if self.leading_term()[1] < 0:
            scale = -scale
        return self.scale(1 / scale)

    def monomial_content(self) -> dict[str, int]:
        """Largest monomial dividing every term, as var -> exponent (positive entries only)."""
        if not self.terms:
            return {}
        mins = [min(exp[i] for exp in self.terms) for i in range(len(self.variables))]
        return {v: m for v, m in zip(self.variables, mins) if m}

    # -- arithmetic -------------------------------------------------------

    def _aligned(self, other: MultiPoly) -> tuple[tuple[str, ...], dict, dict]:
        if self.variables == other.variables:
            return self.variables, dict(self.terms), dict(other.terms)
        union = tuple(sorted(set(self.variables) | set(other.variables)))
        return (
            union,
            _lift(self.terms, self.variables, union),
            _lift(other.terms, other.variables, union),
        )

    def __add__(self, other: PolyLike) -> MultiPoly:
        other = MultiPoly.coerce(other)
        variables, a, b = self._aligned(other)
        for exp, c in b.items():
            a[exp] = a.get(exp, Fraction(0)) + c
        return MultiPoly(*_canonical(variables, a))

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> MultiPoly:
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other: PolyLike) -> MultiPoly:
        return MultiPoly.coerce(other) - self

    def scale(self, factor: Scalar) -> MultiPoly:
        factor = Fraction(factor)
        if not factor:
            return MultiPoly.zero()
        return MultiPoly(self.variables, {e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other: PolyLike) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        if other.is_constant():
            return self.scale(other.constant_value())
        if self.is_constant():
            return other.scale(self.constant_value())
        variables, a, b = self._aligned(other)
        product: dict[Exponent, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                product[e] = product.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(*_canonical(variables, product))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divexact(self, other: MultiPoly) -> MultiPoly:
        """Exact quotient self / other; raises ValueError when other does not divide self."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            return self.scale(1 / other.constant_value())
        variables, rem, div = self._aligned(other)
        lead = max(div)
        lead_c = div[lead]
        quotient: dict[Exponent, Fraction] = {}
        while rem:
            top = max(rem)
            shift = tuple(x - y for x, y in zip(top, lead))
            if min(shift) < 0:
                raise ValueError("polynomial division is not exact")
            q = rem[top] / lead_c
            quotient[shift] = q
            for exp, c in div.items():
                e = tuple(x + y for x, y in zip(exp, shift))
                value = rem.get(e, Fraction(0)) - q * c
                if value:
                    rem[e] = value
                else:
                    rem.pop(e, None)
        return MultiPoly(*_canonical(variables, quotient))

    # -- calculus and substitution -----------------------------------------

    def diff(self, var: str) -> MultiPoly:
        if var not in self.variables:
            return MultiPoly.zero()
        i = self.variables.index(var)
        terms: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            if exp[i]:
                new = exp[:i] + (exp[i] - 1,) + exp[i + 1 :]
                terms[new] = c * exp[i]
        return MultiPoly(*_canonical(self.variables, terms))

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a point binding every variable."""
        for v in self.variables:
            if v not in point:
                raise MissingVariableError(f"no value bound for variable {v!r}")
        values = [Fraction(point[v]) for v in self.variables]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for x, e in zip(values, exp):
                if e:
                    term *= x**e
            total += term
        return total

    def substitute(self, mapping: Mapping[str, PolyLike]) -> MultiPoly:
        """Replace variables by polynomials (or numbers); unmapped variables stay."""
        keep = [i for i, v in enumerate(self.variables) if v not in mapping]
        keep_vars = tuple(self.variables[i] for i in keep)
        images = {v: MultiPoly.coerce(p) for v, p in mapping.items() if v in self.variables}
        powers: dict[tuple[str, int], MultiPoly] = {}

        def power(v: str, e: int) -> MultiPoly:
            key = (v, e)
            if key not in powers:
                powers[key] = images[v] ** e
            return powers[key]

        result = MultiPoly.zero()
        for exp, c in self.terms.items():
            rest = MultiPoly.from_terms(keep_vars, {tuple(exp[i] for i in keep): c})
            for i, v in enumerate(self.variables):
                if v in images and exp[i]:
                    rest = rest * power(v, exp[i])
            result = result + rest
        return result

    def coefficients_in(self, var: str) -> list[MultiPoly]:
        """Univariate view: coefficients (polynomials in the other variables), lowest first."""
        if not self.terms:
            return []
        if var not in self.variables:
            return [self]
        i = self.variables.index(var)
        rest_vars = self.variables[:i] + self.variables[i + 1 :]
        buckets: dict[int, dict[Exponent, Fraction]] = {}
        for exp, c in self.terms.items():
            buckets.setdefault(exp[i], {})[exp[:i] + exp[i + 1 :]] = c
        deg = max(buckets)
        return [MultiPoly.from_terms(rest_vars, buckets.get(d, {})) for d in range(deg + 1)]

    def to_univariate(self, var: str | None = None) -> UniPoly:
        """Dense univariate polynomial; every variable other than ``var`` must be absent."""
        from sabar.algebra.univariate import UniPoly

        if var is None:
            if len(self.variables) > 1:
                raise NotUnivariateError(f"{self} is not univariate")
            var = self.variables[0] if self.variables else "X"
        extra = [v for v in self.variables if v != var]
        if extra:
            raise NotUnivariateError(f"{self} depends on {extra} besides {var}")
        return UniPoly.from_coeffs(
            [c.constant_value() for c in self.coefficients_in(var)], var=var
        )

    # -- comparison and printing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exp) if e
            )
            magnitude = abs(c)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"
