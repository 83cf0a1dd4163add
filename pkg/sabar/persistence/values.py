"""Values attached to filtration indices and barcode endpoints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from sabar.errors import InvariantError, ParseError
from sabar.roots.thom import Order, ThomEncoding, approximate, compare


@dataclass(frozen=True)
class Index:
    i: int

    def __str__(self) -> str:
        return str(self.i)


@dataclass(frozen=True)
class Exact:
    value: Fraction

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Algebraic:
    encoding: ThomEncoding
    approx: tuple[Fraction, Fraction]

    def __post_init__(self) -> None:
        lo, hi = self.approx
        enc_lo, enc_hi = self.encoding.isolating_interval
        if not (lo <= enc_lo and enc_hi <= hi):
            raise InvariantError(f"approximation {self.approx} does not enclose {self.encoding}")

    @classmethod
    def of(cls, encoding: ThomEncoding, width: Fraction) -> Algebraic:
        refined = encoding.refined(width)
        return cls(refined, refined.isolating_interval)

    def __str__(self) -> str:
        return approximate(self.encoding)


@dataclass(frozen=True)
class MinusInfinity:
    def __str__(self) -> str:
        return "-inf"


@dataclass(frozen=True)
class PlusInfinity:
    def __str__(self) -> str:
        return "inf"


FiltrationValue = Union[Index, Exact, Algebraic, MinusInfinity, PlusInfinity]

INF = PlusInfinity()
MINUS_INF = MinusInfinity()


def _rank(v: FiltrationValue) -> int:
    if isinstance(v, MinusInfinity):
        return -1
    if isinstance(v, PlusInfinity):
        return 1
    return 0


def _as_encoding(v: Index | Exact | Algebraic) -> ThomEncoding:
    if isinstance(v, Algebraic):
        return v.encoding
    return ThomEncoding.from_rational(v.i if isinstance(v, Index) else v.value)


def compare_values(a: FiltrationValue, b: FiltrationValue) -> Order:
    ra, rb = _rank(a), _rank(b)
    if ra or rb:
        return Order((ra > rb) - (ra < rb))
    assert not isinstance(a, (MinusInfinity, PlusInfinity))
    assert not isinstance(b, (MinusInfinity, PlusInfinity))
    if isinstance(a, Index) and isinstance(b, Index):
        return Order((a.i > b.i) - (a.i < b.i))
    return compare(_as_encoding(a), _as_encoding(b))


def sort_key(v: FiltrationValue) -> tuple[int, Fraction]:
    """Total order key; algebraic values sort by a separating rational."""
    if isinstance(v, MinusInfinity):
        return (-1, Fraction(0))
    if isinstance(v, PlusInfinity):
        return (1, Fraction(0))
    if isinstance(v, Index):
        return (0, Fraction(v.i))
    if isinstance(v, Exact):
        return (0, v.value)
    lo, hi = v.approx
    return (0, (lo + hi) / 2)


def value_to_json(v: FiltrationValue) -> Any:
    if isinstance(v, Index):
        return v.i
    if isinstance(v, Exact):
        return str(v.value)
    if isinstance(v, PlusInfinity):
        return "inf"
    if isinstance(v, MinusInfinity):
        return "-inf"
    return {
        "thom": v.encoding.to_json(),
        "approx": [str(v.approx[0]), str(v.approx[1])],
        "decimal": approximate(v.encoding),
    }


def value_from_json(data: Any) -> FiltrationValue:
    if isinstance(data, bool):
        raise ParseError(f"bad filtration value {data!r}")
    if isinstance(data, int):
        return Index(data)
    if data == "inf":
        return INF
    if data == "-inf":
        return MINUS_INF
    if isinstance(data, str):
        try:
            return Exact(Fraction(data))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational {data!r}") from e
    if isinstance(data, dict) and "thom" in data:
        enc = ThomEncoding.from_json(data["thom"])
        approx = data.get("approx", [str(enc.lo), str(enc.hi)])
        try:
            return Algebraic(enc, (Fraction(approx[0]), Fraction(approx[1])))
        except (ValueError, ZeroDivisionError, IndexError) as e:
            raise ParseError(f"bad approximation {approx!r}") from e
    raise ParseError(f"bad filtration value {data!r}")
