"""Text formats: filtration files, point clouds and barcode JSON.

A filtration file starts with a header and lists one simplex per line as its
birth index followed by its vertices. Optional ``value`` lines attach a value
to a step, either a rational or the JSON of a Thom encoding::

    filtration v1
    0 0
    0 1
    1 0 1
    value 0 0
    value 1 {"der_signs":[0,1,1],"interval":["1","2"],"poly":"X^2 - 2"}

A ``steps`` line may fix the length; otherwise it is one past the largest
birth or value index. Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction

import orjson

from sabar.errors import FiltrationError, ParseError
from sabar.persistence.filtration import Bar, Barcode, Filtration
from sabar.persistence.values import (
    Algebraic,
    Exact,
    FiltrationValue,
    value_from_json,
)
from sabar.roots.thom import ThomEncoding

HEADER = "filtration v1"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"malformed rational {text!r}") from e


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"line {lineno}: expected an integer, got {token!r}") from e


def _value(text: str, lineno: int) -> FiltrationValue:
    if not text.startswith("{"):
        return Exact(parse_rational(text))
    try:
        data = orjson.loads(text)
    except orjson.JSONDecodeError as e:
        raise ParseError(f"line {lineno}: invalid value JSON: {e}") from e
    if isinstance(data, dict) and "thom" in data:
        return value_from_json(data)
    enc = ThomEncoding.from_json(data)
    return Algebraic(enc, enc.isolating_interval)


def read_filtration(text: str) -> Filtration:
    lines = _lines(text)
    first = next(lines, None)
    if first is None or " ".join(first[1].split()) != HEADER:
        raise ParseError(f"missing {HEADER!r} header")
    steps: int | None = None
    values: dict[int, FiltrationValue] = {}
    births: dict[tuple[int, ...], int] = {}
    for lineno, line in lines:
        kind, _, rest = line.partition(" ")
        if kind == "steps":
            steps = _int(rest.strip(), lineno)
        elif kind == "value":
            index, _, value = rest.strip().partition(" ")
            if not value.strip():
                raise ParseError(f"line {lineno}: value line needs an index and a value")
            i = _int(index, lineno)
            if i in values:
                raise ParseError(f"line {lineno}: value {i} listed twice")
            values[i] = _value(value.strip(), lineno)
        elif kind.lstrip("-").isdigit():
            tokens = line.split()
            if len(tokens) < 2:
                raise ParseError(f"line {lineno}: simplex needs at least one vertex")
            simplex = tuple(sorted(_int(a, lineno) for a in tokens[1:]))
            if simplex in births:
                raise ParseError(f"line {lineno}: simplex {simplex} listed twice")
            births[simplex] = _int(tokens[0], lineno)
        else:
            raise ParseError(f"line {lineno}: cannot parse {line!r}")
    if steps is None:
        steps = max([*births.values(), *values], default=0) + 1
    if values and sorted(values) != list(range(steps)):
        raise FiltrationError(f"values must be given for every step 0..{steps - 1}")
    return Filtration(births, steps, [values[i] for i in range(steps)] if values else None)


def _value_text(v: FiltrationValue) -> str:
    if isinstance(v, Exact):
        return str(v.value)
    if isinstance(v, Algebraic):
        return orjson.dumps(v.encoding.to_json(), option=orjson.OPT_SORT_KEYS).decode()
    raise FiltrationError(f"value {v} has no text form")


def write_filtration(f: Filtration) -> str:
    out = [HEADER]
    for simplex in f.order:
        out.append(f"{f.births[simplex]} {' '.join(map(str, simplex))}")
    if f.values is not None:
        out.extend(f"value {i} {_value_text(v)}" for i, v in enumerate(f.values))
    return "\n".join(out) + "\n"

def read_points(text: str) -> list[tuple[Fraction, ...]]:
    """One point per line, comma-separated rational coordinates."""
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            points.append(tuple(parse_rational(c) for c in line.split(",")))
        except ParseError as e:
            raise ParseError(f"line {lineno}: {e}") from e
    return points


def _bar(item: object) -> Bar:
    try:
        return Bar(
            value_from_json(item["birth"]),
            value_from_json(item["death"]),
            int(item["mult"]),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed bar {item!r}") from e


def read_barcode_json(data: bytes) -> list[Barcode]:
    """Inverse of the JSON emitter: a list of ``{"p": .., "bars": [...]}`` objects."""
    try:
        items = orjson.loads(data)
    except orjson.JSONDecodeError as e:
        raise ParseError(f"invalid barcode JSON: {e}") from e
    if not isinstance(items, list):
        raise ParseError("barcode JSON must be a list of barcodes")
    barcodes = []
    for item in items:
        try:
            p, bars = int(item["p"]), item["bars"]
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed barcode {item!r}") from e
        if not isinstance(bars, list):
            raise ParseError(f"bars of H{p} must be a list")
        barcodes.append(Barcode(p, tuple(_bar(b) for b in bars)))
    return sorted(barcodes, key=lambda b: b.p)
