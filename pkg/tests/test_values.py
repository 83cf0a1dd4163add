from fractions import Fraction

import pytest
from conftest import up

from sabar.errors import InvariantError, ParseError
from sabar.persistence import (
    INF,
    MINUS_INF,
    Algebraic,
    Exact,
    Index,
    compare_values,
    value_from_json,
    value_to_json,
)
from sabar.persistence.values import sort_key
from sabar.roots import Order, encode_roots


def sqrt2() -> Algebraic:
    return Algebraic.of(encode_roots(up("X^2 - 2"))[1], Fraction(1, 1000))


def test_ordering_across_kinds():
    assert compare_values(MINUS_INF, Index(-5)) is Order.LT
    assert compare_values(INF, Exact(Fraction(10**9))) is Order.GT
    assert compare_values(INF, INF) is Order.EQ
    assert compare_values(Index(2), Index(3)) is Order.LT
    assert compare_values(Exact(Fraction(3, 2)), sqrt2()) is Order.GT
    assert compare_values(Index(1), sqrt2()) is Order.LT
    assert compare_values(Exact(Fraction(2)), Index(2)) is Order.EQ


def test_sort_key_orders_values():
    values = [INF, Exact(Fraction(3, 2)), sqrt2(), MINUS_INF, Index(1)]
    ordered = sorted(values, key=sort_key)
    assert ordered == [MINUS_INF, Index(1), sqrt2(), Exact(Fraction(3, 2)), INF]


def test_algebraic_width():
    v = sqrt2()
    lo, hi = v.approx
    assert hi - lo <= Fraction(1, 1000)
    assert lo * lo < 2 < hi * hi
    assert str(v) == "1.414214"


def test_algebraic_must_enclose_its_encoding():
    t = encode_roots(up("X^2 - 2"))[1]
    with pytest.raises(InvariantError):
        Algebraic(t, (t.lo + 1, t.hi + 1))


def test_text_forms():
    assert str(Index(3)) == "3"
    assert str(Exact(Fraction(-1, 2))) == "-1/2"
    assert str(INF) == "inf"
    assert str(MINUS_INF) == "-inf"


def test_json_forms():
    assert value_to_json(Index(4)) == 4
    assert value_to_json(Exact(Fraction(-1, 2))) == "-1/2"
    assert value_to_json(INF) == "inf"
    assert value_to_json(MINUS_INF) == "-inf"
    data = value_to_json(sqrt2())
    assert data["decimal"] == "1.414214"
    assert data["thom"]["poly"] == "X^2 - 2"


def test_json_round_trip():
    for v in [Index(0), Exact(Fraction(7, 3)), INF, MINUS_INF]:
        assert value_from_json(value_to_json(v)) == v
    back = value_from_json(value_to_json(sqrt2()))
    assert isinstance(back, Algebraic)
    assert compare_values(back, sqrt2()) is Order.EQ
    assert back.approx == sqrt2().approx


@pytest.mark.parametrize("data", [True, "x", "1/0", [1], {"thom": {"poly": "X"}}, None])
def test_json_rejects(data):
    with pytest.raises(ParseError):
        value_from_json(data)
