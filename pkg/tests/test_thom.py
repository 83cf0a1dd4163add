import random
from fractions import Fraction

import pytest
import sympy
from conftest import up

from sabar.algebra import UniPoly
from sabar.errors import InputContractError, ParseError
from sabar.roots import (
    Order,
    ThomEncoding,
    approximate,
    compare,
    encode_roots,
    order_roots,
    rational_approx,
    separate,
    signs_at_root,
)
from sabar.roots.thom import count_open


def sqrt2() -> ThomEncoding:
    return encode_roots(up("X^2 - 2"))[1]


def test_encode_two_roots_by_derivative_sign():
    neg, pos = encode_roots(up("X^2 - 2"))
    assert neg.der_signs == (0, -1, 1)
    assert pos.der_signs == (0, 1, 1)
    assert compare(neg, pos) is Order.LT


def test_encode_no_real_roots():
    assert encode_roots(up("X^2 + 1")) == []
    assert encode_roots(up("7")) == []


def test_encode_zero_polynomial():
    with pytest.raises(InputContractError):
        encode_roots(UniPoly.from_coeffs([]))


def test_encode_cubic_in_order():
    roots = encode_roots(up("X^3 - X"))
    assert len(roots) == 3
    for t, value in zip(roots, (-1, 0, 1)):
        assert compare(t, ThomEncoding.from_rational(value)) is Order.EQ
    # distinct roots of a square-free polynomial have distinct sign vectors
    assert len({t.der_signs for t in roots}) == 3


def test_encode_squares_are_made_square_free():
    roots = encode_roots(up("(X - 1)^2*(X + 2)"))
    assert len(roots) == 2
    assert roots[0].poly == up("X^2 + X - 2")


def test_compare_examples():
    sqrt3 = encode_roots(up("X^2 - 3"))[1]
    assert compare(sqrt2(), sqrt3) is Order.LT
    assert compare(sqrt3, sqrt2()) is Order.GT
    one = encode_roots(up("X - 1"))[0]
    right = encode_roots(up("X^2 - 1"))[1]
    assert compare(one, right) is Order.EQ
    minus_sqrt2 = encode_roots(up("X^2 - 2"))[0]
    assert compare(minus_sqrt2, encode_roots(up("X"))[0]) is Order.LT


def test_compare_against_rationals():
    assert compare(sqrt2(), ThomEncoding.from_rational(Fraction(7, 5))) is Order.GT
    assert compare(sqrt2(), ThomEncoding.from_rational(Fraction(3, 2))) is Order.LT
    assert compare(ThomEncoding.from_rational(2), ThomEncoding.from_rational(2)) is Order.EQ


def test_compare_is_a_total_order():
    pool = []
    for text in ["X^2 - 2", "X^2 - 3", "X^3 - 2", "2*X - 3", "X^3 - X - 1"]:
        pool.extend(encode_roots(up(text)))
    rng = random.Random(3)
    for _ in range(30):
        a, b, c = rng.sample(pool, 3)
        assert compare(a, b) == -compare(b, a)
        if compare(a, b) is Order.LT and compare(b, c) is Order.LT:
            assert compare(a, c) is Order.LT


def test_order_roots_merges_families():
    roots = order_roots([up("X^2 - 2"), up("X^2 - 3")])
    assert len(roots) == 4
    assert all(compare(a, b) is Order.LT for a, b in zip(roots, roots[1:]))
    assert [t.der_signs[1] for t in roots] == [-1, -1, 1, 1]


def test_order_roots_drops_shared_root():
    roots = order_roots([up("X^2 - 1"), up("X - 1")])
    assert len(roots) == 2
    assert compare(roots[0], ThomEncoding.from_rational(-1)) is Order.EQ
    assert compare(roots[1], ThomEncoding.from_rational(1)) is Order.EQ
    # the lower degree witness is kept
    assert roots[1].poly == up("X - 1")


def test_order_roots_constants():
    assert order_roots([up("7")]) == []
    assert order_roots([]) == []


def test_order_roots_same_root_from_different_polys():
    roots = order_roots([up("X^2 - 2"), up("X^4 - 4")])
    assert len(roots) == 2
    assert roots[1].poly == up("X^2 - 2")


def test_signs_at_root():
    t = sqrt2()
    assert signs_at_root(t, [up("X")]) == [1]
    assert signs_at_root(t, [up("X^2 - 2")]) == [0]
    assert signs_at_root(t, [up("X - 2"), up("X - 1")]) == [-1, 1]
    assert signs_at_root(t, [up("2*X^2 - 4"), up("-3")]) == [0, -1]


def test_signs_at_root_of_own_polynomial_is_zero():
    for text in ["X^3 - X - 1", "X^2 - 5", "X^4 - 10*X^2 + 1"]:
        for t in encode_roots(up(text)):
            assert signs_at_root(t, [t.poly]) == [0]


def test_rational_approx():
    lo, hi = rational_approx(sqrt2(), Fraction(1, 100))
    assert hi - lo <= Fraction(1, 100)
    assert Fraction(140, 100) < lo < hi < Fraction(143, 100)
    assert lo * lo < 2 < hi * hi

    lo, hi = rational_approx(encode_roots(up("X^2 - 3"))[0], Fraction(1, 10))
    assert hi - lo <= Fraction(1, 10)
    assert hi < 0
    assert lo * lo > 3 > hi * hi

    lo, hi = rational_approx(encode_roots(up("X - 1"))[0], Fraction(1, 1000))
    assert lo <= 1 <= hi
    assert rational_approx(ThomEncoding.from_rational(1), Fraction(1, 1000)) == (1, 1)


def test_rational_approx_rejects_nonpositive_width():
    with pytest.raises(InputContractError):
        rational_approx(sqrt2(), Fraction(0))


def test_approximate():
    assert approximate(sqrt2()) == "1.414214"
    assert approximate(encode_roots(up("X^2 - 2"))[0]) == "-1.414214"
    assert approximate(ThomEncoding.from_rational(Fraction(1, 2)), digits=3) == "0.500"


def test_from_rational():
    t = ThomEncoding.from_rational(Fraction(-3, 4), "Y")
    assert t.is_rational
    assert t.value == Fraction(-3, 4)
    assert t.poly.var == "Y"
    with pytest.raises(ValueError):
        _ = sqrt2().value


def test_json_round_trip():
    t = sqrt2()
    back = ThomEncoding.from_json(t.to_json())
    assert back.der_signs == t.der_signs
    assert compare(back, t) is Order.EQ
    assert t.to_json()["poly"] == "X^2 - 2"


@pytest.mark.parametrize(
    "data",
    [
        {"poly": "X^2 - 2", "der_signs": [0, 1, 1], "interval": ["0", "1"]},
        {"poly": "X^2 - 2", "der_signs": [0, -1, 1], "interval": ["1", "2"]},
        {"poly": "X^2 - 2", "der_signs": [0, 1, 1]},
        {"poly": "X^2 - 2", "der_signs": [0, 1, 1], "interval": ["1", "x"]},
    ],
)
def test_json_rejects_bad_encodings(data):
    with pytest.raises(ParseError):
        ThomEncoding.from_json(data)


def test_count_open():
    assert count_open(up("X^2 - 1"), -1, 1) == 0
    assert count_open(up("X^2 - 1"), -2, 2) == 2
    assert count_open(up("X^2 - 1"), -1, 2) == 1


def test_separate_makes_intervals_disjoint():
    roots = separate(order_roots([up("X^2 - 2"), up("X - 1"), up("5*X - 7")]))
    assert len(roots) == 4
    assert all(a.hi < b.lo for a, b in zip(roots, roots[1:]))


def test_isolation_matches_sympy():
    rng = random.Random(5)
    x = sympy.Symbol("X")
    for _ in range(25):
        coeffs = [rng.randint(-6, 6) for _ in range(rng.randint(2, 7))]
        if not any(coeffs[1:]):
            continue
        f = UniPoly.from_coeffs(coeffs)
        expected = sorted(set(sympy.Poly(list(reversed(f.coeffs)), x).real_roots()))
        ours = encode_roots(f)
        assert len(ours) == len(expected)
        for t, r in zip(ours, expected):
            lo = sympy.Rational(t.lo.numerator, t.lo.denominator)
            hi = sympy.Rational(t.hi.numerator, t.hi.denominator)
            assert bool(lo <= r) and bool(r <= hi)
