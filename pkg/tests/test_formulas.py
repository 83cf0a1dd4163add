from fractions import Fraction

import pytest
from conftest import closed, mp, up

from sabar.algebra import derivatives
from sabar.errors import FormulaBudgetError, InputContractError, MissingVariableError, ParseError
from sabar.formulas import (
    And,
    Atom,
    Interval,
    Not,
    Or,
    Point,
    Relation,
    SignCondition,
    evaluate,
    format_formula,
    parse_formula,
    realizable_sign_conditions,
    realize_univariate,
    to_dnf,
)
from sabar.roots import ThomEncoding, encode_roots


def rational(value) -> ThomEncoding:
    return ThomEncoding.from_rational(Fraction(value))


def test_parse_atoms_and_connectives():
    phi = parse_formula("(x^2 + y^2 - 1 <= 0) & !(x > 0) | (y = 0)")
    assert phi == Or(
        (
            And((Atom(mp("x^2 + y^2 - 1"), Relation.LE), Not(Atom(mp("x"), Relation.GT)))),
            Atom(mp("y"), Relation.EQ),
        )
    )


def test_parse_moves_right_side_over():
    assert parse_formula("x^2 <= 2*y") == Atom(mp("x^2 - 2*y"), Relation.LE)


def test_parse_parenthesized_polynomial_atom():
    phi = parse_formula("(x + 1)*(x - 1) > 0")
    assert phi == Atom(mp("x^2 - 1"), Relation.GT)


@pytest.mark.parametrize(
    "text",
    [
        "(x^2 + y^2 - 1 <= 0) & !(x > 0) | (y = 0)",
        "!(!(x >= 0))",
        "(x != 0) | ((y < 1) & (x - y > 0))",
    ],
)
def test_print_and_parse_agree(text):
    phi = parse_formula(text)
    assert parse_formula(format_formula(phi)) == phi


@pytest.mark.parametrize("text", ["x <", "(x > 0", "x & y", "x = x", "x >= 0 &"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_formula(text)


def test_evaluate():
    disk = parse_formula("x^2 + y^2 - 1 <= 0")
    assert evaluate(disk, {"x": 0, "y": 0})
    assert not evaluate(disk, {"x": 2, "y": 0})
    assert evaluate(parse_formula("(x > 0) & !(x >= 1)"), {"x": Fraction(1, 2)})


def test_evaluate_missing_variable():
    with pytest.raises(MissingVariableError):
        evaluate(parse_formula("x + y > 0"), {"x": 1})


def test_dnf_pushes_negation_and_splits_not_equal():
    assert to_dnf(parse_formula("!(x <= 0)")) == [(Atom(mp("x"), Relation.GT),)]
    assert to_dnf(parse_formula("x != 0")) == [
        (Atom(mp("x"), Relation.LT),),
        (Atom(mp("x"), Relation.GT),),
    ]
    assert to_dnf(parse_formula("!((x >= 0) | (y = 1))")) == [
        (Atom(mp("x"), Relation.LT), Atom(mp("y - 1"), Relation.LT)),
        (Atom(mp("x"), Relation.LT), Atom(mp("y - 1"), Relation.GT)),
    ]


def test_dnf_distributes():
    dnf = to_dnf(parse_formula("((x > 0) | (y > 0)) & (z = 0)"))
    assert dnf == [
        (Atom(mp("x"), Relation.GT), Atom(mp("z"), Relation.EQ)),
        (Atom(mp("y"), Relation.GT), Atom(mp("z"), Relation.EQ)),
    ]


def test_dnf_budget():
    text = " & ".join(f"((x{i} > 0) | (x{i} < -1))" for i in range(7))
    with pytest.raises(FormulaBudgetError, match="more than 64 atoms"):
        to_dnf(parse_formula(text))
    assert len(to_dnf(parse_formula(text), budget=1000)) == 2**7


def test_closed_formula_accepts_weak_atoms_only():
    psi = closed("(x^2 + y^2 - 1 <= 0) | ((x >= 2) & (y = 0))")
    assert len(psi.dnf) == 2
    assert psi.variables() == ("x", "y")
    assert psi.evaluate({"x": 2, "y": 0})
    assert not psi.evaluate({"x": 2, "y": 1})
    with pytest.raises(InputContractError, match="strict atom"):
        closed("x > 0")


def test_realize_closed_interval():
    neg, pos = encode_roots(up("X^2 - 2"))
    r = realize_univariate(parse_formula("X^2 - 2 <= 0"))
    assert r.pieces == (Interval.closed(neg, pos),)
    assert r.is_closed()


def test_realize_half_line():
    phi = parse_formula("(X^2*(X - 1) > 0) & ((X >= 2) | (X <= 0))")
    r = realize_univariate(phi)
    assert r.pieces == (Interval.closed(rational(2), None),)


def test_realize_empty_and_everything():
    assert realize_univariate(parse_formula("X^2 < 0")).is_empty
    assert realize_univariate(parse_formula("X^2 + 1 > 0")).pieces == (Interval.open(None, None),)


def test_realize_points_and_open_pieces():
    r = realize_univariate(parse_formula("(X^3 - X = 0) | ((X > 2) & (X < 3))"))
    assert r.pieces == (
        Point(rational(-1)),
        Point(rational(0)),
        Point(rational(1)),
        Interval.open(rational(2), rational(3)),
    )
    assert not r.is_closed()


def test_realize_merges_adjacent_cells():
    r = realize_univariate(parse_formula("(X <= 1) | (X - 1 >= 0)"))
    assert r.pieces == (Interval.open(None, None),)


def test_realize_rejects_two_variables():
    with pytest.raises(InputContractError):
        realize_univariate(parse_formula("x + y > 0"))


def test_sign_conditions_of_linear():
    found = realizable_sign_conditions(derivatives(up("X")))
    assert {c.signs for c in found} == {(-1, 1), (0, 1), (1, 1)}


def test_sign_conditions_with_two_roots():
    found = realizable_sign_conditions(derivatives(up("X^2 - 2")))
    assert {c.signs for c in found} == {
        (1, -1, 1),
        (0, -1, 1),
        (-1, -1, 1),
        (-1, 0, 1),
        (-1, 1, 1),
        (0, 1, 1),
        (1, 1, 1),
    }


def test_sign_conditions_without_real_roots():
    found = realizable_sign_conditions(derivatives(up("X^2 + 1")))
    assert {c.signs for c in found} == {(1, -1, 1), (1, 0, 1), (1, 1, 1)}


def test_relaxation():
    weak = SignCondition.of((1, 0, -1)).relaxation()
    assert weak.admits((0, 0, -1))
    assert weak.admits((1, 0, 0))
    assert not weak.admits((-1, 0, 0))


_STRICT = {-1: Relation.LT, 0: Relation.EQ, 1: Relation.GT}
_WEAK = {-1: Relation.LE, 0: Relation.EQ, 1: Relation.GE}


@pytest.mark.parametrize("text", ["X^3 - X", "X^4 - 3*X^2 + 1", "X^2 + X + 1"])
def test_closure_of_sign_condition_is_its_relaxation(text):
    family = [d.to_multipoly() for d in derivatives(up(text))]
    for condition in realizable_sign_conditions(family):
        strict = And(tuple(Atom(family[i], _STRICT[s]) for i, s in condition.assignments))
        weak = And(tuple(Atom(family[i], _WEAK[s]) for i, s in condition.assignments))
        (piece,) = realize_univariate(strict).pieces
        if isinstance(piece, Interval):
            piece = Interval.closed(piece.lo, piece.hi)
        assert realize_univariate(weak).pieces == (piece,)
