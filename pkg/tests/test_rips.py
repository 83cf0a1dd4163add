from fractions import Fraction

import pytest

from sabar.errors import InputContractError
from sabar.persistence import INF, Exact, subquotient_oracle
from sabar.pipeline import rips_filtration
from sabar.pipeline.rips import _thin, squared_distance

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def ex(v) -> Exact:
    return Exact(Fraction(v))


def test_squared_distance():
    a = (Fraction(0), Fraction(0))
    b = (Fraction(1, 2), Fraction(3))
    assert squared_distance(a, b) == Fraction(37, 4)


def test_square_loop():
    f = rips_filtration(SQUARE, 1)
    assert f.values == [ex(0), ex(1), ex(2)]
    b0, b1 = f.barcodes(1)
    assert b0.as_tuples() == {(ex(0), ex(1), 3), (ex(0), INF, 1)}
    assert b1.as_tuples() == {(ex(1), ex(2), 1)}


def test_single_point():
    f = rips_filtration([(3, 4)], 2)
    b0, b1, b2 = f.barcodes(2)
    assert b0.as_tuples() == {(ex(0), INF, 1)}
    assert len(b1) == len(b2) == 0


def test_thin():
    thresholds = [Fraction(i) for i in range(10)]
    assert _thin(thresholds, 3) == [0, 5, 9]
    assert _thin(thresholds, 1) == [9]
    assert _thin(thresholds, 20) == thresholds
    with pytest.raises(InputContractError, match="positive"):
        _thin(thresholds, 0)


def test_thinned_square():
    f = rips_filtration(SQUARE, 1, steps=2)
    assert f.values == [ex(0), ex(2)]
    b0, b1 = f.barcodes(1)
    assert b0.as_tuples() == {(ex(0), ex(2), 3), (ex(0), INF, 1)}
    assert len(b1) == 0


@pytest.mark.parametrize(
    "points,max_dim,match",
    [
        (SQUARE, 4, "max_dim"),
        ([], 1, "at least one point"),
        ([(0, 0), (1,)], 1, "different dimensions"),
        ([(0, 0), (0, 0)], 1, "distinct"),
    ],
)
def test_rips_rejects(points, max_dim, match):
    with pytest.raises(InputContractError, match=match):
        rips_filtration(points, max_dim)


def test_square_matches_the_subquotient_oracle():
    f = rips_filtration(SQUARE, 1)
    for p in range(2):
        for i in range(f.length):
            for j in range(i, f.length + 1):
                assert f.multiplicity(p, i, j) == subquotient_oracle(f, p, i, j).dim_P
