from fractions import Fraction

import pytest
from conftest import make_input, mp

from sabar.errors import InputContractError
from sabar.persistence import betti, betti_numbers
from sabar.pipeline import Grid, half_width, sublevel_complex, sublevel_filtration
from sabar.pipeline.grid import ScaledPoly, thread_count


def test_grid_coordinates():
    g = Grid(2, 4, 2)
    assert g.coordinate(0) == -2
    assert g.coordinate(2) == 0
    assert g.coordinate(3) == 1
    assert g.numerator(4) == 8
    assert g.vertex_count == 25
    assert g.vertex_id((1, 0)) == 1
    assert g.vertex_id((0, 1)) == 5
    assert g.vertex_index(6) == (1, 1)
    assert len(list(g.cells())) == 16


def test_freudenthal_cell():
    g = Grid(2, 4, 2)
    assert g.corners((0, 0)) == [0, 5, 1, 6]
    assert g.freudenthal((0, 0)) == [(0, 1, 6), (0, 5, 6)]
    assert len(Grid(3, 2, 1).freudenthal((0, 0, 0))) == 6


def test_grid_needs_two_cells():
    with pytest.raises(InputContractError, match="grid_n"):
        Grid(2, 1, 2)


@pytest.mark.parametrize(
    "radius,expected",
    [(4, 2), (9, 3), (5, 3), (Fraction(1, 4), 1), (Fraction(7, 2), 2)],
)
def test_half_width(radius, expected):
    assert half_width(Fraction(radius)) == expected


def test_scaled_poly_is_exact():
    g = Grid(2, 4, 2)
    p = mp("x^2/3 - y/2 + 1")
    scaled = ScaledPoly(p, ("x", "y"), g)
    for vid in range(g.vertex_count):
        index = g.vertex_index(vid)
        point = {"x": g.coordinate(index[0]), "y": g.coordinate(index[1])}
        assert scaled.value(scaled.at(index)) == p.evaluate(point)


def test_scaled_constant():
    g = Grid(1, 2, 1)
    scaled = ScaledPoly(mp("5/2"), ("x",), g)
    assert scaled.value(scaled.at((0,))) == Fraction(5, 2)


def test_thread_count(monkeypatch):
    monkeypatch.delenv("SABAR_THREADS", raising=False)
    assert thread_count(2) == 2
    monkeypatch.setenv("SABAR_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("SABAR_THREADS", "zero")
    assert thread_count(2) == 2
    monkeypatch.setenv("SABAR_THREADS", "0")
    assert thread_count() == 1


def test_disk_sublevels(disk):
    full = sublevel_complex(disk, Fraction(2), 32)
    assert betti_numbers(full)[:2] == [1, 0]
    assert len(sublevel_complex(disk, Fraction(-2), 32)) == 0


def test_annulus_has_a_loop(annulus):
    k = sublevel_complex(annulus, Fraction(2), 32)
    assert betti(k, 0) == 1
    assert betti(k, 1) == 1


def test_sublevels_are_nested(disk):
    small = sublevel_complex(disk, Fraction(0), 16)
    large = sublevel_complex(disk, Fraction(1, 2), 16)
    assert small.issubset(large)
    assert len(small) < len(large)


def test_threads_do_not_change_the_complex(annulus):
    assert sublevel_complex(annulus, Fraction(0), 16, threads=1) == sublevel_complex(
        annulus, Fraction(0), 16, threads=4
    )


def test_filtration_matches_single_levels(disk):
    levels = [Fraction(-1, 2), Fraction(0), Fraction(2)]
    f = sublevel_filtration(disk, levels, 16)
    assert f.length == 3
    for i, t in enumerate(levels):
        assert f.complex_at(i) == sublevel_complex(disk, t, 16)


def test_filtration_level_checks(disk):
    with pytest.raises(InputContractError, match="strictly increasing"):
        sublevel_filtration(disk, [Fraction(1), Fraction(0)], 8)
    with pytest.raises(InputContractError, match="at least one level"):
        sublevel_filtration(disk, [], 8)


def test_refining_the_grid_keeps_homology():
    square = make_input("(x^2 - 1 <= 0) & (y^2 - 1 <= 0)", "x + y", 4, 1)
    for n in (8, 16):
        assert betti_numbers(sublevel_complex(square, Fraction(0), n))[:2] == [1, 0]


@pytest.mark.parametrize("n", [16, 32])
def test_disk_and_annulus_homology_survives_refinement(disk, annulus, n):
    assert betti_numbers(sublevel_complex(disk, Fraction(0), n))[:2] == [1, 0]
    assert betti_numbers(sublevel_complex(disk, Fraction(2), n))[:2] == [1, 0]
    assert betti_numbers(sublevel_complex(annulus, Fraction(0), n))[:2] == [1, 0]
    assert betti_numbers(sublevel_complex(annulus, Fraction(2), n))[:2] == [1, 1]


def test_simplex_needs_one_conjunct_on_all_vertices():
    # 0 satisfies only the first conjunct and 1/2 only the second.
    split = make_input("(x <= 0) | (2*x - 1 >= 0)", "x", 1, 0)
    k = sublevel_complex(split, Fraction(2), 4)
    assert (2, 3) not in k
    assert betti(k, 0) == 2
