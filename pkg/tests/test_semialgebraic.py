"""Barcodes of sub-level filtrations, end to end."""

import random
from fractions import Fraction

import pytest

from sabar.persistence import INF, Exact, compare_values
from sabar.pipeline import barcode_from_critical_values, barcode_semialgebraic, critical_values
from sabar.roots import Order


def _births(barcode):
    return [b.birth for b in barcode.bars_sorted()]


def _equal(value, rational):
    return compare_values(value, Exact(Fraction(rational))) is Order.EQ


def test_disk_barcode(disk):
    b0, b1 = barcode_semialgebraic(disk, 16)
    assert len(b0) == 1
    (bar,) = b0.bars
    assert _equal(bar.birth, -1)
    assert bar.death == INF
    assert bar.mult == 1
    assert len(b1) == 0


def test_segment_barcode_is_born_at_an_irrational_value(segment):
    (b0,) = barcode_semialgebraic(segment, 16)
    (bar,) = b0.bars
    assert compare_values(bar.birth, Exact(Fraction(-2))) is Order.GT
    assert compare_values(bar.birth, Exact(Fraction(-1))) is Order.LT
    assert str(bar.birth) == "-1.414214"
    assert bar.death == INF


def test_grid_only_levels(disk):
    b0, b1 = barcode_semialgebraic(disk, 16, levels=[-2, 0, 2])
    assert b0.as_tuples() == {(Exact(Fraction(0)), INF, 1)}
    assert len(b1) == 0


def test_grid_only_levels_are_sorted_and_deduplicated(disk):
    b0, _ = barcode_semialgebraic(disk, 16, levels=[2, 0, -2, 0])
    assert b0.as_tuples() == {(Exact(Fraction(0)), INF, 1)}


def test_extra_levels_keep_the_bars(disk):
    rng = random.Random(6)
    extra = [Fraction(rng.randint(-190, 190), 100) for _ in range(3)]
    values = critical_values(disk).with_levels(extra)
    assert len(values) > 4
    b0, b1 = barcode_from_critical_values(disk, values, 16)
    assert [_equal(v, -1) for v in _births(b0)] == [True]
    assert len(b1) == 0


@pytest.mark.slow
def test_annulus_barcode(annulus):
    b0, b1 = barcode_semialgebraic(annulus, 16)
    assert [_equal(v, -2) for v in _births(b0)] == [True]
    assert [_equal(v, 1) for v in _births(b1)] == [True]
    assert all(b.death == INF for b in (*b0.bars, *b1.bars))


def _assert_torus_bars(b0, b1, b2):
    assert [_equal(v, -3) for v in _births(b0)] == [True]
    assert [(_equal(v, -1), _equal(v, 1)) for v in _births(b1)] == [(True, False), (False, True)]
    assert [_equal(v, 3) for v in _births(b2)] == [True]
    bars = (*b0.bars, *b1.bars, *b2.bars)
    assert all(b.death == INF and b.mult == 1 for b in bars)


@pytest.mark.slow
def test_torus_barcode(torus):
    _assert_torus_bars(*barcode_semialgebraic(torus, 48))


@pytest.mark.slow
def test_torus_extra_levels_keep_the_bars(torus):
    extra = [Fraction(-47, 100), Fraction(267, 100), Fraction(-157, 100)]
    values = critical_values(torus).with_levels(extra)
    _assert_torus_bars(*barcode_from_critical_values(torus, values, 48))
