"""The rank formula for multiplicities against explicit subquotients."""

import random

import pytest
from conftest import random_filtration

from sabar.errors import IndexRangeError, InvariantError
from sabar.persistence import (
    Filtration,
    SimplicialComplex,
    SubquotientReport,
    homology_basis,
    subquotient_oracle,
)


def test_edge_subquotients():
    f = Filtration({(0,): 0, (1,): 0, (0, 1): 1}, 2)
    # classes of H_0(K_0) that die entering K_1: the difference of the two vertices
    report = subquotient_oracle(f, 0, 0, 1)
    assert report == SubquotientReport(dim_M=1, dim_N=0, dim_P=1)
    assert subquotient_oracle(f, 0, 0, 2) == SubquotientReport(dim_M=2, dim_N=1, dim_P=1)


def test_diagonal_query_is_empty():
    f = Filtration({(0,): 0, (1,): 0, (0, 1): 1}, 2)
    report = subquotient_oracle(f, 0, 0, 0)
    assert report.dim_M == report.dim_N
    assert report.dim_P == 0


def test_constant_filtration_creates_nothing_finite():
    k = SimplicialComplex.from_simplices([(0, 1), (2,)])
    f = Filtration.from_complexes([k, k])
    report = subquotient_oracle(f, 0, 0, 1)
    assert report.dim_M == report.dim_N
    assert report.dim_P == 0
    assert subquotient_oracle(f, 0, 0, 2).dim_P == 2


def test_homology_basis():
    k = SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2), (3, 4)])
    f = Filtration.from_complexes([k])
    assert len(homology_basis(f, 0, 0)) == 2
    assert len(homology_basis(f, 1, 0)) == 1


def test_report_consistency_is_checked():
    with pytest.raises(InvariantError):
        SubquotientReport(dim_M=1, dim_N=2, dim_P=-1)
    with pytest.raises(InvariantError):
        SubquotientReport(dim_M=3, dim_N=1, dim_P=1)


def test_oracle_index_checks():
    f = Filtration({(0,): 0}, 1)
    with pytest.raises(IndexRangeError):
        subquotient_oracle(f, 0, 1, 0)
    with pytest.raises(IndexRangeError):
        subquotient_oracle(f, -1, 0, 0)


@pytest.mark.slow
def test_formula_matches_oracle_on_random_filtrations():
    rng = random.Random(2023)
    for _ in range(200):
        f = random_filtration(rng)
        for p in range(3):
            for i in range(f.length + 1):
                for j in range(i, f.length + 1):
                    assert f.multiplicity(p, i, j) == subquotient_oracle(f, p, i, j).dim_P
