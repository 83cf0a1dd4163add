"""Shared fixtures: polynomial shorthands and the semi-algebraic inputs used across modules."""

import random
from fractions import Fraction

import pytest

from sabar.algebra.parser import parse_poly
from sabar.algebra.poly import MultiPoly
from sabar.algebra.univariate import UniPoly
from sabar.formulas.ast import ClosedFormula
from sabar.formulas.parser import parse_formula
from sabar.persistence.complex import all_faces, boundary_faces
from sabar.persistence.filtration import Filtration
from sabar.pipeline.family import SemialgebraicInput


def mp(text: str) -> MultiPoly:
    return parse_poly(text)


def up(text: str, var: str = "X") -> UniPoly:
    return parse_poly(text).to_univariate(var)


def closed(text: str) -> ClosedFormula:
    return ClosedFormula.from_formula(parse_formula(text))


def make_input(formula: str, poly: str, radius: int | Fraction, level: int) -> SemialgebraicInput:
    return SemialgebraicInput(closed(formula), mp(poly), Fraction(radius), level)


def random_filtration(rng: random.Random, vertices: int = 5, steps: int = 5) -> Filtration:
    """A few random simplices of dimension <= 2, closed under faces, with random births."""
    tops = [
        tuple(sorted(rng.sample(range(vertices), rng.randint(1, 3))))
        for _ in range(rng.randint(1, 4))
    ]
    simplices = sorted(
        {f for s in tops for f in all_faces(s)}, key=lambda s: (len(s), s)
    )
    births: dict[tuple[int, ...], int] = {}
    for s in simplices:
        faces = [births[f] for _, f in boundary_faces(s)]
        births[s] = max([rng.randrange(steps), *faces])
    return Filtration(births, steps)


@pytest.fixture
def disk() -> SemialgebraicInput:
    """Unit disk filtered by x."""
    return make_input("x^2 + y^2 - 1 <= 0", "x", 4, 1)


@pytest.fixture
def annulus() -> SemialgebraicInput:
    return make_input("(x^2 + y^2 - 1 >= 0) & (x^2 + y^2 - 4 <= 0)", "x", 4, 1)


@pytest.fixture
def segment() -> SemialgebraicInput:
    """[-sqrt 2, sqrt 2] filtered by x."""
    return make_input("x^2 - 2 <= 0", "x", 4, 0)


@pytest.fixture
def torus() -> SemialgebraicInput:
    """Torus of radii 2 and 1 lying in the xy-plane, filtered by x."""
    return make_input("(x^2 + y^2 + z^2 + 3)^2 - 16*x^2 - 16*y^2 = 0", "x", 9, 2)
