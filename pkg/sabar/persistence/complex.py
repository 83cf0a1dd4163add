"""Finite abstract simplicial complexes and their rational homology."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from sabar.errors import FiltrationError
from sabar.persistence.linalg import integer_rank

Simplex = tuple[int, ...]


def normalize(simplex: Iterable[int]) -> Simplex:
    s = tuple(sorted(simplex))
    if not s:
        raise FiltrationError("empty simplex")
    if any(not isinstance(v, int) or v < 0 for v in s):
        raise FiltrationError(f"vertex ids must be non-negative integers: {s}")
    if len(set(s)) != len(s):
        raise FiltrationError(f"repeated vertex in {s}")
    return s


def boundary_faces(simplex: Simplex) -> Iterator[tuple[int, Simplex]]:
    """Codimension-one faces with their signs: removing vertex i gives sign (-1)^i."""
    if len(simplex) == 1:
        return
    for i in range(len(simplex)):
        yield (-1) ** i, simplex[:i] + simplex[i + 1 :]


def all_faces(simplex: Simplex) -> Iterator[Simplex]:
    for k in range(1, len(simplex) + 1):
        yield from combinations(simplex, k)


@dataclass(frozen=True)
class SimplicialComplex:
    simplices: frozenset[Simplex]

    @classmethod
    def from_simplices(
        cls, simplices: Iterable[Iterable[int]], close: bool = True
    ) -> SimplicialComplex:
        """Build from simplices; with ``close`` faces are added, otherwise they must be present."""
        given = {normalize(s) for s in simplices}
        if close:
            return cls(frozenset(f for s in given for f in all_faces(s)))
        for s in given:
            for _, face in boundary_faces(s):
                if face not in given:
                    raise FiltrationError(f"face {face} of {s} is missing")
        return cls(frozenset(given))

    @classmethod
    def empty(cls) -> SimplicialComplex:
        return cls(frozenset())

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def simplices_of_dim(self, p: int) -> list[Simplex]:
        """p-simplices in lexicographic order."""
        return sorted(s for s in self.simplices if len(s) == p + 1)

    def vertices(self) -> list[int]:
        return [s[0] for s in self.simplices_of_dim(0)]

    def issubset(self, other: SimplicialComplex) -> bool:
        return self.simplices <= other.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, simplex: object) -> bool:
        return simplex in self.simplices


def boundary_matrix(k: SimplicialComplex, p: int) -> list[list[int]]:
    """Matrix of the boundary map from p-chains to (p-1)-chains.

    Rows are the (p-1)-simplices and columns the p-simplices, both sorted
    lexicographically. For p = 0 the matrix has no rows.
    """
    if p < 0:
        raise ValueError("dimension must be non-negative")
    cols = k.simplices_of_dim(p)
    if p == 0:
        return []
    rows = k.simplices_of_dim(p - 1)
    index = {s: i for i, s in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for sgn, face in boundary_faces(s):
            matrix[index[face]][j] = sgn
    return matrix


def boundary_rank(k: SimplicialComplex, p: int) -> int:
    if p <= 0:
        return 0
    return integer_rank(boundary_matrix(k, p))


def betti(k: SimplicialComplex, p: int) -> int:
    """dim H_p(K; Q) = dim ker d_p - rank d_(p+1)."""
    if p < 0:
        raise ValueError("dimension must be non-negative")
    n = len(k.simplices_of_dim(p))
    return n - boundary_rank(k, p) - boundary_rank(k, p + 1)


def betti_numbers(k: SimplicialComplex) -> list[int]:
    """All Betti numbers b_0 .. b_dim of K."""
    return [betti(k, p) for p in range(k.dimension + 1)]
