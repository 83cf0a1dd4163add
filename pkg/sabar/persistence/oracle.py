"""Direct computation of the M/N/P subquotients of H_p(K_i).

Independent of the rank formula used by ``Filtration.multiplicity``: cycle and
boundary spaces are built explicitly in the chain space of K_N, and the
preimages of images are formed by subspace intersection. Classes of
H_p(K_i) are cycles of K_i modulo B_p(K_i), so a subspace of H_p(K_i) is
represented by the cycles it contains, and its dimension is that of the
cycle space minus dim B_p(K_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sabar.errors import IndexRangeError, InvariantError
from sabar.persistence.complex import Simplex, boundary_faces
from sabar.persistence.filtration import Filtration
from sabar.persistence.linalg import Vector, contains, intersection, nullspace, rank, span_basis


@dataclass(frozen=True)
class SubquotientReport:
    dim_M: int
    dim_N: int
    dim_P: int

    def __post_init__(self) -> None:
        if self.dim_N > self.dim_M or self.dim_P != self.dim_M - self.dim_N:
            raise InvariantError(f"inconsistent subquotient dimensions {self}")


class _Chains:
    """Chain spaces of the last complex, shared by every K_i."""

    def __init__(self, f: Filtration, p: int) -> None:
        self.f = f
        self.p = p
        last = f.complex_at(f.n)
        self.cells = last.simplices_of_dim(p)
        self.faces = last.simplices_of_dim(p - 1) if p > 0 else []
        self.cofaces = last.simplices_of_dim(p + 1)
        self.index = {s: i for i, s in enumerate(self.cells)}
        self.dim = len(self.cells)

    def _alive(self, s: Simplex, i: int) -> bool:
        return self.f.births[s] <= i

    def cycles(self, i: int) -> list[Vector]:
        """Basis of Z_p(K_i) inside C_p(K_N)."""
        if i < 0:
            return []
        cols = [s for s in self.cells if self._alive(s, i)]
        if self.p == 0:
            basis = [[Fraction(int(c == k)) for k in range(len(cols))] for c in range(len(cols))]
        else:
            face_index = {s: r for r, s in enumerate(self.faces)}
            matrix = [[Fraction(0)] * len(cols) for _ in self.faces]
            for j, s in enumerate(cols):
                for sgn, face in boundary_faces(s):
                    matrix[face_index[face]][j] = Fraction(sgn)
            basis = nullspace(matrix, len(cols))
        return [self._embed(cols, v) for v in basis]

    def boundaries(self, i: int) -> list[Vector]:
        """Basis of B_p(K_i) inside C_p(K_N)."""
        if i < 0:
            return []
        vectors = []
        for s in self.cofaces:
            if not self._alive(s, i):
                continue
            v = [Fraction(0)] * self.dim
            for sgn, face in boundary_faces(s):
                v[self.index[face]] = Fraction(sgn)
            vectors.append(v)
        return span_basis(vectors)

    def _embed(self, cols: list[Simplex], v: Vector) -> Vector:
        out = [Fraction(0)] * self.dim
        for s, x in zip(cols, v):
            out[self.index[s]] = x
        return out


def homology_basis(f: Filtration, p: int, i: int) -> list[Vector]:
    """Cycle representatives of a basis of H_p(K_i)."""
    chains = _Chains(f, p)
    basis = chains.boundaries(i)
    reps: list[Vector] = []
    for z in chains.cycles(i):
        if not contains(basis, [z]):
            basis = basis + [z]
            reps.append(z)
    return reps


def _preimage_dim(chains: _Chains, i: int, j: int) -> int:
    """dim of the preimage under H_p(K_i) -> H_p(K_j) of the image of H_p(K_{i-1})."""
    z_i = chains.cycles(i)
    b_i = chains.boundaries(i)
    target = span_basis(chains.cycles(i - 1) + chains.boundaries(j))
    lifted = intersection(z_i, target, chains.dim) if target else []
    if not contains(lifted, b_i):
        raise InvariantError("boundaries of K_i escaped the preimage")
    return len(lifted) - len(b_i)


def subquotient_oracle(f: Filtration, p: int, i: int, j: int) -> SubquotientReport:
    """dim M, dim N and dim P = M/N for classes born at i and dying at j (j = N+1: never)."""
    if not (0 <= i <= j <= f.length) or p < 0:
        raise IndexRangeError(f"need 0 <= i <= j <= {f.length}, got i={i}, j={j}")
    chains = _Chains(f, p)
    if j == f.length:
        h_i = rank(chains.cycles(i)) - len(chains.boundaries(i))
        dim_m = h_i
        dim_n = _preimage_dim(chains, i, f.n) if i <= f.n else h_i
    elif i == j:
        dim_m = dim_n = _preimage_dim(chains, i, j)
    else:
        dim_m = _preimage_dim(chains, i, j)
        dim_n = _preimage_dim(chains, i, j - 1)
    return SubquotientReport(dim_m, dim_n, dim_m - dim_n)
