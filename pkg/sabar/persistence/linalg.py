"""Exact linear algebra over Q.

Ranks of integer matrices use fraction-free elimination; subspace arithmetic
for the subquotient oracle uses reduced row echelon form over ``Fraction``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import reduce
from math import gcd

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def _primitive(values: dict[int, int]) -> dict[int, int]:
    g = reduce(gcd, values.values(), 0)
    if g > 1:
        return {k: v // g for k, v in values.items()}
    return values


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            factor = m[r][col]
            m[r] = [(p * m[r][c] - factor * m[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def reduce_columns(columns: Sequence[dict[int, int]]) -> list[int | None]:
    """Left-to-right column reduction of a sparse integer matrix.

    Columns are dicts row -> entry; the result holds the pivot (largest row
    index with a nonzero entry) of each reduced column, or None for a column
    that reduced to zero. Reduced columns have pairwise distinct pivots and
    the nonzero ones span the column space of every prefix.
    """
    lows: list[int | None] = []
    owner: dict[int, dict[int, int]] = {}
    for col in columns:
        work = {k: v for k, v in col.items() if v}
        while work:
            low = max(work)
            other = owner.get(low)
            if other is None:
                break
            a, b = other[low], work[low]
            merged = {k: a * v for k, v in work.items()}
            for k, v in other.items():
                merged[k] = merged.get(k, 0) - b * v
            work = _primitive({k: v for k, v in merged.items() if v})
        if work:
            low = max(work)
            owner[low] = work
            lows.append(low)
        else:
            lows.append(None)
    return lows


def rref(rows: Iterable[Sequence[Fraction | int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(vectors: Iterable[Sequence[Fraction | int]]) -> int:
    return len(rref(vectors)[1])


def nullspace(matrix: Sequence[Sequence[Fraction | int]], ncols: int) -> list[Vector]:
    """Basis of {x : matrix @ x = 0}; ``ncols`` fixes the width for empty matrices."""
    reduced, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def span_basis(vectors: Iterable[Sequence[Fraction | int]]) -> list[Vector]:
    return rref(vectors)[0]


def intersection(u: Sequence[Vector], w: Sequence[Vector], dim: int) -> list[Vector]:
    """Basis of span(u) ∩ span(w) in Q^dim, via the kernel of [u | -w]."""
    if not u or not w:
        return []
    # columns: u vectors then w vectors; solve sum a_i u_i - sum b_j w_j = 0
    stacked = [
        [ui[r] for ui in u] + [-wj[r] for wj in w] for r in range(dim)
    ]
    kernel = nullspace(stacked, len(u) + len(w))
    image = [
        [sum((coeffs[i] * u[i][r] for i in range(len(u))), Fraction(0)) for r in range(dim)]
        for coeffs in kernel
    ]
    return span_basis(image)


def contains(space: Sequence[Vector], vectors: Sequence[Vector]) -> bool:
    """Whether every vector lies in span(space)."""
    return rank(list(space) + list(vectors)) == rank(space)
