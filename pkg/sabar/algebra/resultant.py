"""Sylvester resultants with fraction-free (Bareiss) elimination."""

from __future__ import annotations

import logging

from sabar.algebra.poly import MultiPoly
from sabar.algebra.univariate import UniPoly
from sabar.errors import MissingVariableError, ZeroPolynomialError

logger = logging.getLogger(__name__)


def _as_multi(p: MultiPoly | UniPoly) -> MultiPoly:
    return p.to_multipoly() if isinstance(p, UniPoly) else p


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> list[list[MultiPoly]]:
    """Sylvester matrix of f and g in ``var``; coefficients highest degree first."""
    fc = list(reversed(f.coefficients_in(var)))
    gc = list(reversed(g.coefficients_in(var)))
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = MultiPoly.zero()
    rows: list[list[MultiPoly]] = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant by fraction-free Gaussian elimination; every division is exact."""
    n = len(matrix)
    if n == 0:
        return MultiPoly.constant(1)
    m = [list(row) for row in matrix]
    negate = False
    prev = MultiPoly.constant(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero()
            m[k], m[swap] = m[swap], m[k]
            negate = not negate
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = MultiPoly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if negate else det


def resultant(f: MultiPoly | UniPoly, g: MultiPoly | UniPoly, var: str) -> MultiPoly:
    """Res_var(f, g): zero exactly where f and g share a root in ``var`` or both leading
    coefficients vanish."""
    f, g = _as_multi(f), _as_multi(g)
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("resultant of the zero polynomial")
    if not f.depends_on(var) and not g.depends_on(var):
        raise MissingVariableError(f"variable {var!r} occurs in neither polynomial")
    res = bareiss_determinant(sylvester_matrix(f, g, var))
    logger.debug(
        "Res_%s of degrees %d, %d has %d terms", var, f.degree(var), g.degree(var), len(res.terms)
    )
    return res
