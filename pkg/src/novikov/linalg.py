"""Exact linear algebra over Q and over number fields.

Rational ranks are routed through the fraction-free integer kernel
(``novikov.kernels``); number-field matrices use plain Gaussian elimination
with field inverses.  Everything is exact; there is no floating point
anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import kernels
from .numfield import FieldElement
from .polyq import Poly


def _clear_row_denominators(row):
    den = math.lcm(*(Fraction(c).denominator for c in row)) if row else 1
    return [int(Fraction(c) * den) for c in row]


def rank_rational(rows, ncols: int) -> int:
    """Rank of a matrix with Fraction/int entries."""
    if not rows or ncols == 0:
        return 0
    int_rows = [_clear_row_denominators(r) for r in rows]
    return kernels.rank_int(int_rows, ncols)


def rank_generic(rows, ncols: int) -> int:
    """Rank by Gaussian elimination with division; entries form a field."""
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, nrows):
            if m[i][col]:
                f = m[i][col] / pivot
                m[i] = [m[i][j] - f * m[rank][j] for j in range(ncols)]
        rank += 1
    return rank


def rank_matrix(rows, ncols: int) -> int:
    """Rank dispatch: integer kernel for rational entries, generic otherwise."""
    for r in rows:
        for c in r:
            if isinstance(c, FieldElement):
                return rank_generic(rows, ncols)
    return rank_rational(rows, ncols)


def nullspace(rows, ncols: int, zero, one):
    """Basis of the right kernel of the matrix, as length-``ncols`` vectors."""
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []  # (row, col)
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [c / pv for c in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [m[i][j] - f * m[rank][j] for j in range(ncols)]
        pivots.append((rank, col))
        rank += 1
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, c in pivots:
            vec[c] = -m[r][free]
        basis.append(vec)
    return basis


class Span:
    """Incrementally built subspace with membership tests.

    Rows are kept in reduced echelon form; entries must support field
    arithmetic (Fraction or FieldElement).
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows = []  # (pivot_col, normalized vector)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec):
        vec = list(vec)
        for pcol, row in self.rows:
            if vec[pcol]:
                f = vec[pcol]
                vec = [vec[j] - f * row[j] for j in range(self.ncols)]
        return vec

    def add(self, vec) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        vec = self._reduce(vec)
        pcol = next((j for j in range(self.ncols) if vec[j]), None)
        if pcol is None:
            return False
        pv = vec[pcol]
        vec = [c / pv for c in vec]
        # back-substitute into the stored rows to keep the form reduced
        self.rows = [
            (pc, [row[j] - row[pcol] * vec[j] for j in range(self.ncols)]
             if row[pcol] else row)
            for pc, row in self.rows
        ]
        self.rows.append((pcol, vec))
        self.rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vec) -> bool:
        return all(not c for c in self._reduce(vec))


def express(generators, target, zero):
    """Coefficients x with sum x_i * generators[i] = target, or None.

    Solves the small dense system afresh; intended for low-dimensional
    cohomology coordinates, not bulk elimination.
    """
    n = len(target)
    k = len(generators)
    # augmented rows: [generators^T | target] as columns -> row per ambient coord
    m = [[generators[i][r] for i in range(k)] + [target[r]] for r in range(n)]
    pivots = []
    rank = 0
    for col in range(k):
        piv = next((i for i in range(rank, n) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [c / pv for c in m[rank]]
        for i in range(n):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [m[i][j] - f * m[rank][j] for j in range(k + 1)]
        pivots.append(col)
        rank += 1
    for i in range(rank, n):
        if m[i][k]:
            return None  # inconsistent
    coeffs = [zero] * k
    for r, col in enumerate(pivots):
        coeffs[col] = m[r][k]
    return coeffs


def kernel_lattice_int(rows, ncols: int):
    """Basis of the integer kernel lattice of an integer matrix.

    Unimodular column reduction; the non-pivot transform columns span
    ker as a Z-lattice.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    t = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_sub(c, c0, q):
        for i in range(nrows):
            m[i][c] -= q * m[i][c0]
        for i in range(ncols):
            t[i][c] -= q * t[i][c0]

    pivot_cols = set()
    for r in range(nrows):
        active = [c for c in range(ncols) if c not in pivot_cols and m[r][c]]
        while len(active) > 1:
            active.sort(key=lambda c: abs(m[r][c]))
            c0 = active[0]
            for c in active[1:]:
                col_sub(c, c0, m[r][c] // m[r][c0])
            active = [c for c in active if m[r][c]]
        if active:
            pivot_cols.add(active[0])
    return [[t[i][c] for i in range(ncols)]
            for c in range(ncols) if c not in pivot_cols]


def char_poly_rational(mat) -> Poly:
    """Characteristic polynomial det(tI - A) of a small rational matrix."""
    n = len(mat)
    entries = [[Poly([-Fraction(mat[i][j]), 1]) if i == j
                else Poly([-Fraction(mat[i][j])])
                for j in range(n)] for i in range(n)]
    return _poly_det(entries)


def _poly_det(entries) -> Poly:
    n = len(entries)
    if n == 0:
        return Poly.const(1)
    if n == 1:
        return entries[0][0]
    det = Poly()
    sign = 1
    for j in range(n):
        if not entries[0][j].is_zero():
            minor = [[entries[i][k] for k in range(n) if k != j]
                     for i in range(1, n)]
            term = entries[0][j] * _poly_det(minor)
            det = det + (term if sign > 0 else -term)
        sign = -sign
    return det
