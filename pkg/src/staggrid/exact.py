"""Exact dense linear-algebra oracle for the center-to-edge system.

Everything here works on explicit dense matrices over exact arithmetic
(Python ints for the matrix, ``fractions.Fraction`` for right-hand sides),
independent of the O(M) recurrence solver in :mod:`staggrid.grid`.  Its job
is to certify that solver: determinants, ranks, echelon forms, and solves
computed the slow, obviously-correct way, for cross-checking in tests and
in the ``audit`` command.

Dense exact elimination is O(M^3) with coefficient growth, so system
construction is capped at ``MAX_ORACLE_UNKNOWNS`` unknowns.  The cap is an
argument with a default, not a hard limit, but the default is deliberate:
the oracle exists to validate small cases, not to be a production solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np

from .grid import (
    CenterField1D,
    EdgeField1D,
    Family,
    Inconsistent,
    PeriodicStagger1D,
    SolveOutcome,
    Unique,
)

#: Default ceiling on system size for the dense oracle.
MAX_ORACLE_UNKNOWNS = 64

_Matrix = Tuple[Tuple[int, ...], ...]
_FracRow = Tuple[Fraction, ...]


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, np.integer)):
        return Fraction(int(v))
    if isinstance(v, (float, np.floating)):
        return Fraction(float(v))
    raise TypeError(f"cannot convert {type(v).__name__} to Fraction")


def _cyclic_pattern(m: int) -> _Matrix:
    """The M x M coefficient pattern of e_i + e_{i+1} = 2 c_i with wrap.

    Row i has ones in columns i and i+1; the last row wraps its second one
    back to column 1.  M = 1 collapses both ones onto the same entry: the
    single equation 2 e_1 = 2 c_1.
    """
    if m == 1:
        return ((2,),)
    rows = []
    for i in range(m):
        row = [0] * m
        row[i] = 1
        row[(i + 1) % m] = 1
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class DenseSystem:
    """Explicit matrix form A e = b of the center-to-edge equations.

    ``matrix`` is the integer coefficient pattern; ``rhs`` holds the exact
    values 2 c_i.  Construction validates that the matrix really is the
    cyclic pattern for its size, so a DenseSystem cannot describe any other
    linear system.
    """

    m: int
    matrix: _Matrix
    rhs: _FracRow

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"system needs at least one unknown, got m={self.m}")
        if self.matrix != _cyclic_pattern(self.m):
            raise ValueError("matrix is not the cyclic center-to-edge pattern")
        if len(self.rhs) != self.m:
            raise ValueError(
                f"rhs length {len(self.rhs)} does not match m={self.m}"
            )
        if not all(isinstance(v, Fraction) for v in self.rhs):
            raise ValueError("rhs entries must be Fractions")


@dataclass(frozen=True)
class EchelonResult:
    """Row-echelon form of a DenseSystem, with the bookkeeping tests need.

    ``reduced_matrix`` and ``reduced_rhs`` are the matrix and right-hand
    side after forward elimination (no pivot scaling, rows swapped only to
    escape a zero pivot).  ``rank`` counts nonzero rows; ``pivot_columns``
    lists the column of each pivot in row order.
    """

    reduced_matrix: Tuple[_FracRow, ...]
    reduced_rhs: _FracRow
    rank: int
    pivot_columns: Tuple[int, ...]


def build_system(centers: CenterField1D, *,
                 max_unknowns: int = MAX_ORACLE_UNKNOWNS) -> DenseSystem:
    """Materialize the dense system A e = 2 c for a center field."""
    m = centers.grid.n_unknowns
    if m > max_unknowns:
        raise ValueError(
            f"dense oracle capped at {max_unknowns} unknowns; got m={m}"
        )
    rhs = tuple(2 * _to_fraction(v) for v in centers.values)
    return DenseSystem(m, _cyclic_pattern(m), rhs)


def determinant_exact(system: DenseSystem) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    For the cyclic pattern this is 1 - (-1)^M: 2 when M is odd, 0 when M is
    even (and 2 for the M = 1 convention row).  The algorithm is general,
    though; it does not assume that answer.
    """
    m = system.m
    a = [list(row) for row in system.matrix]
    sign = 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, m) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[m - 1][m - 1]


def row_echelon(system: DenseSystem) -> EchelonResult:
    """Forward elimination over Fractions, in natural row order.

    Pivots are never scaled to 1 and rows are swapped only when a pivot
    position is zero, so for the cyclic pattern the reduction is the
    literal sequence "subtract each row from the next, alternating sign".
    That makes the final row the parity witness: its diagonal entry is
    1 - (-1)^M and its right-hand side is (for even M) twice the
    alternating center sum.
    """
    m = system.m
    a = [[Fraction(v) for v in row] for row in system.matrix]
    b = [Fraction(v) for v in system.rhs]
    pivot_cols = []
    row = 0
    for col in range(m):
        if row == m:
            break
        if a[row][col] == 0:
            swap = next((r for r in range(row + 1, m) if a[r][col] != 0), None)
            if swap is None:
                continue
            a[row], a[swap] = a[swap], a[row]
            b[row], b[swap] = b[swap], b[row]
        pivot = a[row][col]
        for r in range(row + 1, m):
            if a[r][col] != 0:
                factor = a[r][col] / pivot
                for c in range(col, m):
                    a[r][c] -= factor * a[row][c]
                b[r] -= factor * b[row]
        pivot_cols.append(col)
        row += 1
    # Rows past the last pivot are structurally zero; rank counts rows that
    # still carry a nonzero coefficient.
    rank = sum(1 for r in range(m) if any(v != 0 for v in a[r]))
    return EchelonResult(
        reduced_matrix=tuple(tuple(r) for r in a),
        reduced_rhs=tuple(b),
        rank=rank,
        pivot_columns=tuple(pivot_cols),
    )


def solve_dense(system: DenseSystem) -> SolveOutcome:
    """Classify and solve the dense system exactly.

    Returns the same outcome types as the fast solver, always in exact
    mode: a full-rank system back-substitutes to :class:`Unique`; a
    rank-deficient one is :class:`Inconsistent` when the zero row keeps a
    nonzero right-hand side, otherwise :class:`Family` with the free
    variable set to zero and the null direction scaled to lead with +1.
    """
    ech = row_echelon(system)
    m = system.m
    a, b = ech.reduced_matrix, ech.reduced_rhs
    grid = PeriodicStagger1D(m + 2)

    if ech.rank == m:
        sol = _back_substitute(a, b, m)
        return Unique(EdgeField1D(grid, np.array(sol, dtype=object)))

    # Exactly one dependent row for this pattern.  Its rhs is the
    # obstruction to solvability.
    zero_row_rhs = b[m - 1]
    if zero_row_rhs != 0:
        return Inconsistent(zero_row_rhs)

    # Consistent singular case: the free column is the one missing from the
    # pivots.  Set that unknown to zero for the particular solution and
    # solve the homogeneous system for the null direction.
    free_col = next(c for c in range(m) if c not in ech.pivot_columns)
    particular = _solve_with_free(a, b, m, free_col, Fraction(0))
    null = _solve_with_free(a, [Fraction(0)] * m, m, free_col, Fraction(1))
    if null[0] < 0:
        null = [-v for v in null]
    scale = null[0]
    null = [v / scale for v in null]
    return Family(
        EdgeField1D(grid, np.array(particular, dtype=object)),
        np.array(null, dtype=object),
    )


def _back_substitute(a, b, m: int) -> list:
    sol = [Fraction(0)] * m
    for r in range(m - 1, -1, -1):
        acc = b[r]
        for c in range(r + 1, m):
            acc -= a[r][c] * sol[c]
        sol[r] = acc / a[r][r]
    return sol


def _solve_with_free(a, b, m: int, free_col: int, free_value: Fraction) -> list:
    """Back-substitute a rank-(m-1) echelon system with one fixed unknown."""
    sol: list = [None] * m
    sol[free_col] = free_value
    for r in range(m - 2, -1, -1):
        pivot_col = next(c for c in range(m) if a[r][c] != 0)
        acc = b[r]
        for c in range(pivot_col + 1, m):
            acc -= a[r][c] * sol[c]
        sol[pivot_col] = acc / a[r][pivot_col]
    return sol
