"""1D periodic staggered-grid transforms between cell centers and cell edges.

A periodic staggered grid is described by N edge points, the last two of
which are periodic images of the first two (e_{N-1} = e_1, e_N = e_2, and
c_{N-1} = c_1 for the centers).  That leaves M = N - 2 independent edge
values and M independent center values, coupled by the averaging relation

    c_i = (e_i + e_{i+1}) / 2,   i = 1..M,   with e_{M+1} wrapping to e_1.

Averaging edges to centers is a plain O(M) stencil.  The reverse direction
is a cyclic linear system whose character depends only on the parity of N:

* odd N: exactly one solution.  It is recovered in O(M) by seeding
  e_1 = sum_{i=1..M} (-1)^(M-i) c_i and running the forward recurrence
  e_{i+1} = 2 c_i - e_i.
* even N: the system matrix is singular.  Solutions exist only when the
  alternating sum above vanishes, and then they form a one-parameter family
  whose direction is the checkerboard vector (+1, -1, +1, ...).

Fields hold float64 values by default.  Constructing a field from
``fractions.Fraction`` entries switches every operation on it to exact
rational arithmetic; in that mode the even-N consistency test is exact and
the ``tolerance`` argument is ignored.

All functions here are pure: they never mutate their inputs and keep no
module state, so concurrent use on distinct values needs no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import InconsistentDataError, ParityError

#: Default relative tolerance for the floating-point consistency test.
DEFAULT_TOLERANCE = 1e-10

OUTCOME_ALWAYS_UNIQUE = "always-unique"
OUTCOME_CONSISTENT_DEPENDENT = "consistent-dependent"


@dataclass(frozen=True)
class PeriodicStagger1D:
    """Grid descriptor: N edge points including the two periodic images.

    Only N is stored; everything else (unknown count, parity) is derived so
    the descriptor can never go out of sync with itself.
    """

    n_edges: int

    def __post_init__(self) -> None:
        if not isinstance(self.n_edges, int) or isinstance(self.n_edges, bool):
            raise ValueError(f"n_edges must be an int, got {self.n_edges!r}")
        if self.n_edges < 3:
            raise ValueError(f"n_edges must be at least 3, got {self.n_edges}")

    @property
    def n_unknowns(self) -> int:
        """Count M = N - 2 of independent edge values."""
        return self.n_edges - 2

    @property
    def n_centers(self) -> int:
        """Count of independent center values; equals n_unknowns."""
        return self.n_edges - 2

    @property
    def is_odd(self) -> bool:
        return self.n_edges % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"


def _coerce_values(values, expected_len: int) -> np.ndarray:
    """Normalize a value sequence to a 1-D array of float64 or Fraction.

    Object input (anything containing a Fraction) selects exact mode; all
    entries are then coerced to Fraction.  Everything else must convert to
    finite float64.
    """
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError(f"values must be one-dimensional, got shape {arr.shape}")
    if arr.shape[0] != expected_len:
        raise ValueError(
            f"length mismatch: grid expects {expected_len} values, got {arr.shape[0]}"
        )
    if arr.dtype == object:
        out = np.empty(expected_len, dtype=object)
        for k, v in enumerate(arr):
            if isinstance(v, Fraction):
                out[k] = v
            elif isinstance(v, (int, np.integer)):
                out[k] = Fraction(int(v))
            elif isinstance(v, (float, np.floating)):
                if not np.isfinite(v):
                    raise ValueError(f"non-finite value at index {k}: {v!r}")
                out[k] = Fraction(float(v))
            else:
                raise ValueError(f"cannot use {type(v).__name__} value at index {k}")
        return out
    out = np.array(arr, dtype=np.float64)
    if not np.all(np.isfinite(out)):
        bad = int(np.flatnonzero(~np.isfinite(out))[0])
        raise ValueError(f"non-finite value at index {bad}: {out[bad]!r}")
    return out


@dataclass(frozen=True, eq=False)
class CenterField1D:
    """Values c_1..c_M at the independent cell centers of a periodic grid."""

    grid: PeriodicStagger1D
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _coerce_values(self.values, self.grid.n_centers))

    @property
    def exact(self) -> bool:
        return self.values.dtype == object


@dataclass(frozen=True, eq=False)
class EdgeField1D:
    """Values e_1..e_M at the independent cell edges of a periodic grid.

    The periodic images e_{N-1} = e_1 and e_N = e_2 are never stored; use
    :meth:`with_periodic_images` when the full length-N array is needed.
    """

    grid: PeriodicStagger1D
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _coerce_values(self.values, self.grid.n_unknowns))

    @property
    def exact(self) -> bool:
        return self.values.dtype == object

    def with_periodic_images(self) -> np.ndarray:
        """Full periodic edge array (e_1, ..., e_M, e_1, e_2) of length N."""
        m = self.grid.n_unknowns
        return np.concatenate([self.values, self.values[[0, 1 % m]]])


def _alternating_signs(m: int, exact: bool) -> np.ndarray:
    """Checkerboard vector (+1, -1, +1, ...) of length m, matching the mode."""
    if exact:
        return np.array([Fraction(1 - 2 * (k % 2)) for k in range(m)], dtype=object)
    signs = np.ones(m, dtype=np.float64)
    signs[1::2] = -1.0
    return signs


@dataclass(frozen=True, eq=False)
class Unique:
    """Solve outcome for odd N: the single edge field."""

    edges: EdgeField1D


@dataclass(frozen=True, eq=False)
class Family:
    """Solve outcome for consistent even N: a one-parameter solution family.

    Every member is ``particular + t * null_direction`` for real t; the null
    direction is the checkerboard vector (+1, -1, ...), which averages to
    zero at every center.
    """

    particular: EdgeField1D
    null_direction: np.ndarray

    def member(self, t) -> EdgeField1D:
        """The family member at parameter value t."""
        p = self.particular
        if p.exact:
            t = t if isinstance(t, Fraction) else Fraction(t)
        else:
            t = float(t)
        return EdgeField1D(p.grid, p.values + t * self.null_direction)

    def pinned(self, pin_index: int, pin_value) -> EdgeField1D:
        """The single member with e_{pin_index} = pin_value (1-based index)."""
        m = self.particular.grid.n_unknowns
        if not 1 <= pin_index <= m:
            raise ValueError(f"pin index must be in 1..{m}, got {pin_index}")
        k = pin_index - 1
        if self.particular.exact:
            pin_value = pin_value if isinstance(pin_value, Fraction) else Fraction(pin_value)
        else:
            pin_value = float(pin_value)
            if not np.isfinite(pin_value):
                raise ValueError(f"pin value must be finite, got {pin_value!r}")
        t = (pin_value - self.particular.values[k]) / self.null_direction[k]
        return self.member(t)


@dataclass(frozen=True, eq=False)
class Inconsistent:
    """Solve outcome for even N when no edge field reproduces the centers.

    ``residual`` is twice the alternating center sum, i.e. the right-hand
    side left over in the zero row of the eliminated system.
    """

    residual: Union[float, Fraction]


SolveOutcome = Union[Unique, Family, Inconsistent]


@dataclass(frozen=True)
class SolvabilityReport:
    """Parity-determined facts about the center-to-edge system for one N."""

    n_edges: int
    n_unknowns: int
    parity: str
    determinant: int
    rank: int
    outcome_class: str


def solvability_report(n_edges: int) -> SolvabilityReport:
    """Classify the center-to-edge system for a grid with N edge points.

    The determinant of the M x M system matrix is 2 for odd N (full rank)
    and 0 for even N (rank M - 1).  The degenerate sizes follow the same
    rule: N=3 reduces to the single equation 2 e_1 = 2 c_1 (determinant 2 by
    convention), N=4 gives the rank-1 matrix [[1,1],[1,1]].
    """
    grid = PeriodicStagger1D(n_edges)
    m = grid.n_unknowns
    if grid.is_odd:
        return SolvabilityReport(n_edges, m, "odd", 2, m, OUTCOME_ALWAYS_UNIQUE)
    return SolvabilityReport(n_edges, m, "even", 0, m - 1, OUTCOME_CONSISTENT_DEPENDENT)


def centers_from_edges(edges: EdgeField1D) -> CenterField1D:
    """Average neighbouring edges onto centers: c_i = (e_i + e_{i+1}) / 2.

    The wrap e_{M+1} = e_1 realizes the periodic image e_{N-1} = e_1.
    """
    v = edges.values
    return CenterField1D(edges.grid, (v + np.roll(v, -1)) / 2)


def alternating_residual(centers: CenterField1D):
    """Alternating center sum S = sum_{i=1..M} (-1)^(M-i) c_i.

    For odd M this equals e_1 of the unique solution; for even M the system
    is consistent exactly when S vanishes (equivalently, when c_M equals the
    alternating sum of the other centers).
    """
    vals = centers.values
    m = vals.shape[0]
    if centers.exact:
        total = Fraction(0)
        sign = 1
        for v in reversed(vals.tolist()):
            total += sign * v
            sign = -sign
        return total
    signs = np.where((m - 1 - np.arange(m)) % 2 == 0, 1.0, -1.0)
    return float(signs @ vals)


def _forward_recurrence(first, centers: CenterField1D) -> np.ndarray:
    """Edge values from e_1 = first and e_{i+1} = 2 c_i - e_i.

    The recurrence telescopes to e_k = (-1)^(k-1) (e_1 - 2 P_k) with
    P_k = sum_{j<k} (-1)^(j-1) c_j, which vectorizes as one cumulative sum.
    """
    vals = centers.values
    m = vals.shape[0]
    if centers.exact:
        out = np.empty(m, dtype=object)
        e = first if isinstance(first, Fraction) else Fraction(first)
        out[0] = e
        for k in range(m - 1):
            e = 2 * vals[k] - e
            out[k + 1] = e
        return out
    alt = _alternating_signs(m, exact=False)
    partial = np.concatenate(([0.0], np.cumsum(alt[:-1] * vals[:-1])))
    return alt * (first - 2.0 * partial)


def _validate_tolerance(tolerance: float) -> float:
    tolerance = float(tolerance)
    if not np.isfinite(tolerance) or tolerance < 0.0:
        raise ValueError(f"tolerance must be finite and >= 0, got {tolerance!r}")
    return tolerance


def edges_from_centers(centers: CenterField1D,
                       tolerance: float = DEFAULT_TOLERANCE) -> SolveOutcome:
    """Solve e_i + e_{i+1} = 2 c_i for the edges, classifying the outcome.

    Odd N always yields :class:`Unique` in O(M).  Even N yields
    :class:`Family` when the alternating residual passes the consistency
    test (|2 S| <= tolerance * max(1, max|c|) in floating mode, S == 0 in
    exact mode) and :class:`Inconsistent` otherwise.  The family particular
    is the member with e_1 = 0.
    """
    tolerance = _validate_tolerance(tolerance)
    grid = centers.grid
    s = alternating_residual(centers)
    if grid.is_odd:
        return Unique(EdgeField1D(grid, _forward_recurrence(s, centers)))
    if centers.exact:
        consistent = s == 0
        residual = 2 * s
    else:
        scale = max(1.0, float(np.max(np.abs(centers.values))))
        residual = 2.0 * s
        consistent = abs(residual) <= tolerance * scale
    if not consistent:
        return Inconsistent(residual)
    zero = Fraction(0) if centers.exact else 0.0
    particular = EdgeField1D(grid, _forward_recurrence(zero, centers))
    return Family(particular, _alternating_signs(grid.n_unknowns, centers.exact))


def complete_min_norm(outcome: SolveOutcome) -> EdgeField1D:
    """Pick the family member of minimal Euclidean norm.

    The projection t* = -<particular, null> / M makes the result orthogonal
    to the null direction.  Raises unless the outcome actually has a free
    parameter.
    """
    if isinstance(outcome, Unique):
        raise ParityError(
            "minimum-norm completion needs an even-N family; this solution is already unique"
        )
    if isinstance(outcome, Inconsistent):
        raise InconsistentDataError(
            f"minimum-norm completion impossible: no solution exists "
            f"(residual {outcome.residual!r})",
            residual=outcome.residual,
        )
    p = outcome.particular
    n = outcome.null_direction
    m = p.grid.n_unknowns
    if p.exact:
        t = -sum(pv * nv for pv, nv in zip(p.values, n)) / m
    else:
        t = -float(p.values @ n) / m
    return outcome.member(t)


def complete_pinned(centers: CenterField1D, pin_index: int, pin_value,
                    tolerance: float = DEFAULT_TOLERANCE) -> EdgeField1D:
    """Solve an even-N system and pick the member with e_{pin_index} = pin_value.

    ``pin_index`` is 1-based, matching the e_1..e_M naming.  Raises
    ParityError on odd N (there is nothing to pin: the solution is unique)
    and InconsistentDataError when no solution exists at all.
    """
    if centers.grid.is_odd:
        raise ParityError(
            f"pinning needs an even edge count; N={centers.grid.n_edges} has a unique solution"
        )
    m = centers.grid.n_unknowns
    if not 1 <= pin_index <= m:
        raise ValueError(f"pin index must be in 1..{m}, got {pin_index}")
    outcome = edges_from_centers(centers, tolerance)
    if isinstance(outcome, Inconsistent):
        raise InconsistentDataError(
            f"cannot pin an inconsistent system (residual {outcome.residual!r})",
            residual=outcome.residual,
        )
    return outcome.pinned(pin_index, pin_value)
