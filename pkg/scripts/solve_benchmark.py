#!/usr/bin/env python3
"""Time the O(N) edge solver against grid size, and against the dense oracle.

The recurrence solver should scale linearly: doubling N roughly doubles the
wall time.  The dense exact oracle is cubic with bignum coefficients and
only exists for cross-checking, which the crossover table makes obvious.

Usage: python scripts/solve_benchmark.py [--max-power 21] [--repeats 5]
"""

import argparse
import time
from fractions import Fraction

import numpy as np

from staggrid import (
    CenterField1D,
    PeriodicStagger1D,
    build_system,
    centers_from_edges,
    edges_from_centers,
    solve_dense,
)


def time_once(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-power", type=int, default=21,
                    help="largest grid as a power of two: N = 2^k + 1 (default 21)")
    ap.add_argument("--repeats", type=int, default=5,
                    help="timing repeats, best-of (default 5)")
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    print(f"{'N':>12} {'M':>12} {'solve (s)':>12} {'round trip max err':>20}")
    prev = None
    for k in range(10, args.max_power + 1):
        n = 2**k + 1
        grid = PeriodicStagger1D(n)
        c = CenterField1D(grid, rng.normal(size=grid.n_centers))
        dt = time_once(lambda: edges_from_centers(c), args.repeats)
        out = edges_from_centers(c)
        err = float(np.max(np.abs(centers_from_edges(out.edges).values - c.values)))
        ratio = "" if prev is None else f"  (x{dt / prev:.2f})"
        print(f"{n:>12} {grid.n_unknowns:>12} {dt:>12.6f} {err:>20.3e}{ratio}")
        prev = dt

    print()
    print("dense exact oracle for scale (same solve, cubic + bignums):")
    print(f"{'M':>6} {'recurrence (s)':>16} {'dense oracle (s)':>18}")
    for m in (8, 16, 32, 64):
        grid = PeriodicStagger1D(m + 2)
        vals = np.array([Fraction(int(v)) for v in rng.integers(-9, 10, size=m)],
                        dtype=object)
        if m % 2 == 0:
            vals[m - 1] = sum(Fraction((-1) ** (m - 2 - i)) * vals[i]
                              for i in range(m - 1))
        c = CenterField1D(grid, vals)
        fast = time_once(lambda: edges_from_centers(c), args.repeats)
        dense = time_once(lambda: solve_dense(build_system(c)),
                          max(1, args.repeats // 2))
        print(f"{m:>6} {fast:>16.6f} {dense:>18.6f}")


if __name__ == "__main__":
    main()
