#!/usr/bin/env python3
"""Demonstrate the even-N solution family and the invisible checkerboard mode.

Walks one N=6 example end to end in exact arithmetic: classify the grid,
solve consistent center data, show that adding the alternating null vector
changes the edges but not their averages, then compare the min-norm and
pinned completions.  Finishes with an inconsistent example and the residual
that rules it out.

Usage: python scripts/checkerboard_demo.py
"""

from fractions import Fraction

import numpy as np

from staggrid import (
    CenterField1D,
    EdgeField1D,
    PeriodicStagger1D,
    centers_from_edges,
    complete_min_norm,
    complete_pinned,
    edges_from_centers,
    solvability_report,
)


def fmt(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def main() -> None:
    grid = PeriodicStagger1D(6)
    rep = solvability_report(6)
    print(f"grid: N={rep.n_edges} edge points, M={rep.n_unknowns} unknowns, "
          f"parity={rep.parity}")
    print(f"system: determinant={rep.determinant}, rank={rep.rank}, "
          f"outcome class {rep.outcome_class!r}")
    print()

    c = CenterField1D(grid, np.array([Fraction(1), Fraction(2), Fraction(3),
                                      Fraction(2)], dtype=object))
    print(f"centers {fmt(c.values)} satisfy the alternating-sum condition,")
    family = edges_from_centers(c)
    print(f"so the solver returns a family: particular {fmt(family.particular.values)}"
          f" + t * {fmt(family.null_direction)}")
    print()

    print("three members, all averaging back to the same centers:")
    for t in (Fraction(0), Fraction(1), Fraction(-2)):
        member = family.member(t)
        back = centers_from_edges(member)
        print(f"  t={t}: edges {fmt(member.values)} -> centers {fmt(back.values)}")
    print()

    best = complete_min_norm(family)
    norms = {t: float(np.linalg.norm([float(v) for v in family.member(t).values]))
             for t in (Fraction(0), Fraction(1), Fraction(2))}
    print(f"min-norm completion: {fmt(best.values)} "
          f"(|e| = {float(np.linalg.norm([float(v) for v in best.values])):.4f}; "
          f"for comparison t=0 gives {norms[Fraction(0)]:.4f}, "
          f"t=2 gives {norms[Fraction(2)]:.4f})")
    pinned = complete_pinned(c, 1, Fraction(1))
    print(f"pinning e_1 = 1 instead selects {fmt(pinned.values)}")
    print()

    bad = CenterField1D(grid, np.array([Fraction(1), Fraction(2), Fraction(3),
                                        Fraction(5)], dtype=object))
    outcome = edges_from_centers(bad)
    print(f"centers {fmt(bad.values)} violate the condition: "
          f"no edge field exists (residual {outcome.residual})")
    print()

    # the same story on a float field, via the checkerboard shift
    e = EdgeField1D(grid, [5.0, -1.0, 2.0, 7.0])
    shifted = EdgeField1D(grid, e.values + 3.0 * np.array([1.0, -1.0, 1.0, -1.0]))
    same = np.array_equal(centers_from_edges(e).values,
                          centers_from_edges(shifted).values)
    print(f"float check: edges {fmt(e.values)} and {fmt(shifted.values)} "
          f"average to identical centers: {same}")


if __name__ == "__main__":
    main()
