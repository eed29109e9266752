"""Walkthrough: projective orbit closures via homogenization.

Appending a coordinate 1 to every weight turns the projective question
into the affine one: SP needs every weight to be a vertex of the convex
hull (and all weights distinct); SSP is affine independence.  Run with:
    python3 demos/03_projective_orbits.py
"""

from torsep import (
    WeightSystem,
    decide_projective_sp,
    decide_projective_ssp,
    decide_projective_wsp,
    homogenize,
)


def show(ws, label):
    print(f"== {label}: weights {ws.weights}")
    print(f"   homogenized: {homogenize(ws).weights}")
    for decider in (decide_projective_sp, decide_projective_wsp, decide_projective_ssp):
        verdict = decider(ws)
        word = "HOLDS" if verdict.holds else "FAILS"
        print(f"  {verdict.property_name:>3}: {word:5}  ({verdict.kind})")
    print()


def main():
    # The orbit closure of (1:1:1:1) here is the hypersurface
    # {x1*x2^2 = x3*x4^2} in P^3.  All four weights are vertices of
    # their convex hull, so SP holds; four points in the plane are
    # affinely dependent, so SSP fails.
    quartet = WeightSystem.from_rows([[1, 2], [1, 1], [3, 0], [0, 2]])
    show(quartet, "plane quartet")

    # Three collinear weights: the middle one is not a vertex, so SP
    # fails, but the three hyperplane sections are pairwise distinct
    # and WSP holds.
    collinear = WeightSystem.from_rows([[0], [1], [2]])
    show(collinear, "collinear triple")

    # A duplicate weight collapses two hyperplane sections: WSP fails.
    duplicated = WeightSystem.from_rows([[0], [1], [1]])
    show(duplicated, "duplicated weight")


if __name__ == "__main__":
    main()
