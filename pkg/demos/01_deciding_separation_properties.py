"""Walkthrough: deciding SP, WSP and SSP for two classic orbit closures.

The first weight system cuts out the quadric cone {x1^2 = x2*x3} (the
nilpotent 2x2 trace-zero matrices); the second cuts out the degenerate
2x2 matrices {x1*x4 = x2*x3}.  Run with:  python3 demos/01_deciding_separation_properties.py
"""

from torsep import (
    WeightSystem,
    decide_affine_sp,
    decide_affine_ssp,
    decide_affine_wsp,
    verify_verdict,
)


def show(ws, label):
    print(f"== {label}: weights {ws.weights} in Z^{ws.dim}")
    for decider in (decide_affine_sp, decide_affine_wsp, decide_affine_ssp):
        verdict = decider(ws)
        verify_verdict(ws, verdict)  # raises unless the certificate checks out
        word = "HOLDS" if verdict.holds else "FAILS"
        print(f"  {verdict.property_name:>3}: {word:5}  certificate kind: {verdict.kind}")
        pair = verdict.certificate.get("pair")
        if pair is not None:
            print(f"        witness pair (0-based): {pair}")
    print()


def main():
    # x1 carries weight (1,1) = half of (2,0) + half of (0,2): SP fails
    # because x2 = 0 forces x1 = 0 on the closure.  WSP still holds.
    quadric = WeightSystem.from_rows([[1, 1], [2, 0], [0, 2]])
    show(quadric, "quadric cone")

    # All four weights span edges of a pointed cone: SP holds.  The
    # weights are linearly dependent, so SSP fails: a coordinate plane
    # of codimension 2 meets the closure in codimension 1.
    determinantal = WeightSystem.from_rows(
        [[1, 0, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]]
    )
    show(determinantal, "degenerate 2x2 matrices")


if __name__ == "__main__":
    main()
