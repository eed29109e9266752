"""Walkthrough: SP for orbits of binary forms.

The orbit of a nonzero binary form under the special linear group has
the separation property exactly when the form has a linear factor of
multiplicity one.  The decision reduces to a squarefree multiplicity
decomposition over the rationals.  Run with:
    python3 demos/05_binary_forms.py
"""

from torsep import (
    decide_sp_binary_orbit,
    parse_form,
    squarefree_multiplicity_parts,
)
from torsep.binary_forms import BinaryForm, form_to_string, substitute


def show(f, label):
    decomposition = squarefree_multiplicity_parts(f)
    parts = ", ".join(
        f"({form_to_string(p)})^{m}" for p, m in decomposition.parts
    )
    sp = decide_sp_binary_orbit(f)
    print(f"  {label:<18} = {decomposition.constant} * {parts}")
    print(f"  {'':<18}   separation property: {sp}")


def main():
    print("squarefree multiplicity decompositions:")
    show(parse_form("x*y^4"), "x*y^4")
    show(parse_form("x^2*y^2"), "x^2*y^2")
    show(BinaryForm((1, 0, 2, 0, 1)), "(x^2+y^2)^2")
    show(parse_form("x^3 - y^3"), "x^3 - y^3")

    # The verdict is invariant under invertible linear substitutions;
    # here x -> x + 2y, y -> 3x + 7y applied to x^2*y^2.
    f = parse_form("x^2*y^2")
    g = substitute(f, ((1, 2), (3, 7)))
    print("\nafter the substitution x -> x + 2y, y -> 3x + 7y:")
    show(g, form_to_string(f))


if __name__ == "__main__":
    main()
