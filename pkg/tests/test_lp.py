import random
from fractions import Fraction

import pytest

from helpers import brute_force_cone_member
from torsep.errors import InputError
from torsep.linalg import dot
from torsep.lp import cone_member, lp_feasible, verify_feasibility


def test_trivial_feasible():
    res = lp_feasible([([1], 0)], [([1], 0)])
    assert res.feasible
    assert res.solution == (Fraction(0),)


def test_simple_infeasible_certificate():
    # x >= 1 together with -x >= 0: summing both rows gives 0 >= 1.
    res = lp_feasible([], [([1], 1), ([-1], 0)])
    assert not res.feasible
    u = res.certificate
    assert u[0] == u[1] > 0  # the (1, 1) certificate up to scale


def test_explicit_convex_combination():
    eqs = [([2, 0], 1), ([0, 2], 1)]
    ineqs = [([1, 0], 0), ([0, 1], 0)]
    res = lp_feasible(eqs, ineqs)
    assert res.feasible
    assert res.solution == (Fraction(1, 2), Fraction(1, 2))


def test_no_variables():
    assert lp_feasible([([], 0)], [([], -1)], num_vars=0).feasible
    assert not lp_feasible([([], 1)], [], num_vars=0).feasible


def test_dimension_mismatch():
    with pytest.raises(InputError):
        lp_feasible([([1, 2], 0)], [([1], 0)])


def test_results_are_deterministic():
    eqs = [([1, 2, -1], 3)]
    ineqs = [([1, 0, 0], 0), ([0, 1, 0], -2)]
    first = lp_feasible(eqs, ineqs)
    second = lp_feasible(eqs, ineqs)
    assert first == second


def test_verify_feasibility_rejects_bad_objects():
    from torsep.errors import InternalError
    from torsep.lp import FeasibilityResult

    with pytest.raises(InternalError):
        verify_feasibility(
            [([1], 1)], [], 1, FeasibilityResult(True, solution=(Fraction(0),))
        )
    with pytest.raises(InternalError):
        verify_feasibility(
            [], [([1], 1), ([-1], 0)], 1,
            FeasibilityResult(False, certificate=(Fraction(1), Fraction(2))),
        )


def test_cone_member_inside():
    res = cone_member((1, 1), [(2, 0), (0, 2)])
    assert res.inside
    assert res.coefficients == (Fraction(1, 2), Fraction(1, 2))


def test_cone_member_outside_with_functional():
    v = (1, 0, 0)
    gens = [(0, 0, 1), (1, 1, 0), (0, 1, 1)]
    assert not brute_force_cone_member(v, gens)
    res = cone_member(v, gens)
    assert not res.inside
    gamma = res.functional
    assert all(dot(gamma, g) >= 0 for g in gens)
    assert dot(gamma, v) < 0


def test_cone_member_zero_vector():
    res = cone_member((0, 0), [(1, 2), (-3, 4)])
    assert res.inside
    assert all(c == 0 for c in res.coefficients)


def test_cone_member_empty_generators():
    inside = cone_member((0, 0), [])
    assert inside.inside
    outside = cone_member((2, -1), [])
    assert not outside.inside
    assert dot(outside.functional, (2, -1)) < 0


def test_cone_member_agrees_with_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        d = rng.choice((1, 2, 3))
        k = rng.randrange(0, 5)
        gens = [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(k)]
        v = tuple(rng.randint(-2, 2) for _ in range(d))
        res = cone_member(v, gens)
        assert res.inside == brute_force_cone_member(v, gens)
        if res.inside:
            combo = tuple(
                sum(c * g[r] for c, g in zip(res.coefficients, gens))
                for r in range(d)
            )
            assert combo == tuple(Fraction(x) for x in v)
            assert all(c >= 0 for c in res.coefficients)
        else:
            assert all(dot(res.functional, g) >= 0 for g in gens)
            assert dot(res.functional, v) < 0
