import random
from fractions import Fraction

import pytest

from helpers import FIVE_WEIGHTS, M_WEIGHTS, random_weights
from torsep.cones import WeightSystem
from torsep.errors import InputError
from torsep.ideals import (
    Binomial,
    binomial_generators,
    octant_semigroup_generators,
    sp_violation_scan,
    verify_vanishing,
)
from torsep.linalg import kernel_lattice, lattice_equal


def test_binomial_canonical_sign():
    b = Binomial.from_vector((-2, 1, 1))
    assert b.a == (2, 0, 0)
    assert b.b == (0, 1, 1)
    assert b == Binomial.from_vector((2, -1, -1))
    assert b.to_string() == "x1^2 - x2*x3"


def test_binomial_validation():
    with pytest.raises(InputError):
        Binomial((1, 0), (1, 0))
    with pytest.raises(InputError):
        Binomial((1, -1), (0, 0))
    with pytest.raises(InputError):
        Binomial.from_vector((0, 0))


def test_octant_single_ray():
    gens = octant_semigroup_generators([(2, -1, -1)], (0,), 3)
    assert gens == ((2, -1, -1),)


def test_octant_empty_lattice():
    assert octant_semigroup_generators([], (0, 1), 3) == ()


def test_octant_opposite_pattern_is_empty():
    assert octant_semigroup_generators([(2, -1, -1)], (0, 1, 2), 3) == ()


def test_octant_five_weight_contains_printed_relation():
    lattice = kernel_lattice(FIVE_WEIGHTS.matrix)
    gens = octant_semigroup_generators(lattice, (0, 1, 2), 5)
    assert (0, 1, 1, -1, -1) in gens


def test_generators_for_m():
    bins = binomial_generators(M_WEIGHTS)
    assert Binomial((2, 0, 0), (0, 1, 1)) in bins


def test_generators_trivial_ideal():
    ws = WeightSystem.from_rows([[1, 0], [0, 1]])
    assert binomial_generators(ws) == ()


def test_generators_five_weight_system():
    bins = binomial_generators(FIVE_WEIGHTS)
    vectors = {b.vector for b in bins}
    # The three printed defining equations all appear.
    assert (3, -1, 1, 0, -2) in vectors
    assert (3, -2, 0, 1, -1) in vectors
    assert (0, 1, 1, -1, -1) in vectors
    assert lattice_equal([b.vector for b in bins], kernel_lattice(FIVE_WEIGHTS.matrix))


def test_generators_are_canonical():
    first = binomial_generators(M_WEIGHTS)
    second = binomial_generators(M_WEIGHTS)
    assert first == second
    assert list(first) == sorted(first, key=lambda b: (b.a, b.b))


def test_scan_power_form():
    result = sp_violation_scan([Binomial((2, 0, 0), (0, 1, 1))])
    assert result.violating and result.form == 2


def test_scan_monomial_equals_one():
    result = sp_violation_scan([Binomial((1, 1), (0, 0))])
    assert result.violating and result.form == 1


def test_scan_five_weight_compatible():
    assert not sp_violation_scan(binomial_generators(FIVE_WEIGHTS)).violating


def test_vanishing_direct_rational_check():
    # Over the rationals: t = (2, 3) maps to the point (6, 4, 9) and the
    # binomial x1^2 - x2*x3 evaluates to 36 - 36 = 0.
    t = (2, 3)
    point = [
        Fraction(t[0]) ** w[0] * Fraction(t[1]) ** w[1] for w in M_WEIGHTS.weights
    ]
    assert point == [6, 4, 9]
    assert point[0] ** 2 - point[1] * point[2] == 0


def test_vanishing_modular_trials():
    bins = binomial_generators(FIVE_WEIGHTS)
    report = verify_vanishing(bins, FIVE_WEIGHTS, trials=100, prime=10007, seed=5)
    assert report.passed
    assert report.trials == 100


def test_vanishing_empty_list_passes():
    report = verify_vanishing([], M_WEIGHTS, trials=3, prime=10007)
    assert report.passed


def test_vanishing_rejects_bad_parameters():
    with pytest.raises(InputError):
        verify_vanishing([], M_WEIGHTS, trials=0, prime=10007)
    with pytest.raises(InputError):
        verify_vanishing([], M_WEIGHTS, trials=1, prime=10006)
    with pytest.raises(InputError):
        verify_vanishing([], M_WEIGHTS, trials=1, prime=2)


def test_vanishing_detects_wrong_binomial():
    bad = Binomial((1, 0, 0), (0, 1, 0))  # x1 - x2 does not vanish on M's closure
    report = verify_vanishing([bad], M_WEIGHTS, trials=20, prime=10007, seed=1)
    assert not report.passed


def test_generator_vectors_span_lattice_random():
    rng = random.Random(41)
    for _ in range(25):
        ws = random_weights(rng, rng.choice((1, 2, 3)), rng.choice((1, 2, 3, 4)))
        bins = binomial_generators(ws)
        lattice = kernel_lattice(ws.matrix)
        if lattice:
            assert lattice_equal([b.vector for b in bins], lattice)
            report = verify_vanishing(bins, ws, trials=10, prime=10007, seed=2)
            assert report.passed
        else:
            assert bins == ()


def test_octant_type_accepted():
    from torsep.ideals import Octant

    direct = octant_semigroup_generators([(2, -1, -1)], (0,), 3)
    typed = octant_semigroup_generators([(2, -1, -1)], Octant((0,)), 3)
    assert direct == typed == ((2, -1, -1),)
