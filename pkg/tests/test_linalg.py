import random

import pytest

from helpers import FIVE_WEIGHTS, brute_force_kernel_vectors, random_weights
from torsep.errors import InputError
from torsep.linalg import (
    IntMatrix,
    determinant,
    independent_rows,
    kernel_lattice,
    lattice_equal,
    lattice_member,
    primitive_vector,
    rank,
    row_hnf,
)


def test_rank_identity():
    assert rank(IntMatrix(((1, 0), (0, 1)))) == 2


def test_rank_three_columns():
    assert rank(IntMatrix.from_columns([(1, 1), (2, 0), (0, 2)])) == 2


def test_rank_zero_matrix():
    assert rank(IntMatrix(((0, 0, 0), (0, 0, 0)))) == 0


def test_kernel_single_generator():
    matrix = IntMatrix.from_columns([(1, 1), (2, 0), (0, 2)])
    basis = kernel_lattice(matrix)
    assert basis == ((2, -1, -1),)
    # Expected value frozen from exhaustive enumeration: every kernel
    # vector with sup-norm <= 3 must be an integer multiple.
    hnf = row_hnf(basis)
    for c in brute_force_kernel_vectors(matrix, bound=3):
        assert lattice_member(hnf, c)


def test_kernel_injective_map_is_trivial():
    assert kernel_lattice(IntMatrix(((1, 0), (0, 1)))) == ()


def test_kernel_of_five_weight_example():
    basis = kernel_lattice(FIVE_WEIGHTS.matrix)
    assert len(basis) == 2
    assert lattice_member(row_hnf(basis), (3, -1, 1, 0, -2))


def test_kernel_count_and_saturation_random():
    rng = random.Random(7)
    for _ in range(40):
        ws = random_weights(rng, rng.choice((1, 2, 3)), rng.choice((1, 2, 3, 4)))
        matrix = ws.matrix
        basis = kernel_lattice(matrix)
        assert len(basis) == matrix.n - rank(matrix)
        for c in basis:
            assert all(x == 0 for x in matrix.mul_vector(c))
        hnf = row_hnf(basis)
        for c in brute_force_kernel_vectors(matrix, bound=3):
            assert lattice_member(hnf, c)


def test_row_hnf_is_basis_invariant():
    rows = ((2, 4, 6), (1, 1, 1))
    mixed = ((1, 1, 1), (3, 5, 7), (2, 4, 6))
    assert lattice_equal(rows, mixed)
    assert not lattice_equal(rows, ((1, 0, 0),))


def test_primitive_vector():
    from fractions import Fraction

    assert primitive_vector((4, -6, 2)) == (2, -3, 1)
    assert primitive_vector((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive_vector((0, 0)) == (0, 0)


def test_determinant_and_independent_rows():
    m = IntMatrix(((2, 0), (0, 3), (2, 3)))
    rows = independent_rows(m)
    assert len(rows) == 2
    assert determinant([[m.rows[i][j] for j in range(2)] for i in rows]) != 0
    assert determinant(((1, 2), (3, 4))) == -2


def test_matrix_validation():
    with pytest.raises(InputError):
        IntMatrix(())
    with pytest.raises(InputError):
        IntMatrix(((1, 2), (3,)))
    with pytest.raises(InputError):
        IntMatrix(((1.5, 2),))
    with pytest.raises(InputError):
        IntMatrix(((1, 2),)).mul_vector((1, 2, 3))
