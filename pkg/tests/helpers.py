"""Shared helpers for the test suite: random instances, brute-force
oracles, and small transformation utilities."""

from __future__ import annotations

import random
from itertools import combinations, product

from torsep.cones import WeightSystem
from torsep.linalg import IntMatrix, rank, solve_exact

# Golden weight systems used across modules.
M_WEIGHTS = WeightSystem.from_rows([[1, 1], [2, 0], [0, 2]])
N_WEIGHTS = WeightSystem.from_rows([[1, 0, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]])
FIVE_WEIGHTS = WeightSystem.from_rows(
    [[1, 0, 0], [1, 1, 0], [0, 1, 2], [0, 2, 1], [1, 0, 1]]
)
QUARTET_WEIGHTS = WeightSystem.from_rows([[1, 2], [1, 1], [3, 0], [0, 2]])


def random_weights(rng: random.Random, d: int, n: int, bound: int = 2) -> WeightSystem:
    return WeightSystem(
        d, tuple(tuple(rng.randint(-bound, bound) for _ in range(d)) for _ in range(n))
    )


def random_suite(seed: int, count: int, dims=(1, 2, 3), sizes=(1, 2, 3, 4, 5, 6)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(random_weights(rng, rng.choice(dims), rng.choice(sizes)))
    return out


def brute_force_kernel_vectors(matrix: IntMatrix, bound: int = 3):
    """All integer kernel vectors with sup-norm <= bound, by enumeration."""
    n = matrix.n
    found = []
    for c in product(range(-bound, bound + 1), repeat=n):
        if all(x == 0 for x in matrix.mul_vector(c)):
            found.append(c)
    return found


def brute_force_cone_member(v, gens) -> bool:
    """Exact cone membership through independent-subset solves.

    A vector in the cone is a nonnegative combination of some linearly
    independent subset of the generators, so scanning all such subsets
    decides membership without any LP machinery.
    """
    d = len(v)
    if all(x == 0 for x in v):
        return True
    gens = [tuple(g) for g in gens]
    for size in range(1, d + 1):
        for subset in combinations(gens, size):
            cols = IntMatrix.from_columns(subset)
            if rank(cols) != size:
                continue
            sol = solve_exact([list(row) for row in cols.rows], v)
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def random_unimodular(rng: random.Random, d: int, steps: int = 6):
    """Random GL(d, Z) matrix as a product of elementary operations."""
    mat = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.randrange(d), rng.randrange(d)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(d):
                mat[i][k] += c * mat[j][k]
        elif kind == 1:
            mat[i], mat[j] = mat[j], mat[i]
        else:
            mat[i] = [-x for x in mat[i]]
    return mat


def apply_unimodular(ws: WeightSystem, mat) -> WeightSystem:
    d = ws.dim
    new = []
    for w in ws.weights:
        new.append(tuple(sum(mat[r][k] * w[k] for k in range(d)) for r in range(d)))
    return WeightSystem(d, tuple(new))


def permute_weights(ws: WeightSystem, perm) -> WeightSystem:
    return WeightSystem(ws.dim, tuple(ws.weights[p] for p in perm))
