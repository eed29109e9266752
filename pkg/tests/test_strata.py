import random

from helpers import M_WEIGHTS, N_WEIGHTS, random_weights
from torsep.cones import WeightSystem
from torsep.linalg import rank
from torsep.strata import (
    characteristic_pairs,
    oracle_sp,
    oracle_wsp,
    ssp_coordinate_witness,
    strata,
)
from torsep.verification import check_verdict


def test_strata_of_m():
    pieces = strata(M_WEIGHTS)
    assert [(s.indices, s.dim) for s in pieces] == [
        ((), 0),
        ((1,), 1),
        ((2,), 1),
        ((0, 1, 2), 2),
    ]


def test_strata_of_plane():
    ws = WeightSystem.from_rows([[1, 0], [0, 1]])
    assert [s.indices for s in strata(ws)] == [(), (0,), (1,), (0, 1)]


def test_strata_of_line_pair():
    ws = WeightSystem.from_rows([[1], [-1]])
    pieces = strata(ws)
    assert len(pieces) == 1
    assert pieces[0].indices == (0, 1)
    assert pieces[0].dim == 1


def test_oracle_sp_m_fails_on_pair():
    v = oracle_sp(M_WEIGHTS)
    assert not v.holds
    assert v.certificate["pair"] == (1, 0)
    assert check_verdict(M_WEIGHTS, v) == []


def test_oracle_sp_n_holds():
    v = oracle_sp(N_WEIGHTS)
    assert v.holds
    assert check_verdict(N_WEIGHTS, v) == []


def test_oracle_sp_never_vanishing_coordinate():
    ws = WeightSystem.from_rows([[1], [-1]])
    v = oracle_sp(ws)
    assert not v.holds
    assert v.certificate["kind"] == "strata-missed-hyperplane"
    assert v.certificate["index"] == 0


def test_oracle_wsp_examples():
    assert oracle_wsp(M_WEIGHTS).holds
    bad = WeightSystem.from_rows([[1], [-1], [2]])
    v = oracle_wsp(bad)
    assert not v.holds
    assert check_verdict(bad, v) == []
    ok = WeightSystem.from_rows([[0], [3]])
    assert oracle_wsp(ok).holds


def test_characteristic_pairs_plane():
    ws = WeightSystem.from_rows([[1, 0], [0, 1]])
    assert characteristic_pairs(ws) == ((0, 0), (1, 1))


def test_characteristic_pairs_m():
    assert characteristic_pairs(M_WEIGHTS) == (
        (0, 0),
        (1, 0),
        (1, 1),
        (2, 0),
        (2, 2),
    )


def test_characteristic_pairs_all_when_single_stratum():
    ws = WeightSystem.from_rows([[1], [-1]])
    assert characteristic_pairs(ws) == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_ssp_witness_m():
    w = ssp_coordinate_witness(M_WEIGHTS)
    assert w.pair == (0, 1)
    assert w.stratum.indices == (2,)
    assert w.stratum_dim == 1 == w.ambient_rank - 1


def test_ssp_witness_none_for_full_space():
    ws = WeightSystem.from_rows([[1, 0], [0, 1]])
    assert ssp_coordinate_witness(ws) is None


def test_ssp_witness_n():
    w = ssp_coordinate_witness(N_WEIGHTS)
    assert w is not None
    assert w.stratum_dim == 2 == w.ambient_rank - 1


def test_stratum_dimension_monotone():
    rng = random.Random(31)
    for _ in range(20):
        ws = random_weights(rng, rng.choice((1, 2, 3)), rng.choice((1, 2, 3, 4, 5)))
        pieces = strata(ws)
        for a in pieces:
            assert a.dim <= rank(ws.matrix)
            for b in pieces:
                if set(a.indices) <= set(b.indices):
                    assert a.dim <= b.dim


def test_characteristic_pairs_diagonal_iff_oracle_sp():
    rng = random.Random(32)
    for _ in range(25):
        ws = random_weights(rng, rng.choice((1, 2, 3)), rng.choice((2, 3, 4)))
        sets = [set(s.indices) for s in strata(ws)]
        if any(all(i in s for s in sets) for i in range(ws.n)):
            continue  # degenerate: some coordinate never vanishes
        pairs = characteristic_pairs(ws)
        diagonal_only = all(i == j for i, j in pairs)
        assert diagonal_only == oracle_sp(ws).holds
