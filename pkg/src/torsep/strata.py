"""Brute-force stratum oracle for independent cross-validation.

The affine orbit closure decomposes into torus orbits, one per face of
the weight cone: on the stratum attached to a face, exactly the
coordinates whose weights lie on that face are nonzero.  Re-deriving
SP/WSP verdicts, coordinate forcing pairs and SSP witnesses from these
vanishing patterns alone gives a decision route that shares no logic
with the theorem-backed deciders beyond the face enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import DEFAULT_MAX_N, WeightSystem, enumerate_faces
from .linalg import IntMatrix, rank
from .verdict import Verdict


@dataclass(frozen=True)
class Stratum:
    """A torus orbit inside the closure: coordinate k is nonzero on it
    iff k is in ``indices``.  ``dim`` is the rank of the weights on the
    face; ``witness`` is the face's supporting functional."""

    indices: tuple[int, ...]
    witness: tuple[int, ...]
    dim: int


def _submatrix_rank(ws: WeightSystem, indices) -> int:
    if not indices:
        return 0
    return rank(IntMatrix.from_columns([ws.weights[k] for k in indices]))


def strata(ws: WeightSystem, max_n: int = DEFAULT_MAX_N) -> tuple[Stratum, ...]:
    """One stratum per face of the weight cone, in canonical order."""
    lattice = enumerate_faces(ws, max_n=max_n)
    return tuple(
        Stratum(f.indices, f.witness, _submatrix_rank(ws, f.indices))
        for f in lattice
    )


def _vacuous(property_name: str) -> Verdict:
    return Verdict(
        property_name,
        "affine",
        True,
        {
            "kind": "vacuous",
            "reason": "a single coordinate admits no pair of "
            "linearly independent linear forms",
        },
        notes=("stratum oracle",),
    )


def oracle_sp(ws: WeightSystem, max_n: int = DEFAULT_MAX_N) -> Verdict:
    """SP verdict from vanishing patterns alone.

    Fails iff some coordinate never vanishes on the closure (it appears
    in every stratum), or some ordered pair (j, i) has every stratum
    missing j also missing i (so x_{j+1} = 0 forces x_{i+1} = 0).
    """
    if ws.n == 1:
        return _vacuous("SP")
    sets = [set(s.indices) for s in strata(ws, max_n=max_n)]
    notes = ("stratum oracle",)
    for i in range(ws.n):
        if all(i in s for s in sets):
            j0 = 0 if i != 0 else 1
            cert = {"kind": "strata-missed-hyperplane", "index": i, "pair": (i, j0)}
            return Verdict("SP", "affine", False, cert, notes)
    for j in range(ws.n):
        for i in range(ws.n):
            if i == j:
                continue
            if all(i not in s for s in sets if j not in s):
                cert = {"kind": "strata-forcing-pair", "pair": (j, i)}
                return Verdict("SP", "affine", False, cert, notes)
    witnesses = []
    for j in range(ws.n):
        for i in range(ws.n):
            if i == j:
                continue
            s = next(s for s in sets if j not in s and i in s)
            witnesses.append({"pair": (j, i), "stratum": tuple(sorted(s))})
    cert = {"kind": "strata-separation", "pair_witnesses": tuple(witnesses)}
    return Verdict("SP", "affine", True, cert, notes)


def oracle_wsp(ws: WeightSystem, max_n: int = DEFAULT_MAX_N) -> Verdict:
    """WSP verdict from vanishing patterns alone.

    Fails iff two coordinates vanish on exactly the same strata, i.e.
    the two coordinate hyperplanes cut the closure in the same set.
    """
    if ws.n == 1:
        return _vacuous("WSP")
    sets = [set(s.indices) for s in strata(ws, max_n=max_n)]
    notes = ("stratum oracle",)
    for i in range(ws.n):
        for j in range(i + 1, ws.n):
            if all((i in s) == (j in s) for s in sets):
                cert = {"kind": "strata-equivalent-pair", "pair": (i, j)}
                return Verdict("WSP", "affine", False, cert, notes)
    witnesses = []
    for i in range(ws.n):
        for j in range(i + 1, ws.n):
            s = next(s for s in sets if (i in s) != (j in s))
            witnesses.append({"pair": (i, j), "stratum": tuple(sorted(s))})
    cert = {"kind": "strata-distinguished", "pair_witnesses": tuple(witnesses)}
    return Verdict("WSP", "affine", True, cert, notes)


def characteristic_pairs(
    ws: WeightSystem, max_n: int = DEFAULT_MAX_N
) -> tuple[tuple[int, int], ...]:
    """Ordered pairs (i, j) such that x_{i+1} = 0 forces x_{j+1} = 0.

    Computed as: every stratum missing i also misses j.  The diagonal is
    always included; the set equals the diagonal iff the oracle's SP
    verdict holds (given n >= 2 and no coordinate nonzero everywhere).
    """
    sets = [set(s.indices) for s in strata(ws, max_n=max_n)]
    pairs = []
    for i in range(ws.n):
        for j in range(ws.n):
            if i == j or all(j not in s for s in sets if i not in s):
                pairs.append((i, j))
    return tuple(pairs)


@dataclass(frozen=True)
class SspWitness:
    """A codimension-2 coordinate subspace meeting the closure too deeply.

    The stratum avoids both coordinates of ``pair`` and its closure has
    dimension >= ambient_rank - 1, so cutting by the two coordinates
    drops the dimension by at most one.
    """

    pair: tuple[int, int]
    stratum: Stratum
    stratum_dim: int
    ambient_rank: int


def ssp_coordinate_witness(
    ws: WeightSystem, max_n: int = DEFAULT_MAX_N
) -> SspWitness | None:
    """First coordinate pair witnessing an SSP failure, or None.

    Intended for inputs whose orbit closure is a cone (the caller checks
    that hypothesis); scans pairs lexicographically and strata in
    canonical order, so the result is deterministic.
    """
    if ws.n < 2:
        return None
    ambient = rank(ws.matrix)
    all_strata = strata(ws, max_n=max_n)
    for i in range(ws.n):
        for j in range(i + 1, ws.n):
            for s in all_strata:
                if i in s.indices or j in s.indices:
                    continue
                if s.dim >= ambient - 1:
                    return SspWitness((i, j), s, s.dim, ambient)
    return None
