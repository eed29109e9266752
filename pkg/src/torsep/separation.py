"""Theorem-backed decision procedures for SP, WSP and SSP.

Affine SP is decided by testing, for every position i, that neither the
weight nor its negation is a nonnegative rational combination of the
remaining weights.  Affine WSP requires the weight cone to be pointed
and the minimal-face map to be injective.  Affine SSP (for orbit
closures that are cones) holds exactly when the weights are linearly
independent.  The projective deciders act on the homogenized weights
(appended coordinate 1); projective SSP is affine independence.

Every verdict carries a certificate checkable by plain arithmetic; see
``torsep.verification``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cones import (
    DEFAULT_MAX_N,
    WeightSystem,
    edge_conditions,
    face_witness,
    homogenize,
    is_strictly_convex,
    minimal_face,
)
from .errors import CrossCheckError, HypothesisError, InternalError
from .linalg import (
    determinant,
    dot,
    independent_rows,
    is_zero_vector,
    kernel_lattice,
    primitive_vector,
    rank,
)
from .lp import lp_feasible
from .strata import ssp_coordinate_witness
from .verdict import Verdict

_VACUOUS_REASON = (
    "a single coordinate admits no pair of linearly independent linear forms"
)


def _vacuous(property_name: str, mode: str) -> Verdict:
    return Verdict(property_name, mode, True, {"kind": "vacuous", "reason": _VACUOUS_REASON})


def _sanitize(ws: WeightSystem, coefficients, i: int) -> list[Fraction]:
    """Reinsert position i with coefficient 0 and drop coefficients on
    zero weights (they contribute nothing to a weight relation)."""
    lam = list(coefficients)
    lam.insert(i, Fraction(0))
    return [
        Fraction(0) if is_zero_vector(ws.weights[k]) else lam[k]
        for k in range(ws.n)
    ]


def decide_affine_sp(ws: WeightSystem) -> Verdict:
    """Separation property of the affine orbit closure of a general point."""
    if ws.n == 1:
        return _vacuous("SP", "affine")
    separators = []
    for i in range(ws.n):
        cond = edge_conditions(ws, i)
        if not cond.excludes_vector:
            lam = _sanitize(ws, cond.vector_membership.coefficients, i)
            if all(x == 0 for x in lam):
                # Zero weight: that coordinate is identically 1 on the
                # closure, so its hyperplane is missed entirely.
                j0 = 0 if i != 0 else 1
                cert = {"kind": "zero-weight", "index": i, "pair": (i, j0)}
                return Verdict("SP", "affine", False, cert)
            j = next(k for k in range(ws.n) if lam[k] > 0)
            cert = {
                "kind": "generator-in-cone",
                "index": i,
                "coefficients": tuple(lam),
                "pair": (j, i),
            }
            return Verdict("SP", "affine", False, cert)
        if not cond.excludes_negation:
            relation = _sanitize(ws, cond.negation_membership.coefficients, i)
            relation[i] = Fraction(1)
            j0 = 0 if i != 0 else 1
            cert = {
                "kind": "line-in-cone",
                "index": i,
                "relation": tuple(relation),
                "pair": (i, j0),
            }
            return Verdict("SP", "affine", False, cert)
        separators.append(
            {
                "index": i,
                "vector_excluded_by": cond.vector_membership.functional,
                "negation_excluded_by": cond.negation_membership.functional,
            }
        )
    return Verdict("SP", "affine", True, {"kind": "edge-separation", "separators": tuple(separators)})


def _pair_separator(ws: WeightSystem, vanish: int, positive: int):
    """Supporting functional vanishing on one weight, >= 1 on another."""
    eqs = [(ws.weights[vanish], 0)]
    ineqs = [(w, 0) for w in ws.weights]
    ineqs.append((ws.weights[positive], 1))
    res = lp_feasible(eqs, ineqs, num_vars=ws.dim)
    if not res.feasible:
        return None
    gamma = primitive_vector(res.solution)
    assert dot(gamma, ws.weights[vanish]) == 0
    assert all(dot(gamma, w) >= 0 for w in ws.weights)
    assert dot(gamma, ws.weights[positive]) >= 1
    return gamma


def _interior_relation(ws: WeightSystem, idx: int, face_indices) -> tuple[int, tuple[int, ...]]:
    """Integer relation M * w_idx = sum of strictly positive multiples of
    the other face weights, witnessing that w_idx lies in the relative
    interior of the face."""
    others = [k for k in face_indices if k != idx]
    d = ws.dim
    # Variables: multiplier m, then one coefficient per other face weight.
    eqs = []
    for r in range(d):
        coeffs = [ws.weights[idx][r]] + [-ws.weights[k][r] for k in others]
        eqs.append((coeffs, 0))
    nvars = 1 + len(others)
    ineqs = [([Fraction(int(t == s)) for t in range(nvars)], 1) for s in range(nvars)]
    res = lp_feasible(eqs, ineqs, num_vars=nvars)
    if not res.feasible:
        raise InternalError("relative-interior relation unexpectedly infeasible")
    denom_lcm = 1
    for f in res.solution:
        denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in res.solution]
    coeffs = [0] * ws.n
    for k, c in zip(others, ints[1:]):
        coeffs[k] = c
    return ints[0], tuple(coeffs)


def decide_affine_wsp(ws: WeightSystem) -> Verdict:
    """Weak separation property of the affine orbit closure."""
    if ws.n == 1:
        return _vacuous("WSP", "affine")
    pointed = is_strictly_convex(ws)
    if not pointed.pointed:
        support = [k for k in range(ws.n) if pointed.relation[k] > 0]
        cert = {
            "kind": "line-in-cone",
            "relation": pointed.relation,
            "pair": (support[0], support[1]),
        }
        return Verdict("WSP", "affine", False, cert)
    faces = [minimal_face(ws, i) for i in range(ws.n)]
    for i in range(ws.n):
        for j in range(i + 1, ws.n):
            if faces[i] != faces[j]:
                continue
            shared = faces[i]
            gamma = face_witness(ws, shared)
            if gamma is None:
                raise InternalError("minimal face is not a face index set")
            relations = []
            for idx in (i, j):
                mult, coeffs = _interior_relation(ws, idx, shared)
                relations.append(
                    {"index": idx, "multiplier": mult, "coefficients": coeffs}
                )
            cert = {
                "kind": "shared-face-interior",
                "pair": (i, j),
                "face_indices": shared,
                "face_witness": gamma,
                "relations": tuple(relations),
            }
            return Verdict("WSP", "affine", False, cert)
    separators = []
    for i in range(ws.n):
        for j in range(i + 1, ws.n):
            if j not in faces[i]:
                gamma = _pair_separator(ws, vanish=i, positive=j)
                vanishes_at = i
            else:
                gamma = _pair_separator(ws, vanish=j, positive=i)
                vanishes_at = j
            if gamma is None:
                raise InternalError("distinct minimal faces without a separator")
            separators.append(
                {"pair": (i, j), "vanishes_at": vanishes_at, "functional": gamma}
            )
    cert = {
        "kind": "face-separation",
        "pointedness": pointed.functional,
        "pair_separators": tuple(separators),
    }
    return Verdict("WSP", "affine", True, cert)


def cone_hypothesis(ws: WeightSystem):
    """Whether the orbit closure is a cone, with a rational witness.

    Criterion: some rational functional takes the value 1 on every
    weight (equivalently the all-ones vector lies in the rational row
    space of the weight matrix).  Scaling a point of the closure by s
    multiplies a monomial x^c by s^(sum c); the closure is stable under
    scaling exactly when the exponent sums vanish on the relation
    lattice, which is this criterion.
    """
    eqs = [(w, 1) for w in ws.weights]
    res = lp_feasible(eqs, [], num_vars=ws.dim)
    if res.feasible:
        return True, res.solution
    return False, None


_CONE_NOTES = (
    "cone hypothesis verified: a rational functional takes value 1 on every weight",
    "cone criterion (all-ones vector in the rational row space) is an "
    "implementation-level derivation, not part of the decision statement",
)


def decide_affine_ssp(ws: WeightSystem, max_n: int = DEFAULT_MAX_N) -> Verdict:
    """Strong separation property for cone-type affine orbit closures.

    Requires the closure to be a cone and refuses (HypothesisError)
    otherwise.  Holds iff the weights are linearly independent, i.e.
    the closure is the whole space.
    """
    is_cone, functional = cone_hypothesis(ws)
    if not is_cone:
        raise HypothesisError(
            "SSP hypothesis not satisfied: the orbit closure is not a cone "
            "(no rational functional takes the value 1 on every weight)"
        )
    matrix = ws.matrix
    r = rank(matrix)
    if r == ws.n:
        row_idx = independent_rows(matrix)
        det = determinant([[matrix.rows[i][j] for j in range(ws.n)] for i in row_idx])
        cert = {
            "kind": "full-rank",
            "row_indices": row_idx,
            "determinant": det,
            "cone_functional": functional,
        }
        return Verdict("SSP", "affine", True, cert, notes=_CONE_NOTES)
    kernel = kernel_lattice(matrix)
    witness = ssp_coordinate_witness(ws, max_n=max_n)
    if witness is None:
        raise CrossCheckError(
            "weights are dependent but no coordinate-pair SSP witness exists; "
            "the theorem route and the stratum route disagree"
        )
    cert = {
        "kind": "kernel-witness",
        "kernel_vector": kernel[0],
        "pair": witness.pair,
        "stratum_indices": witness.stratum.indices,
        "stratum_witness": witness.stratum.witness,
        "stratum_dim": witness.stratum_dim,
        "ambient_rank": witness.ambient_rank,
        "cone_functional": functional,
    }
    return Verdict("SSP", "affine", False, cert, notes=_CONE_NOTES)


_PROJ_NOTE = "decided on homogenized weights (appended coordinate 1)"


def decide_projective_sp(ws: WeightSystem) -> Verdict:
    """Separation property of the projective orbit closure.

    Equivalent to affine SP after homogenization: every weight must be
    a vertex of the convex hull and all weights distinct.
    """
    inner = decide_affine_sp(homogenize(ws))
    return Verdict("SP", "projective", inner.holds, inner.certificate,
                   notes=inner.notes + (_PROJ_NOTE,))


def decide_projective_wsp(ws: WeightSystem) -> Verdict:
    """Weak separation property of the projective orbit closure."""
    inner = decide_affine_wsp(homogenize(ws))
    return Verdict("WSP", "projective", inner.holds, inner.certificate,
                   notes=inner.notes + (_PROJ_NOTE,))


def decide_projective_ssp(ws: WeightSystem) -> Verdict:
    """Strong separation property of the projective orbit closure.

    Holds iff the weights are affinely independent (the closure is the
    whole projective space); no cone hypothesis is needed because the
    homogenized closure is always a cone.
    """
    hws = homogenize(ws)
    matrix = hws.matrix
    if rank(matrix) == ws.n:
        row_idx = independent_rows(matrix)
        det = determinant([[matrix.rows[i][j] for j in range(ws.n)] for i in row_idx])
        cert = {"kind": "affine-independent", "row_indices": row_idx, "determinant": det}
        return Verdict("SSP", "projective", True, cert, notes=(_PROJ_NOTE,))
    relation = kernel_lattice(matrix)[0]
    cert = {"kind": "affine-dependence", "relation": relation}
    return Verdict("SSP", "projective", False, cert, notes=(_PROJ_NOTE,))


_DISPATCH = {
    ("SP", "affine"): decide_affine_sp,
    ("WSP", "affine"): decide_affine_wsp,
    ("SSP", "affine"): decide_affine_ssp,
    ("SP", "projective"): decide_projective_sp,
    ("WSP", "projective"): decide_projective_wsp,
    ("SSP", "projective"): decide_projective_ssp,
}


def decide(
    ws: WeightSystem,
    property_name: str,
    mode: str = "affine",
    max_n: int = DEFAULT_MAX_N,
) -> Verdict:
    """Dispatch to the decider for (property, mode)."""
    key = (property_name.upper(), mode)
    if key not in _DISPATCH:
        raise InternalError(f"no decider for {key}")
    if key == ("SSP", "affine"):
        return decide_affine_ssp(ws, max_n=max_n)
    return _DISPATCH[key](ws)
