"""Arithmetic re-verification of verdict certificates.

Each certificate kind has a checker that re-derives its claims by plain
exact arithmetic against the input weights: dot products, identities,
rank computations, and (for strata-based kinds) a deterministic
recomputation of the face decomposition.  ``check_verdict`` returns a
list of problems (empty means verified); ``verify_verdict`` raises.
"""

from __future__ import annotations

from fractions import Fraction

from .cones import WeightSystem, homogenize
from .errors import InternalError
from .linalg import IntMatrix, determinant, dot, is_zero_vector, rank
from .strata import strata
from .verdict import Verdict


def _require(problems, condition, message):
    if not condition:
        problems.append(message)


def _valid_pair(problems, ws, pair):
    _require(problems, len(pair) == 2, "pair must have two entries")
    if len(pair) == 2:
        j, i = pair
        _require(problems, 0 <= j < ws.n and 0 <= i < ws.n, "pair index out of range")
        _require(problems, j != i, "pair entries must differ")


def _check_vacuous(problems, ws, cert, holds):
    _require(problems, holds, "vacuous certificate must accompany a holding verdict")
    _require(problems, ws.n == 1, "vacuous rule applies only to a single weight")


def _check_edge_separation(problems, ws, cert, holds):
    _require(problems, holds, "edge-separation certifies a holding verdict")
    separators = cert.get("separators", ())
    _require(problems, len(separators) == ws.n, "one separator pair per weight required")
    for entry in separators:
        i = entry["index"]
        chi = ws.weights[i]
        others = ws.others(i)
        for key, target in (
            ("vector_excluded_by", chi),
            ("negation_excluded_by", tuple(-x for x in chi)),
        ):
            gamma = entry[key]
            _require(
                problems,
                all(dot(gamma, w) >= 0 for w in others),
                f"separator {key} for weight {i} not supporting",
            )
            _require(
                problems,
                dot(gamma, target) < 0,
                f"separator {key} for weight {i} does not exclude",
            )


def _check_zero_weight(problems, ws, cert, holds):
    _require(problems, not holds, "zero-weight certifies a failure")
    i = cert["index"]
    _require(problems, is_zero_vector(ws.weights[i]), f"weight {i} is not zero")
    _valid_pair(problems, ws, cert["pair"])
    _require(problems, cert["pair"][0] == i, "pair must start at the zero weight")


def _check_generator_in_cone(problems, ws, cert, holds):
    _require(problems, not holds, "generator-in-cone certifies a failure")
    i = cert["index"]
    lam = cert["coefficients"]
    _require(problems, len(lam) == ws.n, "coefficient vector has wrong length")
    _require(problems, all(x >= 0 for x in lam), "coefficients must be nonnegative")
    _require(problems, lam[i] == 0, "weight may not appear in its own combination")
    combo = tuple(
        sum(lam[k] * ws.weights[k][r] for k in range(ws.n)) for r in range(ws.dim)
    )
    _require(
        problems,
        combo == tuple(Fraction(x) for x in ws.weights[i]),
        "combination does not reproduce the weight",
    )
    _valid_pair(problems, ws, cert["pair"])
    j, tgt = cert["pair"]
    _require(problems, tgt == i, "pair must end at the dependent weight")
    _require(problems, lam[j] > 0, "pair's first coordinate has zero coefficient")


def _check_line_in_cone(problems, ws, cert, holds):
    _require(problems, not holds, "line-in-cone certifies a failure")
    c = cert["relation"]
    _require(problems, len(c) == ws.n, "relation has wrong length")
    _require(problems, all(x >= 0 for x in c), "relation must be nonnegative")
    _require(problems, any(x > 0 for x in c), "relation must be nonzero")
    combo = tuple(
        sum(c[k] * ws.weights[k][r] for k in range(ws.n)) for r in range(ws.dim)
    )
    _require(problems, all(x == 0 for x in combo), "relation does not sum to zero")
    for k in range(ws.n):
        if c[k] > 0:
            _require(
                problems,
                not is_zero_vector(ws.weights[k]),
                "relation supported on a zero weight",
            )
    pair = cert["pair"]
    _valid_pair(problems, ws, pair)
    _require(problems, c[pair[0]] > 0, "pair's first coordinate not in the relation")
    if "index" not in cert:  # WSP flavour: both coordinates never vanish
        _require(problems, c[pair[1]] > 0, "pair's second coordinate not in the relation")


def _check_face_separation(problems, ws, cert, holds):
    _require(problems, holds, "face-separation certifies a holding verdict")
    gamma_p = cert["pointedness"]
    for w in ws.weights:
        if not is_zero_vector(w):
            _require(problems, dot(gamma_p, w) >= 1, "pointedness functional fails")
    seen = set()
    for entry in cert.get("pair_separators", ()):
        i, j = entry["pair"]
        seen.add((i, j))
        vanish = entry["vanishes_at"]
        other = j if vanish == i else i
        gamma = entry["functional"]
        _require(problems, vanish in (i, j), "vanishing index must be in the pair")
        _require(problems, all(dot(gamma, w) >= 0 for w in ws.weights), "separator not supporting")
        _require(problems, dot(gamma, ws.weights[vanish]) == 0, "separator does not vanish")
        _require(problems, dot(gamma, ws.weights[other]) >= 1, "separator not positive")
    expected = {(i, j) for i in range(ws.n) for j in range(i + 1, ws.n)}
    _require(problems, seen == expected, "pair separators must cover all pairs")


def _check_shared_face_interior(problems, ws, cert, holds):
    _require(problems, not holds, "shared-face-interior certifies a failure")
    pair = cert["pair"]
    _valid_pair(problems, ws, pair)
    shared = set(cert["face_indices"])
    _require(problems, set(pair) <= shared, "pair must lie on the shared face")
    gamma = cert["face_witness"]
    for k in range(ws.n):
        value = dot(gamma, ws.weights[k])
        if k in shared:
            _require(problems, value == 0, f"face witness does not vanish at {k}")
        else:
            _require(problems, value >= 1, f"face witness not positive at {k}")
    rel_indices = set()
    for rel in cert["relations"]:
        idx = rel["index"]
        rel_indices.add(idx)
        mult = rel["multiplier"]
        coeffs = rel["coefficients"]
        _require(problems, mult >= 1, "relation multiplier must be positive")
        _require(problems, len(coeffs) == ws.n, "relation has wrong length")
        for k in range(ws.n):
            if k in shared and k != idx:
                _require(problems, coeffs[k] >= 1, "interior relation needs all face weights")
            else:
                _require(problems, coeffs[k] == 0, "relation supported off the face")
        lhs = tuple(mult * x for x in ws.weights[idx])
        rhs = tuple(
            sum(coeffs[k] * ws.weights[k][r] for k in range(ws.n))
            for r in range(ws.dim)
        )
        _require(problems, lhs == rhs, "interior relation identity fails")
    _require(problems, rel_indices == set(pair), "one relation per pair member required")


def _check_full_rank(problems, ws, cert, holds):
    _require(problems, holds, "full-rank certifies a holding verdict")
    rows = cert["row_indices"]
    matrix = ws.matrix
    _require(problems, len(rows) == ws.n, "need as many rows as weights")
    det = determinant([[matrix.rows[i][j] for j in range(ws.n)] for i in rows])
    _require(problems, det == cert["determinant"], "determinant mismatch")
    _require(problems, det != 0, "certifying minor is singular")
    u = cert.get("cone_functional")
    if u is not None:
        for w in ws.weights:
            _require(problems, dot(u, w) == 1, "cone functional does not take value 1")


def _check_kernel_witness(problems, ws, cert, holds):
    _require(problems, not holds, "kernel-witness certifies a failure")
    c = cert["kernel_vector"]
    _require(problems, not is_zero_vector(c), "kernel vector is zero")
    _require(
        problems,
        all(x == 0 for x in ws.matrix.mul_vector(c)),
        "kernel vector not in the kernel",
    )
    pair = cert["pair"]
    _valid_pair(problems, ws, pair)
    s = set(cert["stratum_indices"])
    _require(problems, not (s & set(pair)), "stratum must avoid the pair")
    gamma = cert["stratum_witness"]
    for k in range(ws.n):
        value = dot(gamma, ws.weights[k])
        if k in s:
            _require(problems, value == 0, "stratum witness does not vanish on the face")
        else:
            _require(problems, value >= 1, "stratum witness not positive off the face")
    ambient = rank(ws.matrix)
    _require(problems, ambient == cert["ambient_rank"], "ambient rank mismatch")
    if s:
        sdim = rank(IntMatrix.from_columns([ws.weights[k] for k in sorted(s)]))
    else:
        sdim = 0
    _require(problems, sdim == cert["stratum_dim"], "stratum dimension mismatch")
    _require(problems, sdim >= ambient - 1, "stratum not deep enough to witness failure")
    u = cert.get("cone_functional")
    if u is not None:
        for w in ws.weights:
            _require(problems, dot(u, w) == 1, "cone functional does not take value 1")


def _check_affine_independent(problems, ws, cert, holds):
    _require(problems, holds, "affine-independent certifies a holding verdict")
    matrix = homogenize(ws).matrix
    rows = cert["row_indices"]
    _require(problems, len(rows) == ws.n, "need as many rows as weights")
    det = determinant([[matrix.rows[i][j] for j in range(ws.n)] for i in rows])
    _require(problems, det == cert["determinant"], "determinant mismatch")
    _require(problems, det != 0, "certifying minor is singular")


def _check_affine_dependence(problems, ws, cert, holds):
    _require(problems, not holds, "affine-dependence certifies a failure")
    c = cert["relation"]
    _require(problems, len(c) == ws.n, "relation has wrong length")
    _require(problems, not is_zero_vector(c), "relation is zero")
    combo = ws.matrix.mul_vector(c)
    _require(problems, all(x == 0 for x in combo), "relation does not annihilate weights")
    _require(problems, sum(c) == 0, "relation coefficients do not sum to zero")


def _strata_sets(ws):
    return [set(s.indices) for s in strata(ws)]


def _check_strata_missed(problems, ws, cert, holds):
    _require(problems, not holds, "strata-missed-hyperplane certifies a failure")
    i = cert["index"]
    sets = _strata_sets(ws)
    _require(problems, all(i in s for s in sets), "coordinate does vanish somewhere")
    _valid_pair(problems, ws, cert["pair"])


def _check_strata_forcing(problems, ws, cert, holds):
    _require(problems, not holds, "strata-forcing-pair certifies a failure")
    j, i = cert["pair"]
    _valid_pair(problems, ws, cert["pair"])
    sets = _strata_sets(ws)
    _require(
        problems,
        all(i not in s for s in sets if j not in s),
        "forcing pair does not force",
    )


def _check_strata_separation(problems, ws, cert, holds):
    _require(problems, holds, "strata-separation certifies a holding verdict")
    sets = {tuple(sorted(s)) for s in _strata_sets(ws)}
    seen = set()
    for entry in cert.get("pair_witnesses", ()):
        j, i = entry["pair"]
        seen.add((j, i))
        s = tuple(entry["stratum"])
        _require(problems, s in sets, "claimed stratum is not a stratum")
        _require(problems, j not in s and i in s, "stratum does not separate the pair")
    expected = {(j, i) for j in range(ws.n) for i in range(ws.n) if i != j}
    _require(problems, seen == expected, "witnesses must cover all ordered pairs")


def _check_strata_equivalent(problems, ws, cert, holds):
    _require(problems, not holds, "strata-equivalent-pair certifies a failure")
    i, j = cert["pair"]
    _valid_pair(problems, ws, cert["pair"])
    sets = _strata_sets(ws)
    _require(
        problems,
        all((i in s) == (j in s) for s in sets),
        "pair is distinguished by some stratum",
    )


def _check_strata_distinguished(problems, ws, cert, holds):
    _require(problems, holds, "strata-distinguished certifies a holding verdict")
    sets = {tuple(sorted(s)) for s in _strata_sets(ws)}
    seen = set()
    for entry in cert.get("pair_witnesses", ()):
        i, j = entry["pair"]
        seen.add((i, j))
        s = tuple(entry["stratum"])
        _require(problems, s in sets, "claimed stratum is not a stratum")
        _require(problems, (i in s) != (j in s), "stratum does not distinguish the pair")
    expected = {(i, j) for i in range(ws.n) for j in range(i + 1, ws.n)}
    _require(problems, seen == expected, "witnesses must cover all pairs")


_CHECKERS = {
    "vacuous": _check_vacuous,
    "edge-separation": _check_edge_separation,
    "zero-weight": _check_zero_weight,
    "generator-in-cone": _check_generator_in_cone,
    "line-in-cone": _check_line_in_cone,
    "face-separation": _check_face_separation,
    "shared-face-interior": _check_shared_face_interior,
    "full-rank": _check_full_rank,
    "kernel-witness": _check_kernel_witness,
    "affine-independent": _check_affine_independent,
    "affine-dependence": _check_affine_dependence,
    "strata-missed-hyperplane": _check_strata_missed,
    "strata-forcing-pair": _check_strata_forcing,
    "strata-separation": _check_strata_separation,
    "strata-equivalent-pair": _check_strata_equivalent,
    "strata-distinguished": _check_strata_distinguished,
}

# Certificate kinds whose data refers to the original (unhomogenized)
# weights even for projective verdicts.
_ORIGINAL_COORDS = {"affine-independent", "affine-dependence"}


def check_verdict(ws: WeightSystem, verdict: Verdict) -> list[str]:
    """Re-verify a verdict's certificate; returns a list of problems."""
    problems: list[str] = []
    kind = verdict.kind
    checker = _CHECKERS.get(kind)
    if checker is None:
        return [f"unknown certificate kind {kind!r}"]
    target = ws
    if verdict.mode == "projective" and kind not in _ORIGINAL_COORDS:
        target = homogenize(ws)
    checker(problems, target, verdict.certificate, verdict.holds)
    return problems


def verify_verdict(ws: WeightSystem, verdict: Verdict) -> None:
    """Raise InternalError unless the verdict's certificate re-verifies."""
    problems = check_verdict(ws, verdict)
    if problems:
        raise InternalError(
            f"certificate for {verdict.property_name} ({verdict.mode}) failed: "
            + "; ".join(problems)
        )
