"""Exact rational linear feasibility with verifiable certificates.

A dense phase-1 simplex over ``fractions.Fraction`` using Bland's rule,
so termination is unconditional and results are deterministic.  Every
answer carries an exact witness: a solution vector when feasible,
otherwise a Farkas refutation -- a vector of multipliers, nonnegative on
inequality rows, whose combination of the constraint rows is the zero
functional while the combined right-hand side is positive.

Systems are given as equalities ``sum(coeffs * x) == rhs`` and
inequalities ``sum(coeffs * x) >= rhs`` over a free rational vector x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalError
from .linalg import dot, primitive_vector

Constraint = tuple  # (coefficient sequence, rhs)


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of an exact feasibility question.

    Exactly one of ``solution`` / ``certificate`` is set.  The
    certificate is indexed by constraint rows, equalities first.
    """

    feasible: bool
    solution: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None


def _coerce(system, num_vars):
    rows = []
    for coeffs, rhs in system:
        row = [Fraction(c) for c in coeffs]
        if num_vars is None:
            num_vars = len(row)
        if len(row) != num_vars:
            raise InputError(
                f"constraint has {len(row)} coefficients, expected {num_vars}"
            )
        rows.append((row, Fraction(rhs)))
    return rows, num_vars


def lp_feasible(equalities, inequalities, num_vars=None) -> FeasibilityResult:
    """Decide feasibility of {B x = b, C x >= c} over free rational x.

    Phase-1 simplex on the standard form (x split into a difference of
    nonnegative parts, one slack per inequality, one artificial per
    row).  When the artificial optimum is positive, the final simplex
    multipliers yield the Farkas certificate.  The returned object is
    re-checked internally before being handed back.
    """
    eqs, num_vars = _coerce(equalities, num_vars)
    ineqs, num_vars = _coerce(inequalities, num_vars)
    if num_vars is None:
        num_vars = 0
    n = num_vars
    m_in = len(ineqs)
    m = len(eqs) + m_in
    ncols = 2 * n + m_in  # x+ | x- | slacks

    rows = []
    rhs = []
    for coeffs, b in eqs:
        rows.append(coeffs + [-c for c in coeffs] + [Fraction(0)] * m_in)
        rhs.append(b)
    for idx, (coeffs, b) in enumerate(ineqs):
        slack = [Fraction(0)] * m_in
        slack[idx] = Fraction(-1)
        rows.append(coeffs + [-c for c in coeffs] + slack)
        rhs.append(b)

    sigma = []
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-a for a in rows[i]]
            rhs[i] = -rhs[i]
            sigma.append(-1)
        else:
            sigma.append(1)

    # Tableau columns: standard vars | artificials | rhs.
    total = ncols + m
    tableau = []
    for i in range(m):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tableau.append(rows[i] + art + [rhs[i]])
    basis = [ncols + i for i in range(m)]

    # Phase-1 reduced-cost row (artificial costs are 1, others 0).
    cost = [Fraction(0)] * (total + 1)
    for j in range(ncols):
        cost[j] = -sum(tableau[i][j] for i in range(m))
    cost[total] = -sum(rhs)

    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][total] / a
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    leave = i
        if leave is None:
            raise InternalError("phase-1 objective unbounded; solver invariant broken")
        piv_row = tableau[leave]
        piv = piv_row[enter]
        if piv != 1:
            tableau[leave] = piv_row = [a / piv for a in piv_row]
        for i in range(m):
            if i != leave:
                f = tableau[i][enter]
                if f:
                    tableau[i] = [a - f * b for a, b in zip(tableau[i], piv_row)]
        f = cost[enter]
        if f:
            cost = [a - f * b for a, b in zip(cost, piv_row)]
        basis[leave] = enter

    objective = -cost[total]
    if objective == 0:
        values = [Fraction(0)] * total
        for i, bv in enumerate(basis):
            values[bv] = tableau[i][total]
        x = tuple(values[k] - values[n + k] for k in range(n))
        result = FeasibilityResult(True, solution=x)
    else:
        y = [Fraction(1) - cost[ncols + i] for i in range(m)]
        cert = tuple(sigma[i] * y[i] for i in range(m))
        result = FeasibilityResult(False, certificate=cert)
    verify_feasibility(eqs, ineqs, num_vars, result)
    return result


def verify_feasibility(equalities, inequalities, num_vars, result) -> None:
    """Check a FeasibilityResult against its system by plain arithmetic.

    Raises InternalError on any violation; the solver calls this on
    every answer before returning it.
    """
    eqs, num_vars = _coerce(equalities, num_vars)
    ineqs, num_vars = _coerce(inequalities, num_vars)
    if result.feasible:
        x = result.solution
        for coeffs, b in eqs:
            if dot(coeffs, x) != b:
                raise InternalError("claimed solution violates an equality")
        for coeffs, b in ineqs:
            if dot(coeffs, x) < b:
                raise InternalError("claimed solution violates an inequality")
        return
    u = result.certificate
    if len(u) != len(eqs) + len(ineqs):
        raise InternalError("certificate length does not match constraint count")
    for mult in u[len(eqs):]:
        if mult < 0:
            raise InternalError("certificate negative on an inequality row")
    all_rows = eqs + ineqs
    n = num_vars or 0
    for k in range(n):
        if sum(mult * row[0][k] for mult, row in zip(u, all_rows)) != 0:
            raise InternalError("certificate does not annihilate the system")
    if sum(mult * row[1] for mult, row in zip(u, all_rows)) <= 0:
        raise InternalError("certificate right-hand side not positive")


@dataclass(frozen=True)
class ConeMembership:
    """Membership of a vector in a finitely generated rational cone.

    Inside: nonnegative rational coefficients writing the vector over
    the generators.  Outside: a primitive integer functional that is
    nonnegative on every generator and negative on the vector.
    """

    inside: bool
    coefficients: tuple[Fraction, ...] | None = None
    functional: tuple[int, ...] | None = None


def cone_member(vector, generators) -> ConeMembership:
    """Decide whether ``vector`` lies in the cone of ``generators``."""
    v = tuple(vector)
    gens = [tuple(g) for g in generators]
    d = len(v)
    for g in gens:
        if len(g) != d:
            raise InputError(f"generator length {len(g)} does not match {d}")
    k = len(gens)
    eqs = [([g[r] for g in gens], v[r]) for r in range(d)]
    ineqs = [([Fraction(int(i == j)) for i in range(k)], 0) for j in range(k)]
    res = lp_feasible(eqs, ineqs, num_vars=k)
    if res.feasible:
        return ConeMembership(True, coefficients=res.solution)
    gamma = primitive_vector(tuple(-u for u in res.certificate[:d]))
    if any(dot(gamma, g) < 0 for g in gens) or dot(gamma, v) >= 0:
        raise InternalError("separating functional failed its arithmetic check")
    return ConeMembership(False, functional=gamma)
