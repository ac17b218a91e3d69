"""The invariant P(R), the budget |R+| - |R+_{S^p}| and the verdict.

P(R) is the supremum of sum_D (m_D - 1 + <rho(D), theta>) over theta in
cone(Sigma) with <rho(D), theta> >= -m_D.  In Sigma-coordinates x that is
the LP  max c.x, Ax <= b, x >= 0  with A[D][gamma] = -<rho(D), gamma>,
b_D = m_D and c = -(column sums of A), shifted by sum_D (m_D - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from sphskel import exactlp, rootsys, skeleton as sk_mod
from sphskel.exactlp import LpProblem
from sphskel.skeleton import SphericalSkeleton

STRICTLY_LESS = "StrictlyLess"
EQUAL = "Equal"
VIOLATION = "Violation"


@dataclass(frozen=True)
class MukaiVerdict:
    complete: bool
    p_value: Fraction | None  # None encodes an infinite supremum
    budget: int
    relation: str | None  # None when p_value is infinite
    theta: tuple[Fraction, ...] | None
    theta_unique: bool | None


def skeleton_lp(sk: SphericalSkeleton) -> tuple[LpProblem, Fraction]:
    """The LP of a skeleton plus the additive constant sum_D (m_D - 1)."""
    a = sk_mod.pairing_matrix(sk)
    b = sk_mod.multiplicities(sk)
    nsig = len(sk.sigma)
    c = [-sum(row[j] for row in a) for j in range(nsig)]
    constant = sum(b) - len(b)
    return LpProblem.make(a, b, c), Fraction(constant)


def mfs_value(
    sk: SphericalSkeleton, compute_unique: bool = False
) -> tuple[Fraction | None, tuple[Fraction, ...] | None, bool | None]:
    """(P(R), maximizer theta in Sigma-coordinates, uniqueness flag).

    P(R) is None when the LP is unbounded; theta and the flag are then None
    as well.  Uniqueness costs extra solves and is only computed on demand.
    """
    value, sol, problem, constant = _solve(sk)
    if sol.status != "optimal":
        return None, None, None
    unique = exactlp.unique_optimum(problem, sol) if compute_unique else None
    return value, sol.primal, unique


def _solve(sk: SphericalSkeleton):
    problem, constant = skeleton_lp(sk)
    sol = exactlp.solve_max(problem)
    value = sol.value + constant if sol.status == "optimal" else None
    return value, sol, problem, constant


def budget(sk: SphericalSkeleton) -> int:
    """|R+| - |R+_{S^p}|, the right-hand side of the inequality."""
    rs = sk.root_system
    return len(rs.positive) - rootsys.positive_count_in_span(rs, sk.sp)


def check_conjecture(
    sk: SphericalSkeleton, compute_unique: str | bool = "auto"
) -> MukaiVerdict:
    """Assemble completeness, P(R), budget, relation and the maximizer.

    ``compute_unique="auto"`` runs the uniqueness probe exactly when the
    relation is Equal (where the theory asserts a unique maximizer).
    """
    verdict, _ = evaluate_with_stats(sk, compute_unique=compute_unique)
    return verdict


def evaluate_with_stats(
    sk: SphericalSkeleton, compute_unique: str | bool = "auto"
) -> tuple[MukaiVerdict, dict]:
    complete = sk_mod.is_complete(sk)
    value, sol, problem, constant = _solve(sk)
    pivots = sol.pivots
    bud = budget(sk)
    if value is None:
        verdict = MukaiVerdict(
            complete=complete,
            p_value=None,
            budget=bud,
            relation=None,
            theta=None,
            theta_unique=None,
        )
        return verdict, {"pivots": pivots}
    if value < bud:
        relation = STRICTLY_LESS
    elif value == bud:
        relation = EQUAL
    else:
        relation = VIOLATION
    want_unique = (
        relation == EQUAL if compute_unique == "auto" else bool(compute_unique)
    )
    unique = None
    if want_unique:
        unique = exactlp.unique_optimum(problem, sol)
    verdict = MukaiVerdict(
        complete=complete,
        p_value=value,
        budget=bud,
        relation=relation,
        theta=sol.primal,
        theta_unique=unique,
    )
    return verdict, {"pivots": pivots}


def enumerate_minimal_complete_supports(
    system: SphericalSkeleton, max_card: int = 3
) -> list[tuple[tuple[int, ...], MukaiVerdict]]:
    """Inclusion-minimal supports T (|T| <= max_card) whose reduced
    elementary skeleton is complete, each with its verdict.

    The input must carry an empty Gamma (it is the bare spherical system).
    """
    if system.boundary:
        raise ValueError("support enumeration expects a skeleton with empty Gamma")
    if max_card < 1:
        raise ValueError("max_card must be >= 1")
    nsig = len(system.sigma)
    found: list[tuple[tuple[int, ...], MukaiVerdict]] = []
    minimal: list[frozenset[int]] = []
    for card in range(1, max_card + 1):
        for combo in combinations(range(nsig), card):
            t = frozenset(combo)
            if any(prev <= t for prev in minimal):
                continue
            candidate = sk_mod.with_boundary_support(system, combo)
            if sk_mod.is_complete(candidate):
                minimal.append(t)
                found.append((combo, check_conjecture(candidate)))
    return found


def duplicate_shift_check(
    sk: SphericalSkeleton, boundary_name: str
) -> tuple[Fraction, Fraction, Fraction]:
    """(P before, P after, shift) when duplicating a boundary divisor.

    Requires an equality case with a unique maximizer; asserts the exact
    drop P(R') = P(R) + <rho(D), theta> with <rho(D), theta> < 0.
    """
    verdict = check_conjecture(sk, compute_unique=True)
    if verdict.relation != EQUAL or not verdict.theta_unique:
        raise ValueError("duplicate_shift_check needs an equality case with unique theta")
    div = next((d for d in sk.boundary if d.name == boundary_name), None)
    if div is None:
        raise ValueError(f"no boundary divisor named {boundary_name!r}")
    shift = sum(Fraction(v) * t for v, t in zip(div.rho, verdict.theta))
    doubled = sk_mod.duplicate_boundary(sk, boundary_name)
    after, _, _ = mfs_value(doubled)
    if after is None or after != verdict.p_value + shift or not after < verdict.p_value:
        raise AssertionError(
            f"duplication shift mismatch: {verdict.p_value} -> {after}, shift {shift}"
        )
    return verdict.p_value, after, shift
