"""Exact rational linear programming with certificates.

Canonical form: maximize c.x subject to A x <= b, x >= 0, everything a
``fractions.Fraction``.  The solver is a two-phase primal simplex with
Bland's rule (entering: smallest index with negative reduced cost; leaving:
smallest basic index among the minimum ratios), so it terminates and every
run is deterministic.  Optimal solutions carry the exact dual vector read
off the slack columns; unbounded ones carry an improving ray.

Negative right-hand sides are handled by the one-artificial-variable
phase 1; an empty feasible region raises ``LpInfeasibleError`` (skeleton
problems always contain x = 0, so that error flags malformed input).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LpInfeasibleError(ValueError):
    """The feasible region {x >= 0 : Ax <= b} is empty."""


def _frac_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _frac_vector(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class LpProblem:
    """max c.x  s.t.  a x <= b,  x >= 0."""

    a: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]

    @staticmethod
    def make(a, b, c) -> "LpProblem":
        a = _frac_matrix(a)
        b = _frac_vector(b)
        c = _frac_vector(c)
        if len(a) != len(b):
            raise ValueError("row count of A does not match b")
        for row in a:
            if len(row) != len(c):
                raise ValueError("column count of A does not match c")
        return LpProblem(a=a, b=b, c=c)

    @property
    def m(self) -> int:
        return len(self.b)

    @property
    def n(self) -> int:
        return len(self.c)


@dataclass
class LpSolution:
    status: str  # "optimal" | "unbounded"
    primal: tuple[Fraction, ...]
    value: Fraction | None = None
    dual: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None
    unique_optimum: bool | None = None
    pivots: int = 0


class _Simplex:
    """Dense tableau over Fractions; rows are B^-1 [A | I], rhs B^-1 b."""

    def __init__(self, problem: LpProblem):
        m, n = problem.m, problem.n
        self.m, self.n = m, n
        self.width = n + m  # structural + slack columns; aux column may follow
        self.rows = []
        for i in range(m):
            row = [Fraction(x) for x in problem.a[i]] + [_ZERO] * m + [problem.b[i]]
            row[n + i] = _ONE
            self.rows.append(row)
        self.basis = [n + i for i in range(m)]
        self.obj: list[Fraction] = []
        self.pivots = 0

    def pivot(self, r: int, c: int) -> None:
        self.pivots += 1
        prow = self.rows[r]
        piv = prow[c]
        if piv != 1:
            prow = [v / piv for v in prow]
            self.rows[r] = prow
        for i in range(self.m):
            if i == r:
                continue
            f = self.rows[i][c]
            if f:
                self.rows[i] = [a - f * p for a, p in zip(self.rows[i], prow)]
        f = self.obj[c]
        if f:
            self.obj = [a - f * p for a, p in zip(self.obj, prow)]
        self.basis[r] = c

    def run(self) -> int | None:
        """Bland iterations; None once optimal, else the unbounded column."""
        while True:
            enter = -1
            obj = self.obj
            for j in range(self.width):
                if obj[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return None
            leave = -1
            best = None
            for i in range(self.m):
                coef = self.rows[i][enter]
                if coef > 0:
                    ratio = self.rows[i][-1] / coef
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return enter
            self.pivot(leave, enter)

    def set_objective(self, c: Sequence[Fraction]) -> None:
        """Objective row z_j - c_j for the current basis (c over all columns)."""
        obj = [-x for x in c] + [_ZERO]
        for i in range(self.m):
            ck = c[self.basis[i]]
            if ck:
                row = self.rows[i]
                obj = [a + ck * p for a, p in zip(obj, row)]
        self.obj = obj

    def phase1(self) -> None:
        """One-artificial-variable phase 1; raises LpInfeasibleError."""
        aux = self.width
        self.width += 1
        for row in self.rows:
            row.insert(aux, -_ONE)
        worst = min(range(self.m), key=lambda i: (self.rows[i][-1], self.basis[i]))
        c = [_ZERO] * self.width
        c[aux] = -_ONE
        self.set_objective(c)
        self.pivot(worst, aux)
        self.run()  # bounded by construction: -x0 <= 0
        if self.obj[-1] < 0:
            raise LpInfeasibleError("empty feasible region")
        if aux in self.basis:
            # degenerate: x0 basic at value 0; pivot it out, or drop the row
            # if it reduced to 0 = 0 (a redundant original constraint)
            r = self.basis.index(aux)
            for j in range(self.width - 1):
                if self.rows[r][j] != 0:
                    self.pivot(r, j)
                    break
            else:
                del self.rows[r]
                del self.basis[r]
                self.m -= 1
        for row in self.rows:
            del row[aux]
        self.width -= 1

    def primal_point(self) -> tuple[Fraction, ...]:
        x = [_ZERO] * self.n
        for i in range(self.m):
            if self.basis[i] < self.n:
                x[self.basis[i]] = self.rows[i][-1]
        return tuple(x)


def solve_max(problem: LpProblem) -> LpSolution:
    """Solve max c.x, Ax <= b, x >= 0 exactly; Infeasible is an error."""
    simplex = _Simplex(problem)
    if any(bi < 0 for bi in problem.b):
        simplex.phase1()
    n, m = problem.n, simplex.m
    c_full = list(problem.c) + [_ZERO] * (simplex.width - n)
    simplex.set_objective(c_full)
    unbounded_col = simplex.run()
    if unbounded_col is not None:
        ray = [_ZERO] * simplex.width
        ray[unbounded_col] = _ONE
        for i in range(m):
            ray[simplex.basis[i]] = -simplex.rows[i][unbounded_col]
        return LpSolution(
            status="unbounded",
            primal=simplex.primal_point(),
            ray=tuple(ray[:n]),
            pivots=simplex.pivots,
        )
    # dual components live on the slack columns (slack i is column n+i of the
    # original tableau; phase 1 may have dropped redundant rows but never
    # columns, so the layout is intact)
    dual = tuple(simplex.obj[n + i] for i in range(problem.m))
    return LpSolution(
        status="optimal",
        primal=simplex.primal_point(),
        value=simplex.obj[-1],
        dual=dual,
        pivots=simplex.pivots,
    )


def verify_certificates(problem: LpProblem, sol: LpSolution) -> bool:
    """Re-check every optimality/unboundedness invariant from scratch."""
    m, n = problem.m, problem.n
    x = sol.primal
    if len(x) != n or any(xj < 0 for xj in x):
        return False
    for i in range(m):
        if sum(problem.a[i][j] * x[j] for j in range(n)) > problem.b[i]:
            return False
    if sol.status == "optimal":
        y = sol.dual
        if y is None or sol.value is None or len(y) != m:
            return False
        if any(yi < 0 for yi in y):
            return False
        for j in range(n):
            if sum(problem.a[i][j] * y[i] for i in range(m)) < problem.c[j]:
                return False
        primal_value = sum(problem.c[j] * x[j] for j in range(n))
        dual_value = sum(problem.b[i] * y[i] for i in range(m))
        return primal_value == sol.value and dual_value == sol.value
    if sol.status == "unbounded":
        r = sol.ray
        if r is None or len(r) != n or any(rj < 0 for rj in r):
            return False
        for i in range(m):
            if sum(problem.a[i][j] * r[j] for j in range(n)) > 0:
                return False
        return sum(problem.c[j] * r[j] for j in range(n)) > 0
    return False


def unique_optimum(problem: LpProblem, sol: LpSolution) -> bool:
    """Whether the optimal face is the single point sol.primal.

    Maximizes and minimizes every coordinate over the optimal face (the
    feasible region intersected with c.x = value) and compares both bounds
    with the claimed optimum.
    """
    if sol.status != "optimal":
        raise ValueError("uniqueness is defined for optimal solutions only")
    n = problem.n
    if n == 0:
        return True
    face_a = list(problem.a) + [tuple(-cj for cj in problem.c)]
    face_b = list(problem.b) + [-sol.value]
    for j in range(n):
        for sign in (_ONE, -_ONE):
            c = [_ZERO] * n
            c[j] = sign
            sub = solve_max(LpProblem.make(face_a, face_b, c))
            if sub.status != "optimal":
                return False
            if sign * sub.value != sol.primal[j]:
                return False
    return True


def feasible_with_lower_bounds(
    aeq: Sequence[Sequence[Fraction]], lower: Fraction
) -> tuple[Fraction, ...] | None:
    """A witness lam >= lower with aeq . lam = 0, or None.

    ``aeq`` is a list of equation rows over the lam variables.  Backs the
    completeness test (find lam_D >= 1 with sum lam_D rho(D) = 0).
    """
    rows = _frac_matrix(aeq)
    if not rows:
        return ()
    k = len(rows[0])
    if k == 0:
        return ()
    lower = Fraction(lower)
    # substitute lam = lower + u with u >= 0
    rhs = [-lower * sum(row) for row in rows]
    a = [list(row) for row in rows] + [[-x for x in row] for row in rows]
    b = rhs + [-r for r in rhs]
    try:
        sol = solve_max(LpProblem.make(a, b, [_ZERO] * k))
    except LpInfeasibleError:
        return None
    return tuple(u + lower for u in sol.primal)


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a matrix over the rationals (fraction-exact elimination)."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        piv = work[rank][col]
        for i in range(rank + 1, len(work)):
            f = work[i][col]
            if f:
                fi = f / piv
                work[i] = [a - fi * p for a, p in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
