"""Independent brute-force oracles for the test suite.

Deliberately self-contained: these use their own Fraction elimination code
so they share nothing with the simplex path they are checking.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

F = Fraction


def _solve_square(rows, rhs):
    """Solution of a square exact system, or None if singular."""
    n = len(rows)
    work = [[F(x) for x in row] + [F(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            return None
        work[col], work[piv] = work[piv], work[col]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col] / work[col][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    return tuple(work[i][n] / work[i][i] for i in range(n))


def _rank(rows):
    if not rows:
        return 0
    work = [[F(x) for x in row] for row in rows]
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for i in range(rank + 1, len(work)):
            if work[i][col] != 0:
                f = work[i][col] / work[rank][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def _nullspace_line(rows, dim):
    """A nonzero kernel vector when the matrix has rank dim-1, else None."""
    work = [[F(x) for x in row] for row in rows]
    pivots = []  # (row, col)
    rank = 0
    for col in range(dim):
        piv = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col] / work[rank][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        pivots.append((rank, col))
        rank += 1
    if rank != dim - 1:
        return None
    pivot_cols = {col for _, col in pivots}
    free = next(c for c in range(dim) if c not in pivot_cols)
    vec = [F(0)] * dim
    vec[free] = F(1)
    for row, col in pivots:
        vec[col] = -work[row][free] / work[row][col]
    return tuple(vec)


def oracle_positive_span(vectors, dim) -> bool:
    """Whether the vectors positively span Q^dim (hyperplane-normal search).

    The cone is everything iff the vectors span linearly and no hyperplane
    through the origin has them all on one side; candidate normals are the
    kernels of (dim-1)-subsets of the vectors.
    """
    if dim == 0:
        return True
    vectors = [tuple(F(x) for x in v) for v in vectors]
    if _rank(vectors) != dim:
        return False
    for subset in combinations(range(len(vectors)), dim - 1):
        normal = _nullspace_line([vectors[i] for i in subset], dim)
        if normal is None:
            continue
        for sign in (1, -1):
            if all(
                sign * sum(a * b for a, b in zip(v, normal)) <= 0 for v in vectors
            ):
                return False
    return True


def oracle_solve(a, b, c):
    """('infeasible'|'unbounded'|'optimal', value) for max c.x, Ax<=b, x>=0.

    Enumerates all candidate basic points (n active constraints among the m
    rows and n sign bounds) and, when feasible, all candidate extreme rays
    of the recession cone.
    """
    m, n = len(b), len(c)
    a = [tuple(F(x) for x in row) for row in a]
    b = [F(x) for x in b]
    c = [F(x) for x in c]
    # constraint list: (row, rhs); sign bounds -x_j <= 0
    rows = list(a) + [tuple(-F(j == k) for k in range(n)) for j in range(n)]
    rhs = b + [F(0)] * n

    def feasible(x):
        return all(
            sum(r * v for r, v in zip(row, x)) <= bound
            for row, bound in zip(rows, rhs)
        )

    best = None
    found = False
    for active in combinations(range(m + n), n):
        point = _solve_square([rows[i] for i in active], [rhs[i] for i in active])
        if point is None or not feasible(point):
            continue
        found = True
        value = sum(ci * xi for ci, xi in zip(c, point))
        if best is None or value > best:
            best = value
    if not found:
        return "infeasible", None
    for active in combinations(range(m + n), n - 1):
        ray = _nullspace_line([rows[i] for i in active], n)
        if ray is None:
            continue
        for sign in (1, -1):
            d = tuple(sign * x for x in ray)
            if all(x >= 0 for x in d) and all(
                sum(r * v for r, v in zip(row, d)) <= 0 for row in a
            ):
                if sum(ci * di for ci, di in zip(c, d)) > 0:
                    return "unbounded", None
    return "optimal", best
