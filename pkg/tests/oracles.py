"""Independent reference implementations used only by the test suite."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

INF = float("inf")


def floyd_warshall(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def rset_from_matrix(d, x, y):
    return {z for z in range(len(d)) if d[x][z] != d[y][z]}


def _solve_square(a, b):
    """Gauss-Jordan over Fractions; None when singular."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


def lp_vertex_enumeration(cost, rows, upper):
    """Minimise cost.x over {sum_{j in S} x_j >= b, 0 <= x <= u} by trying every basic solution.

    Each variable is fixed at 0, fixed at its bound, or left free; the free
    ones are pinned by an equal number of tight rows. Returns the optimum
    or None when no basic solution is feasible.
    """
    n = len(cost)
    best = None
    for states in product((0, 1, 2), repeat=n):
        free = [j for j in range(n) if states[j] == 2]
        fixed = [Fraction(0) if s == 0 else Fraction(upper[j]) if s == 1 else None for j, s in enumerate(states)]
        for tight in combinations(range(len(rows)), len(free)):
            x = list(fixed)
            if free:
                a = [[1 if j in rows[i][0] else 0 for j in free] for i in tight]
                b = [
                    rows[i][1] - sum(fixed[j] for j in rows[i][0] if fixed[j] is not None)
                    for i in tight
                ]
                sol = _solve_square(a, b)
                if sol is None:
                    continue
                for j, val in zip(free, sol):
                    x[j] = val
            if any(not 0 <= x[j] <= upper[j] for j in range(n)):
                continue
            if any(sum(x[j] for j in s) < rhs for s, rhs in rows):
                continue
            val = sum(c * xj for c, xj in zip(cost, x))
            if best is None or val < best:
                best = val
    return best
