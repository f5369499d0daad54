"""Exact rational LP solver for covering-type programs.

Programs have the form::

    minimize    c . x
    subject to  sum(x[j] for j in S_i) >= b_i     for every row i
                0 <= x[j] <= u[j]

All arithmetic is done with :class:`fractions.Fraction`. The solver is a
bounded-variable dual simplex on a compact (nonbasic-columns-only)
tableau. Because every structural variable has a finite upper bound, a
dual feasible starting basis always exists: each variable starts at the
bound favoured by the sign of its cost and the row surpluses are basic.
No phase one is needed. Pivots follow Bland's smallest-index rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import LPStructureError, ParseError

Rational = Fraction


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a finite decimal literal exactly."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None


def format_rational(q: Fraction | int) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class Constraint:
    """``sum(x[j] for j in vars) >= rhs``."""

    vars: frozenset[int]
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]
    upper_bounds: tuple[Fraction, ...]

    @classmethod
    def build(
        cls,
        objective: Sequence,
        constraints: Iterable[tuple[Iterable[int], object]],
        upper_bounds: Sequence,
    ) -> LinearProgram:
        rows = tuple(Constraint(frozenset(vs), Fraction(rhs)) for vs, rhs in constraints)
        return cls(
            len(objective),
            tuple(Fraction(c) for c in objective),
            rows,
            tuple(Fraction(u) for u in upper_bounds),
        )

    def validate(self) -> None:
        if self.num_vars < 0:
            raise LPStructureError("negative variable count")
        if len(self.objective) != self.num_vars:
            raise LPStructureError(
                f"objective has {len(self.objective)} entries for {self.num_vars} variables"
            )
        if len(self.upper_bounds) != self.num_vars:
            raise LPStructureError(
                f"{len(self.upper_bounds)} upper bounds for {self.num_vars} variables"
            )
        for j, u in enumerate(self.upper_bounds):
            if u < 0:
                raise LPStructureError(f"negative upper bound {u} on variable {j}")
        for i, row in enumerate(self.constraints):
            for j in row.vars:
                if not 0 <= j < self.num_vars:
                    raise LPStructureError(f"row {i} references variable {j} out of range")


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPSolution:
    status: Status
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


def check_feasible(lp: LinearProgram, assignment: Sequence[Fraction]) -> bool:
    if len(assignment) != lp.num_vars:
        raise ValueError(
            f"assignment has {len(assignment)} entries, program has {lp.num_vars} variables"
        )
    for x, u in zip(assignment, lp.upper_bounds):
        if x < 0 or x > u:
            return False
    return all(sum(assignment[j] for j in row.vars) >= row.rhs for row in lp.constraints)


def prune_dominated(lp: LinearProgram) -> LinearProgram:
    """Drop rows implied by another row.

    Row ``T`` is implied by row ``S`` when ``S`` is a subset of ``T`` and
    ``rhs(T) <= rhs(S)``: with nonnegative variables ``x(T) >= x(S)``.
    Rows with ``rhs <= 0`` are always implied. Order of surviving rows is kept.
    """
    rows = [r for r in lp.constraints if r.rhs > 0]
    masks = [sum(1 << j for j in r.vars) for r in rows]
    order = sorted(range(len(rows)), key=lambda i: (masks[i].bit_count(), -rows[i].rhs, i))
    kept: list[int] = []
    for i in order:
        mi, bi = masks[i], rows[i].rhs
        if any(masks[j] & ~mi == 0 and rows[j].rhs >= bi for j in kept):
            continue
        kept.append(i)
    kept.sort()
    return LinearProgram(
        lp.num_vars, lp.objective, tuple(rows[i] for i in kept), lp.upper_bounds
    )


class _Tableau:
    """Compact tableau: ``basic[i] = d[i] + sum_j t[i][j] * nonbasic[j]``.

    Every variable may be complemented (replaced by ``u - x``), so all
    nonbasic variables sit at zero in their current representation.
    """

    def __init__(self, lp: LinearProgram):
        n, m = lp.num_vars, len(lp.constraints)
        self.n = n
        self.upper: list[Fraction | None] = list(lp.upper_bounds) + [None] * m
        self.comp = [False] * (n + m)
        self.nonbasic = list(range(n))
        self.basis = list(range(n, n + m))
        self.r = []
        self.z0 = Fraction(0)
        for j, c in enumerate(lp.objective):
            if c < 0:
                self.comp[j] = True
                self.z0 += c * lp.upper_bounds[j]
                self.r.append(-c)
            else:
                self.r.append(c)
        one, zero = Fraction(1), Fraction(0)
        self.d = []
        self.t = []
        for row in lp.constraints:
            d = -row.rhs
            coeffs = [zero] * n
            for j in row.vars:
                if self.comp[j]:
                    d += lp.upper_bounds[j]
                    coeffs[j] = -one
                else:
                    coeffs[j] = one
            self.d.append(d)
            self.t.append(coeffs)

    def leaving_row(self) -> int | None:
        best = None
        for i, var in enumerate(self.basis):
            v = self.d[i]
            u = self.upper[var]
            if v < 0 or (u is not None and v > u):
                if best is None or var < self.basis[best]:
                    best = i
        return best

    def complement_row(self, i: int) -> None:
        var = self.basis[i]
        self.d[i] = self.upper[var] - self.d[i]
        self.t[i] = [-x for x in self.t[i]]
        self.comp[var] = not self.comp[var]

    def entering_col(self, i: int) -> int | None:
        row = self.t[i]
        best = None
        best_ratio = None
        for j, a in enumerate(row):
            if a > 0:
                ratio = self.r[j] / a
                if (
                    best is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and self.nonbasic[j] < self.nonbasic[best])
                ):
                    best, best_ratio = j, ratio
        return best

    def pivot(self, i: int, e: int) -> None:
        row = self.t[i]
        p = row[e]
        inv = 1 / p
        new_row = [-a * inv for a in row]
        new_row[e] = inv
        new_d = -self.d[i] * inv
        nz = [j for j, a in enumerate(new_row) if a]
        for k, other in enumerate(self.t):
            if k == i:
                continue
            f = other[e]
            if not f:
                continue
            for j in nz:
                if j == e:
                    other[j] = f * inv
                else:
                    other[j] += f * new_row[j]
            self.d[k] += f * new_d
        f = self.r[e]
        if f:
            for j in nz:
                if j == e:
                    self.r[j] = f * inv
                else:
                    self.r[j] += f * new_row[j]
            self.z0 += f * new_d
        self.t[i] = new_row
        self.d[i] = new_d
        self.basis[i], self.nonbasic[e] = self.nonbasic[e], self.basis[i]

    def assignment(self) -> tuple[Fraction, ...]:
        values = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                values[var] = self.d[i]
        for j in range(self.n):
            if self.comp[j]:
                values[j] = self.upper[j] - values[j]
        return tuple(values)


def solve_min(lp: LinearProgram, prune: bool = True, max_pivots: int | None = None) -> LPSolution:
    """Minimize ``lp`` exactly.

    With ``prune`` the dominated-row pre-pass of :func:`prune_dominated`
    runs first; the returned assignment is feasible for the original rows.
    """
    lp.validate()
    work = prune_dominated(lp) if prune else lp
    tab = _Tableau(work)
    if max_pivots is None:
        max_pivots = 1000 * (work.num_vars + len(work.constraints) + 1)
    for _ in range(max_pivots):
        i = tab.leaving_row()
        if i is None:
            x = tab.assignment()
            value = sum((c * xi for c, xi in zip(lp.objective, x)), Fraction(0))
            return LPSolution(Status.OPTIMAL, value, x)
        if tab.d[i] >= 0:
            # above its upper bound: flip so it leaves at zero
            tab.complement_row(i)
        e = tab.entering_col(i)
        if e is None:
            return LPSolution(Status.INFEASIBLE)
        tab.pivot(i, e)
    raise RuntimeError(f"simplex exceeded {max_pivots} pivots (cycling?)")
