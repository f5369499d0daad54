"""Integer k-metric dimension by branch-and-bound, plus an exhaustive oracle.

A k-resolving set must meet every R{x,y} in at least k vertices, which is
a multicover problem over the pair system. Nodes fix vertices in or out;
each node is bounded below by the ceiling of the LP relaxation of what is
left to cover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DomainError, GuardError
from .graph import Graph, PairSystem, members, pair_system
from .lp import LinearProgram, solve_min

DEFAULT_GUARD = 16


@dataclass(frozen=True)
class IntegerDimResult:
    k: int
    value: int
    witness: frozenset[int]

    def to_json(self) -> dict:
        return {"k": self.k, "value": self.value, "witness": sorted(self.witness)}


def _check_integer_k(k, kappa: int) -> int:
    if isinstance(k, Fraction):
        if k.denominator != 1:
            raise DomainError(f"k-metric dimension needs an integer k, got {k}")
        k = int(k)
    if not isinstance(k, int) or isinstance(k, bool):
        raise DomainError(f"k-metric dimension needs an integer k, got {k!r}")
    if k < 1:
        raise DomainError(f"k={k} is below 1")
    if k > kappa:
        raise DomainError(f"k exceeds kappa={kappa} (k={k})")
    return k


def is_k_resolving_set(ps: PairSystem, vertices, k: int) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all((mask & r).bit_count() >= k for r in ps.rsets)


def _distinct_rows(ps: PairSystem) -> list[int]:
    # duplicate and superset rows carry no extra information for equal rhs
    rows = sorted(set(ps.rsets), key=lambda r: (r.bit_count(), r))
    kept: list[int] = []
    for r in rows:
        if not any(s & ~r == 0 for s in kept):
            kept.append(r)
    return kept


def branch_order(ps: PairSystem) -> list[int]:
    """Vertices by membership count in minimum-size resolving sets, descending."""
    counts = [0] * ps.n
    for r in ps.rsets:
        if r.bit_count() == ps.kappa:
            for v in members(r):
                counts[v] += 1
    return sorted(range(ps.n), key=lambda v: (-counts[v], v))


def _greedy(rows: list[int], k: int, n: int) -> int:
    chosen = 0
    deficit = {r: k for r in rows}
    while any(d > 0 for d in deficit.values()):
        best, best_gain = -1, 0
        for v in range(n):
            if chosen >> v & 1:
                continue
            bit = 1 << v
            gain = sum(d for r, d in deficit.items() if d > 0 and r & bit)
            if gain > best_gain:
                best, best_gain = v, gain
        chosen |= 1 << best
        bit = 1 << best
        for r in deficit:
            if r & bit:
                deficit[r] -= 1
    # drop vertices that became redundant
    for v in reversed(range(n)):
        bit = 1 << v
        if chosen & bit and all(((chosen & ~bit) & r).bit_count() >= k for r in rows):
            chosen &= ~bit
    return chosen


class _Search:
    def __init__(self, rows: list[int], k: int, n: int, order: list[int]):
        self.rows = rows
        self.k = k
        self.n = n
        self.order = order
        self.best = _greedy(rows, k, n)
        self.best_size = self.best.bit_count()
        self.nodes = 0

    def lp_bound(self, included: int, free: int) -> int | None:
        """Lower bound on the final size, or None if the node is infeasible."""
        residual = []
        for r in self.rows:
            need = self.k - (r & included).bit_count()
            if need <= 0:
                continue
            avail = r & free
            if avail.bit_count() < need:
                return None
            residual.append((avail, need))
        size = included.bit_count()
        if not residual:
            return size
        free_list = members(free)
        index = {v: i for i, v in enumerate(free_list)}
        lp = LinearProgram.build(
            [1] * len(free_list),
            [([index[v] for v in members(a)], need) for a, need in residual],
            [1] * len(free_list),
        )
        sol = solve_min(lp)
        if not sol.optimal:
            return None
        return size + math.ceil(sol.value)

    def propagate(self, included: int, free: int) -> tuple[int, int] | None:
        """Force in every free vertex of a row that needs all of its free vertices."""
        changed = True
        while changed:
            changed = False
            for r in self.rows:
                need = self.k - (r & included).bit_count()
                if need <= 0:
                    continue
                avail = r & free
                c = avail.bit_count()
                if c < need:
                    return None
                if c == need:
                    included |= avail
                    free &= ~avail
                    changed = True
        return included, free

    def run(self, included: int, free: int) -> None:
        self.nodes += 1
        state = self.propagate(included, free)
        if state is None:
            return
        included, free = state
        if included.bit_count() >= self.best_size:
            return
        bound = self.lp_bound(included, free)
        if bound is None or bound >= self.best_size:
            return
        unmet = 0
        for r in self.rows:
            if (r & included).bit_count() < self.k:
                unmet |= r
        if not unmet:
            self.best, self.best_size = included, included.bit_count()
            return
        v = next(v for v in self.order if (free & unmet) >> v & 1)
        bit = 1 << v
        self.run(included | bit, free & ~bit)
        self.run(included, free & ~bit)


def _verify_witness(ps: PairSystem, witness: int, k: int) -> None:
    for (x, y), r in zip(ps.pairs, ps.rsets):
        if (witness & r).bit_count() < k:
            raise AssertionError(f"witness misses pair {{{x},{y}}} at k={k}")


def k_metric_dimension(g: Graph, k, ps: PairSystem | None = None) -> IntegerDimResult:
    if ps is None:
        ps = pair_system(g)
    k = _check_integer_k(k, ps.kappa)
    search = _Search(_distinct_rows(ps), k, ps.n, branch_order(ps))
    search.run(0, (1 << ps.n) - 1)
    _verify_witness(ps, search.best, k)
    return IntegerDimResult(k, search.best_size, frozenset(members(search.best)))


def metric_dimension(g: Graph, ps: PairSystem | None = None) -> IntegerDimResult:
    return k_metric_dimension(g, 1, ps)


def brute_force_k_metric_dimension(
    g: Graph, k, size_cap: int = DEFAULT_GUARD, ps: PairSystem | None = None
) -> IntegerDimResult:
    """Try every vertex subset by increasing size; the first k-resolving one wins."""
    if g.n > size_cap:
        raise GuardError(
            f"exhaustive search refused: {g.n} vertices exceeds the guard of {size_cap}"
        )
    if ps is None:
        ps = pair_system(g)
    k = _check_integer_k(k, ps.kappa)
    rows = ps.rsets
    for size in range(ps.n + 1):
        for subset in combinations(range(ps.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if all((mask & r).bit_count() >= k for r in rows):
                _verify_witness(ps, mask, k)
                return IntegerDimResult(k, size, frozenset(subset))
    raise AssertionError("the full vertex set is always k-resolving for k <= kappa")
