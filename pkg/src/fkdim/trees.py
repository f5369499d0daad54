"""Exterior major vertices of trees and the closed forms built on them.

None of this touches the LP: values come from leg lengths alone, so the
LP can serve as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .families import spider_fkdim
from .graph import Graph, is_tree
from .lp import parse_rational


@dataclass(frozen=True)
class Leg:
    """Path from an exterior major vertex (excluded) out to one of its leaves."""

    leaf: int
    vertices: tuple[int, ...]  # ordered outward, ends with ``leaf``

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ExteriorMajor:
    vertex: int
    legs: tuple[Leg, ...]  # sorted by length, then leaf id

    @property
    def terminal_degree(self) -> int:
        return len(self.legs)

    @property
    def subtree(self) -> frozenset[int]:
        """Vertex set of the subtree spanned by the vertex and its legs."""
        out = {self.vertex}
        for leg in self.legs:
            out.update(leg.vertices)
        return frozenset(out)


@dataclass(frozen=True)
class TreeAnalysis:
    n: int
    leaves: frozenset[int]
    exterior_majors: tuple[ExteriorMajor, ...]

    @property
    def sigma(self) -> int:
        return len(self.leaves)

    @property
    def m2(self) -> tuple[ExteriorMajor, ...]:
        return tuple(w for w in self.exterior_majors if w.terminal_degree == 2)

    @property
    def m3(self) -> tuple[ExteriorMajor, ...]:
        return tuple(w for w in self.exterior_majors if w.terminal_degree >= 3)

    @property
    def m(self) -> tuple[ExteriorMajor, ...]:
        """Exterior majors of terminal degree above one."""
        return tuple(w for w in self.exterior_majors if w.terminal_degree >= 2)

    @property
    def ex1_count(self) -> int:
        return sum(1 for w in self.exterior_majors if w.terminal_degree == 1)

    def subtrees(self) -> dict[int, frozenset[int]]:
        return {w.vertex: w.subtree for w in self.exterior_majors}


def analyze_tree(g: Graph) -> TreeAnalysis:
    if not is_tree(g):
        raise DomainError("analyze_tree needs a tree")
    if all(g.degree(v) <= 2 for v in range(g.n)):
        raise DomainError("graph is a path; use the path formulas instead")

    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    legs: dict[int, list[Leg]] = {}
    for leaf in leaves:
        # walk inward along degree-2 vertices until the first major vertex
        walk = [leaf]
        prev, cur = None, leaf
        while True:
            nxt = next(u for u in g.adjacency[cur] if u != prev)
            if g.degree(nxt) >= 3:
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        legs.setdefault(nxt, []).append(Leg(leaf, tuple(reversed(walk))))

    majors = tuple(
        ExteriorMajor(v, tuple(sorted(ls, key=lambda l: (l.length, l.leaf))))
        for v, ls in sorted(legs.items())
    )
    ta = TreeAnalysis(g.n, frozenset(leaves), majors)
    seen: set[int] = set()
    for w in majors:
        sub = w.subtree
        assert not (sub & seen), "leg subtrees must be disjoint"
        seen |= sub
    return ta


def kappa_tree(ta: TreeAnalysis) -> int:
    """Minimum distance between two terminal vertices of a common exterior major."""
    m = ta.m
    if not m:
        raise DomainError("tree has no exterior major vertex of terminal degree >= 2")
    return min(w.legs[0].length + w.legs[1].length for w in m)


def fkdim_tree(ta: TreeAnalysis, k) -> Fraction:
    k = parse_rational(k)
    kappa = kappa_tree(ta)
    if not 1 <= k <= kappa:
        raise DomainError(f"k={k} outside [1, {kappa}] for this tree")
    total = k * len(ta.m2)
    for w in ta.m3:
        total += spider_fkdim([leg.length for leg in w.legs], k)
    return total


def fdim_tree(ta: TreeAnalysis) -> Fraction:
    return Fraction(ta.sigma - ta.ex1_count, 2)
