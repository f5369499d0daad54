"""Graphs, distances and the per-pair resolving sets R{x,y}.

Vertex sets are stored as Python ints used as bitsets: bit ``v`` is set
when vertex ``v`` is a member.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DisconnectedGraphError, DomainError, ParseError


def members(mask: int) -> list[int]:
    """Vertex ids contained in a bitset, ascending."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbors of {v} must be sorted and distinct")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise ValueError(f"adjacency is not symmetric at {{{v},{u}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` comments and blank lines are skipped.

    The vertex set is ``{0, ..., max id}``.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {raw!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex id in {raw!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if not edges:
        raise ParseError("empty edge list")
    n = 1 + max(max(e) for e in edges)
    return Graph.from_edges(n, edges)


def is_connected(g: Graph) -> bool:
    return len(_bfs(g, 0)) == g.n if g.n else True


def _bfs(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return dist


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph on {g.n} vertices is not connected")


@dataclass(frozen=True)
class DistanceMatrix:
    d: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.d)

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.d[u][v]

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.d)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    require_connected(g)
    rows = []
    for s in range(g.n):
        dist = _bfs(g, s)
        rows.append(tuple(dist[v] for v in range(g.n)))
    return DistanceMatrix(tuple(rows))


def resolving_set_of_pair(dm: DistanceMatrix, x: int, y: int) -> int:
    """Bitset of vertices z with d(x,z) != d(y,z)."""
    if x == y:
        raise DomainError(f"R{{x,y}} needs two distinct vertices, got x=y={x}")
    dx, dy = dm.d[x], dm.d[y]
    mask = 0
    for z in range(dm.n):
        if dx[z] != dy[z]:
            mask |= 1 << z
    return mask


@dataclass(frozen=True)
class PairSystem:
    """All unordered vertex pairs with their resolving sets, plus kappa."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    rsets: tuple[int, ...]
    kappa: int

    def rset(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        if x == y or not 0 <= x or y >= self.n:
            raise DomainError(f"no pair {{{x},{y}}} in a graph on {self.n} vertices")
        # pairs are in lexicographic order
        idx = x * self.n - x * (x + 1) // 2 + (y - x - 1)
        return self.rsets[idx]

    def min_pairs(self) -> list[int]:
        """Indices of pairs whose resolving set has exactly kappa vertices."""
        return [i for i, r in enumerate(self.rsets) if r.bit_count() == self.kappa]


def pair_system(g: Graph, dm: DistanceMatrix | None = None) -> PairSystem:
    if g.n < 2:
        raise DomainError("kappa is undefined for a graph with fewer than two vertices")
    if dm is None:
        dm = all_pairs_distances(g)
    pairs = tuple(combinations(range(g.n), 2))
    rsets = tuple(resolving_set_of_pair(dm, x, y) for x, y in pairs)
    kappa = min(r.bit_count() for r in rsets)
    return PairSystem(g.n, pairs, rsets, kappa)


def r_kappa_union(ps: PairSystem) -> int:
    out = 0
    for r in ps.rsets:
        if r.bit_count() == ps.kappa:
            out |= r
    return out


def twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs {x,y}, x<y, with N(x) - {y} == N(y) - {x}."""
    nbr = [set(a) for a in g.adjacency]
    return [
        (x, y)
        for x, y in combinations(range(g.n), 2)
        if nbr[x] - {y} == nbr[y] - {x}
    ]


def is_path_graph(g: Graph) -> bool:
    return (
        g.n >= 2
        and g.num_edges == g.n - 1
        and is_connected(g)
        and all(g.degree(v) <= 2 for v in range(g.n))
    )


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and is_connected(g)
