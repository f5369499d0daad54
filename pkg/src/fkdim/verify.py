"""Formula-versus-solver checks over family instances and random trees."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .families import (
    Blowup, Bouquet, CompleteMultipartite, Cycle, FamilySpec, Grid, Group, Path,
    Petersen, RemarkConstruction, Spider, Wheel, closed_form_fdim, closed_form_fkdim,
    closed_form_kappa, closed_form_kdim, generate,
)
from .fractional import fractional_k_dimension
from .graph import Graph, pair_system
from .integer import k_metric_dimension
from .lp import format_rational
from .parallel import ordered_map
from .trees import analyze_tree, fdim_tree, fkdim_tree, kappa_tree


@dataclass(frozen=True)
class Check:
    instance: str
    quantity: str  # kappa | fdim | fkdim | kdim
    k: Fraction | None
    formula: Fraction
    solved: Fraction

    @property
    def match(self) -> bool:
        return self.formula == self.solved

    def row(self) -> tuple[str, ...]:
        k = "-" if self.k is None else format_rational(self.k)
        return (
            self.instance, self.quantity, k, format_rational(self.formula),
            format_rational(self.solved), "ok" if self.match else "MISMATCH",
        )


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree via a Pruefer sequence."""
    if n < 2:
        raise ValueError("a random tree needs n >= 2")
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_nonpath_trees(count: int, max_n: int, seed: int = 0, min_n: int = 5) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_tree(rng.randint(min_n, max_n), rng)
        if any(g.degree(v) >= 3 for v in range(g.n)):
            out.append(g)
    return out


def random_connected_graph(n: int, rng: random.Random, p: float = 0.4) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    tree = random_tree(n, rng) if n >= 2 else Graph(1, ((),))
    edges = set(tree.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def k_samples(kappa: int) -> list[Fraction]:
    return sorted({Fraction(1), Fraction(kappa, 2), Fraction(kappa)} - {Fraction(1, 2)})


def family_corpus(scope: str, max_n: int = 10, s: int = 2) -> list[FamilySpec]:
    """Family instances for a verification scope.

    ``max_n`` caps the vertex count of the size-parametrised families
    (paths, cycles, wheels, grids); the fixed lists are always included.
    """
    specs: list[FamilySpec] = []
    if scope in ("paths", "all"):
        specs += [Path(n) for n in range(2, max_n + 1)]
    if scope in ("cycles", "all"):
        specs += [Cycle(n) for n in range(3, max_n + 1)]
    if scope in ("wheels", "all"):
        specs += [Wheel(n) for n in range(5, max_n + 1)]
    if scope in ("petersen", "all"):
        specs.append(Petersen())
    if scope in ("bouquets", "all"):
        specs += [Bouquet(ls) for ls in [(3, 3), (3, 4), (3, 5), (4, 4), (4, 6), (5, 5, 7), (3, 4, 5)]]
    if scope in ("multipartite", "all"):
        specs += [
            CompleteMultipartite(p)
            for p in [(1, 1), (1, 3), (2, 3), (1, 1, 2), (2, 2, 3), (3, 4), (1, 2, 2), (1, 1, 1, 1)]
        ]
    if scope in ("grids", "all"):
        specs += [Grid(a, b) for a in range(2, max_n) for b in range(a, max_n) if a * b <= max_n]
    if scope in ("spiders", "all"):
        specs += [
            Spider(ls)
            for ls in [(1, 1, 1), (2, 2, 2), (1, 2, 3), (2, 3, 4), (1, 3, 3, 3), (1, 1, 4), (3, 3, 3, 3), (1, 2, 2, 5)]
        ]
    if scope in ("remark", "all"):
        specs += [RemarkConstruction(Path(2), s), RemarkConstruction(Path(3), s)]
    if scope in ("blowups", "all"):
        specs += [
            Blowup(Path(2), (Group(2, True), Group(2, False))),
            Blowup(Path(3), (Group(2, True), Group(2, False), Group(3, True))),
            Blowup(Cycle(4), (Group(2, False),) * 4),
        ]
    return specs


def formula_k_max(spec: FamilySpec, kappa: int) -> int:
    """Largest k covered by the family's closed form."""
    if isinstance(spec, (CompleteMultipartite, Blowup)):
        return min(kappa, 2)
    if isinstance(spec, Wheel):
        return min(kappa, 2 if spec.n == 5 else 4)
    return kappa


def check_family(spec: FamilySpec, integer: bool = False) -> list[Check]:
    g = generate(spec)
    ps = pair_system(g)
    name = str(spec)
    out: list[Check] = []
    if not isinstance(spec, Blowup):
        out.append(Check(name, "kappa", None, Fraction(closed_form_kappa(spec)), Fraction(ps.kappa)))
    out.append(Check(name, "fdim", None, closed_form_fdim(spec), fractional_k_dimension(g, 1, ps).value))
    for k in k_samples(formula_k_max(spec, ps.kappa)):
        res = fractional_k_dimension(g, k, ps)
        out.append(Check(name, "fkdim", k, closed_form_fkdim(spec, k), res.value))
    if integer and isinstance(spec, (Grid, RemarkConstruction)):
        for k in range(1, ps.kappa + 1):
            res = k_metric_dimension(g, k, ps)
            out.append(Check(name, "kdim", Fraction(k), Fraction(closed_form_kdim(spec, k)), Fraction(res.value)))
    return out


def check_tree(g: Graph, name: str, extra_samples: int = 3, seed: int = 0) -> list[Check]:
    ta = analyze_tree(g)
    ps = pair_system(g)
    kt = kappa_tree(ta)
    out = [
        Check(name, "kappa", None, Fraction(kt), Fraction(ps.kappa)),
        Check(name, "fdim", None, fdim_tree(ta), fractional_k_dimension(g, 1, ps).value),
    ]
    rng = random.Random(seed)
    ks = set(k_samples(kt))
    while len(ks) < 3 + extra_samples and kt > 1:
        ks.add(1 + Fraction(rng.randint(0, 60 * (kt - 1)), 60))
    for k in sorted(ks):
        out.append(Check(name, "fkdim", k, fkdim_tree(ta, k), fractional_k_dimension(g, k, ps).value))
    return out


def _tree_task(args) -> list[Check]:
    i, g, seed = args
    edges = " ".join(f"{u}-{v}" for u, v in g.edges())
    return check_tree(g, f"tree#{i}(n={g.n}; {edges})", seed=seed + i)


def _family_task(args) -> list[Check]:
    spec, integer = args
    return check_family(spec, integer)


SCOPES = (
    "paths", "cycles", "wheels", "petersen", "bouquets", "multipartite", "grids",
    "spiders", "trees", "remark", "blowups", "all",
)


def run_scope(
    scope: str, max_n: int = 10, s: int = 2, count: int = 30, seed: int = 0,
    integer: bool = True,
) -> Iterator[Check]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    specs = family_corpus(scope, max_n, s)
    for checks in ordered_map(_family_task, [(sp, integer) for sp in specs]):
        yield from checks
    if scope in ("trees", "all"):
        trees = random_nonpath_trees(count, max(max_n, 5), seed)
        for checks in ordered_map(_tree_task, [(i, g, seed) for i, g in enumerate(trees)]):
            yield from checks


def first_mismatch(checks: list[Check]) -> Check | None:
    return next((c for c in checks if not c.match), None)

