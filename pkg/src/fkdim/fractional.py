"""Fractional k-metric dimension via the k-resolving LP."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .graph import Graph, PairSystem, is_path_graph, members, pair_system, r_kappa_union
from .lp import LinearProgram, format_rational, parse_rational, solve_min
from .parallel import ordered_map


@dataclass(frozen=True)
class ResolvingFunction:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        for v, x in enumerate(self.values):
            if not 0 <= x <= 1:
                raise ValueError(f"value {x} at vertex {v} is outside [0, 1]")

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def weight(self, mask: int) -> Fraction:
        return sum((self.values[v] for v in members(mask)), Fraction(0))


@dataclass(frozen=True)
class DimensionResult:
    k: Fraction
    value: Fraction
    certificate: ResolvingFunction
    kappa: int

    def to_json(self) -> dict:
        return {
            "k": format_rational(self.k),
            "value": format_rational(self.value),
            "kappa": self.kappa,
            "certificate": [format_rational(x) for x in self.certificate.values],
        }


def check_k(k, kappa: int) -> Fraction:
    k = parse_rational(k)
    if k < 1:
        raise DomainError(f"k={k} is below 1")
    if k > kappa:
        raise DomainError(f"k exceeds kappa={kappa} (k={k})")
    return k


def build_kresolving_lp(ps: PairSystem, k) -> LinearProgram:
    k = check_k(k, ps.kappa)
    rows = tuple((members(r), k) for r in ps.rsets)
    return LinearProgram.build([1] * ps.n, rows, [1] * ps.n)


def fractional_k_dimension(g: Graph, k, ps: PairSystem | None = None) -> DimensionResult:
    if ps is None:
        ps = pair_system(g)
    k = check_k(k, ps.kappa)
    sol = solve_min(build_kresolving_lp(ps, k))
    if not sol.optimal:
        # the constant k/kappa function is always feasible on this domain
        raise AssertionError("k-resolving LP reported infeasible inside [1, kappa]")
    return DimensionResult(k, sol.value, ResolvingFunction(sol.assignment), ps.kappa)


def fractional_dimension(g: Graph, ps: PairSystem | None = None) -> DimensionResult:
    return fractional_k_dimension(g, 1, ps)


def verify_k_resolving(ps: PairSystem, f: ResolvingFunction | Sequence[Fraction], k) -> bool:
    values = f.values if isinstance(f, ResolvingFunction) else tuple(f)
    if len(values) != ps.n:
        raise ValueError(f"function has {len(values)} values for {ps.n} vertices")
    k = parse_rational(k)
    if any(not 0 <= x <= 1 for x in values):
        return False
    for r in ps.rsets:
        if sum((values[v] for v in members(r)), Fraction(0)) < k:
            return False
    return True


class Extreme(enum.Enum):
    EQUALS_K = "EqualsK"
    EQUALS_N = "EqualsN"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class ExtremeClassification:
    """Where dim_f^k sits in [k, n], alongside the two structural predicates.

    ``path_predicate``: the graph is a path and k <= 2.
    ``full_predicate``: k equals kappa and the union of the minimum
    resolving sets covers every vertex.
    """

    value: Fraction
    equals_k: bool
    equals_n: bool
    path_predicate: bool
    full_predicate: bool

    @property
    def kind(self) -> Extreme:
        if self.equals_k:
            return Extreme.EQUALS_K
        if self.equals_n:
            return Extreme.EQUALS_N
        return Extreme.INTERIOR

    @property
    def consistent(self) -> bool:
        return self.equals_k == self.path_predicate and self.equals_n == self.full_predicate


def classify_extremes(g: Graph, k, ps: PairSystem | None = None) -> ExtremeClassification:
    if ps is None:
        ps = pair_system(g)
    res = fractional_k_dimension(g, k, ps)
    k = res.k
    full = (1 << g.n) - 1
    return ExtremeClassification(
        value=res.value,
        equals_k=res.value == k,
        equals_n=res.value == g.n,
        path_predicate=is_path_graph(g) and k <= 2,
        full_predicate=k == ps.kappa and r_kappa_union(ps) == full,
    )


def grid_samples(kappa: int, count: int) -> list[Fraction]:
    """``count`` equally spaced rationals from 1 to kappa inclusive."""
    if count < 1:
        raise DomainError("sample count must be at least 1")
    if count == 1:
        return [Fraction(1)]
    step = Fraction(kappa - 1, count - 1)
    return [1 + i * step for i in range(count)]


def default_samples(kappa: int, per_unit: int = 4) -> list[Fraction]:
    return grid_samples(kappa, kappa * per_unit)


def _solve_value(args) -> Fraction:
    g, ps, k = args
    return fractional_k_dimension(g, k, ps).value


def sweep_phi(g: Graph, samples: Iterable, ps: PairSystem | None = None) -> list[tuple[Fraction, Fraction]]:
    """Exact dim_f^k at each sample, in input order."""
    if ps is None:
        ps = pair_system(g)
    ks = []
    for raw in samples:
        try:
            ks.append(check_k(raw, ps.kappa))
        except DomainError as exc:
            raise DomainError(f"sample {raw}: {exc}") from None
    values = ordered_map(_solve_value, [(g, ps, k) for k in ks])
    return list(zip(ks, values))
