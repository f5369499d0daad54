"""Graph families with known kappa and dimension values.

Vertex numbering per family:

* path, cycle: ``0..n-1`` in order.
* wheel ``W_n``: rim cycle ``0..n-2``, hub ``n-1``.
* Petersen: outer 5-cycle ``0..4``, inner pentagram ``5..9``, spokes ``i -- i+5``.
* bouquet: cut vertex ``0``, then each cycle's remaining vertices in order.
* complete multipartite: parts contiguous, in the given order.
* grid ``P_s x P_t``: row-major, ``(u_i, w_j) -> (i-1)*t + (j-1)``.
* spider: center ``0``, legs (shortest first) walked outward.
* remark construction: base vertices first, then for each base vertex
  ``u_i`` its legs a, b, c, each walked outward from ``u_i``.
* blow-up: one contiguous group per base vertex, in base order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Union

from .errors import DomainError, FamilySpecError, ParseError
from .graph import Graph, is_connected
from .lp import parse_rational


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise FamilySpecError(f"path needs n >= 2, got {self.n}")

    def __str__(self):
        return f"path:{self.n}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise FamilySpecError(f"cycle needs n >= 3, got {self.n}")

    def __str__(self):
        return f"cycle:{self.n}"


@dataclass(frozen=True)
class Wheel:
    """``W_n``: ``n`` counts the hub and the ``n-1`` rim vertices."""

    n: int

    def __post_init__(self):
        if self.n < 5:
            raise FamilySpecError(f"wheel needs n >= 5, got {self.n}")

    def __str__(self):
        return f"wheel:{self.n}"


@dataclass(frozen=True)
class Petersen:
    def __str__(self):
        return "petersen"


def _sorted_tuple(obj, name: str) -> None:
    object.__setattr__(obj, name, tuple(sorted(getattr(obj, name))))


@dataclass(frozen=True)
class Bouquet:
    lengths: tuple[int, ...]

    def __post_init__(self):
        _sorted_tuple(self, "lengths")
        if len(self.lengths) < 2:
            raise FamilySpecError("bouquet needs at least 2 cycles")
        if self.lengths[0] < 3:
            raise FamilySpecError("bouquet cycles need length >= 3")

    def __str__(self):
        return "bouquet:" + ",".join(map(str, self.lengths))


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise FamilySpecError("complete multipartite graph needs at least 2 parts")
        if min(self.parts) < 1:
            raise FamilySpecError("parts must be nonempty")

    def __str__(self):
        return "multipartite:" + ",".join(map(str, self.parts))


@dataclass(frozen=True)
class Grid:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 2 or self.t < 2:
            raise FamilySpecError(f"grid needs s, t >= 2, got {self.s}x{self.t}")

    def __str__(self):
        return f"grid:{self.s}x{self.t}"


@dataclass(frozen=True)
class Spider:
    """Tree with one exterior major vertex; legs kept shortest first."""

    legs: tuple[int, ...]

    def __post_init__(self):
        _sorted_tuple(self, "legs")
        if len(self.legs) < 3:
            raise FamilySpecError("spider needs at least 3 legs")
        if self.legs[0] < 1:
            raise FamilySpecError("spider legs need length >= 1")

    def __str__(self):
        return "spider:" + ",".join(map(str, self.legs))


@dataclass(frozen=True)
class RemarkConstruction:
    """Three pendant paths of ``s`` vertices hung on every vertex of ``base``."""

    base: "FamilySpec"
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise FamilySpecError(f"remark construction needs s >= 1, got {self.s}")
        h = generate(self.base)
        if h.n < 2 or not is_connected(h):
            raise FamilySpecError("remark construction needs a connected base with >= 2 vertices")

    def __str__(self):
        return f"remark:{self.base},s={self.s}"


@dataclass(frozen=True)
class Group:
    size: int
    complete: bool

    def __str__(self):
        return f"{self.size}{'K' if self.complete else 'E'}"


@dataclass(frozen=True)
class Blowup:
    """Each base vertex replaced by a clique (K) or an independent set (E)."""

    base: "FamilySpec"
    groups: tuple[Group, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        nb = generate(self.base).n
        if len(self.groups) != nb:
            raise FamilySpecError(f"blow-up needs {nb} group sizes, got {len(self.groups)}")
        if any(gr.size < 1 for gr in self.groups):
            raise FamilySpecError("blow-up group sizes must be >= 1")

    @property
    def all_groups_nontrivial(self) -> bool:
        return all(gr.size >= 2 for gr in self.groups)

    def __str__(self):
        return f"blowup:{self.base},sizes=" + ",".join(map(str, self.groups))


FamilySpec = Union[
    Path, Cycle, Wheel, Petersen, Bouquet, CompleteMultipartite, Grid, Spider,
    RemarkConstruction, Blowup,
]


# -------------------------------------------------------------------
#   parsing
# -------------------------------------------------------------------


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what}: expected an integer, got {text!r}") from None


def parse_family(text: str) -> FamilySpec:
    """Parse the compact form, e.g. ``grid:3x4`` or ``remark:path:2,s=2``."""
    text = text.strip()
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    if kind == "path":
        return Path(_int(rest, "path"))
    if kind == "cycle":
        return Cycle(_int(rest, "cycle"))
    if kind == "wheel":
        return Wheel(_int(rest, "wheel"))
    if kind == "petersen":
        if rest:
            raise ParseError("petersen takes no parameters")
        return Petersen()
    if kind == "bouquet":
        return Bouquet(_ints(rest, "bouquet"))
    if kind == "multipartite":
        return CompleteMultipartite(_ints(rest, "multipartite"))
    if kind == "complete":
        return CompleteMultipartite((1,) * _int(rest, "complete"))
    if kind == "grid":
        s, sep, t = rest.lower().partition("x")
        if not sep:
            raise ParseError(f"grid: expected SxT, got {rest!r}")
        return Grid(_int(s, "grid"), _int(t, "grid"))
    if kind == "spider":
        return Spider(_ints(rest, "spider"))
    if kind == "remark":
        base, sep, s = rest.rpartition(",s=")
        if not sep:
            raise ParseError(f"remark: expected BASE,s=N, got {rest!r}")
        return RemarkConstruction(parse_family(base), _int(s, "remark s"))
    if kind == "blowup":
        base, sep, sizes = rest.rpartition(",sizes=")
        if not sep:
            raise ParseError(f"blowup: expected BASE,sizes=..., got {rest!r}")
        groups = []
        for tok in sizes.split(","):
            tok = tok.strip().upper()
            complete = not tok.endswith("E")
            digits = tok.rstrip("KE")
            groups.append(Group(_int(digits, "blowup size"), complete))
        return Blowup(parse_family(base), tuple(groups))
    raise ParseError(f"unknown family {kind!r}")


# -------------------------------------------------------------------
#   generators
# -------------------------------------------------------------------


def _path_edges(vertices):
    return list(zip(vertices, vertices[1:]))


def generate(spec: FamilySpec) -> Graph:
    match spec:
        case Path(n):
            return Graph.from_edges(n, _path_edges(range(n)))
        case Cycle(n):
            return Graph.from_edges(n, _path_edges(range(n)) + [(n - 1, 0)])
        case Wheel(n):
            rim = n - 1
            edges = [(i, (i + 1) % rim) for i in range(rim)]
            edges += [(i, rim) for i in range(rim)]
            return Graph.from_edges(n, edges)
        case Petersen():
            edges = [(i, (i + 1) % 5) for i in range(5)]
            edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
            edges += [(i, i + 5) for i in range(5)]
            return Graph.from_edges(10, edges)
        case Bouquet(lengths):
            edges = []
            nxt = 1
            for length in lengths:
                cyc = [0] + list(range(nxt, nxt + length - 1)) + [0]
                edges += _path_edges(cyc)
                nxt += length - 1
            return Graph.from_edges(nxt, edges)
        case CompleteMultipartite(parts):
            label = []
            for i, a in enumerate(parts):
                label += [i] * a
            n = len(label)
            edges = [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]]
            return Graph.from_edges(n, edges)
        case Grid(s, t):
            edges = []
            for i in range(s):
                for j in range(t):
                    v = i * t + j
                    if j + 1 < t:
                        edges.append((v, v + 1))
                    if i + 1 < s:
                        edges.append((v, v + t))
            return Graph.from_edges(s * t, edges)
        case Spider(legs):
            edges = []
            nxt = 1
            for length in legs:
                edges += _path_edges([0] + list(range(nxt, nxt + length)))
                nxt += length
            return Graph.from_edges(nxt, edges)
        case RemarkConstruction(base, s):
            h = generate(base)
            edges = list(h.edges())
            nxt = h.n
            for u in range(h.n):
                for _ in range(3):
                    edges += _path_edges([u] + list(range(nxt, nxt + s)))
                    nxt += s
            return Graph.from_edges(nxt, edges)
        case Blowup(base, groups):
            h = generate(base)
            start = [0]
            for gr in groups:
                start.append(start[-1] + gr.size)
            block = [range(start[i], start[i + 1]) for i in range(h.n)]
            edges = []
            for i, gr in enumerate(groups):
                if gr.complete:
                    edges += list(combinations(block[i], 2))
            for a, b in h.edges():
                edges += [(u, v) for u in block[a] for v in block[b]]
            return Graph.from_edges(start[-1], edges)
    raise FamilySpecError(f"not a family spec: {spec!r}")


# -------------------------------------------------------------------
#   closed forms
# -------------------------------------------------------------------


def closed_form_kappa(spec: FamilySpec) -> int:
    match spec:
        case Path(n):
            return 2 if n == 2 else n - 1
        case Cycle(n):
            return n - 2 if n % 2 == 0 else n - 1
        case Wheel(n):
            return 2 if n == 5 else 4
        case Petersen():
            return 6
        case Bouquet(lengths):
            c1 = lengths[0]
            return c1 - 1 if c1 % 2 else c1 - 2
        case CompleteMultipartite():
            return 2
        case Grid(s, t):
            return s + t - 2
        case Spider(legs):
            return legs[0] + legs[1]
        case RemarkConstruction(_, s):
            return 2 * s
    raise DomainError(f"no closed-form kappa for {spec}")


def _k_range(k, lo, hi, spec) -> Fraction:
    k = parse_rational(k)
    if not lo <= k <= hi:
        raise DomainError(f"closed form for {spec} holds for k in [{lo}, {hi}], got k={k}")
    return k


def closed_form_fkdim(spec: FamilySpec, k) -> Fraction:
    match spec:
        case Path(n):
            k = _k_range(k, 1, closed_form_kappa(spec), spec)
            if k <= 2:
                return k
            return 2 + (k - 2) * Fraction(n - 2, n - 3)
        case Cycle(n):
            k = _k_range(k, 1, closed_form_kappa(spec), spec)
            return k * Fraction(n, n - 2 if n % 2 == 0 else n - 1)
        case Wheel(n):
            k = _k_range(k, 1, 2 if n == 5 else 4, spec)
            return k * closed_form_fdim(spec)
        case Petersen():
            k = _k_range(k, 1, 6, spec)
            return Fraction(5, 3) * k
        case Bouquet(lengths):
            k = _k_range(k, 1, closed_form_kappa(spec), spec)
            return k * len(lengths)
        case CompleteMultipartite():
            k = _k_range(k, 1, 2, spec)
            return k * closed_form_fdim(spec)
        case Grid():
            k = _k_range(k, 1, closed_form_kappa(spec), spec)
            return 2 * k
        case Spider(legs):
            k = _k_range(k, 1, closed_form_kappa(spec), spec)
            return spider_fkdim(legs, k)
        case RemarkConstruction(base, _):
            k = _k_range(k, 1, closed_form_kappa(spec), spec)
            return Fraction(3 * generate(base).n, 2) * k
        case Blowup():
            _require_nontrivial_blowup(spec)
            k = _k_range(k, 1, 2, spec)
            return k * closed_form_fdim(spec)
    raise DomainError(f"no closed-form fractional k-metric dimension for {spec}")


def spider_fkdim(legs, k) -> Fraction:
    """dim_f^k of a spider with the given leg lengths (any order)."""
    legs = sorted(legs)
    a, short = len(legs), legs[0]
    k = parse_rational(k)
    if not 1 <= k <= legs[0] + legs[1]:
        raise DomainError(f"k={k} outside [1, {legs[0] + legs[1]}] for spider legs {legs}")
    low = k * a / 2
    high = (a - 1) * k - (a - 2) * short
    if k == 2 * short:
        # both branches meet at the breakpoint
        assert low == high
    return low if k <= 2 * short else high


def closed_form_kdim(spec: FamilySpec, k: int) -> int:
    if not isinstance(k, int) or isinstance(k, bool):
        raise DomainError(f"integer k-metric dimension needs an integer k, got {k!r}")
    match spec:
        case Grid():
            _k_range(k, 1, closed_form_kappa(spec), spec)
            return 2 * k
        case RemarkConstruction(base, _):
            _k_range(k, 1, closed_form_kappa(spec), spec)
            n = generate(base).n
            return 3 * k * n // 2 if k % 2 == 0 else (3 * k + 1) * n // 2
    raise DomainError(f"no closed-form k-metric dimension for {spec}")


def closed_form_fdim(spec: FamilySpec) -> Fraction:
    match spec:
        case Path():
            return Fraction(1)
        case Cycle(n):
            return Fraction(n, n - 2 if n % 2 == 0 else n - 1)
        case Wheel(n):
            if n == 5:
                return Fraction(2)
            if n == 6:
                return Fraction(3, 2)
            return Fraction(n - 1, 4)
        case Petersen():
            return Fraction(5, 3)
        case Bouquet(lengths):
            return Fraction(len(lengths))
        case CompleteMultipartite(parts):
            n = sum(parts)
            return Fraction(n - 1, 2) if parts.count(1) == 1 else Fraction(n, 2)
        case Grid():
            return Fraction(2)
        case Spider(legs):
            # sigma = number of legs, no terminal-degree-1 vertices
            return Fraction(len(legs), 2)
        case RemarkConstruction(base, _):
            return Fraction(3 * generate(base).n, 2)
        case Blowup():
            _require_nontrivial_blowup(spec)
            return Fraction(generate(spec).n, 2)
    raise DomainError(f"no closed-form fractional metric dimension for {spec}")


def _require_nontrivial_blowup(spec: Blowup) -> None:
    if not spec.all_groups_nontrivial:
        raise DomainError(f"closed form for {spec} needs every group of size >= 2")
    if not is_connected(generate(spec.base)):
        raise DomainError(f"blow-up base of {spec} must be connected")
