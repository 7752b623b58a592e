"""Colored graphs and a brute-force multicolored-clique search.

A colored graph partitions its vertices into k color classes of equal size
n; edges never join two vertices of the same color.  A selection picks one
rank per color, and a multicolored clique is a selection whose k(k-1)/2
vertex pairs are all edges.  Colors and ranks are 0-based internally; file
formats use 1-based colors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import StateBoundExceeded
from .solvers import DEFAULT_STATE_BOUND

Selection = tuple[int, ...]


class Edge(NamedTuple):
    """Endpoints as (color, rank) pairs with h1 < h2."""

    h1: int
    i1: int
    h2: int
    i2: int

    @classmethod
    def canonical(cls, a: tuple[int, int], b: tuple[int, int]) -> "Edge":
        (ha, ia), (hb, ib) = sorted((a, b))
        return cls(ha, ia, hb, ib)

    def endpoints(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.h1, self.i1), (self.h2, self.i2)


class GraphValidationError(ValueError):
    """One or more structural violations, each with its location."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class ColoredGraph:
    k: int
    n: int
    names: tuple[tuple[str, ...], ...]  # names[color][rank]
    edges: tuple[Edge, ...]  # canonically sorted, duplicate-free
    _loc: dict[str, tuple[int, int]] = field(init=False, repr=False, compare=False)
    _edge_set: frozenset[Edge] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(tuple(row) for row in self.names))
        object.__setattr__(self, "edges", tuple(self.edges))
        loc: dict[str, tuple[int, int]] = {}
        violations = []
        if self.k < 1 or len(self.names) != self.k:
            violations.append(f"expected {self.k} color classes, got {len(self.names)}")
        if self.n < 1:
            violations.append(f"class size {self.n}: must be >= 1")
        for h, row in enumerate(self.names):
            if len(row) != self.n:
                violations.append(f"color {h + 1}: class size {len(row)} != {self.n}")
            for i, name in enumerate(row):
                if name in loc:
                    violations.append(f"vertex {name}: duplicate name")
                loc[name] = (h, i)
        seen = set()
        for e in self.edges:
            if e.h1 >= e.h2:
                violations.append(f"edge {e}: endpoints not in canonical color order")
            if e in seen:
                violations.append(f"edge {e}: duplicate")
            seen.add(e)
            for h, i in e.endpoints():
                if not (0 <= h < self.k and 0 <= i < self.n):
                    violations.append(f"edge {e}: endpoint ({h},{i}) out of range")
        if violations:
            raise GraphValidationError(violations)
        if self.edges != tuple(sorted(self.edges)):
            object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        object.__setattr__(self, "_loc", loc)
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def locate(self, name: str) -> tuple[int, int]:
        try:
            return self._loc[name]
        except KeyError:
            raise ValueError(f"unknown vertex {name!r}") from None

    def name_of(self, color: int, rank: int) -> str:
        return self.names[color][rank]

    def has_edge(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        return Edge.canonical(a, b) in self._edge_set

    def edge_names(self, e: Edge) -> tuple[str, str]:
        return self.name_of(e.h1, e.i1), self.name_of(e.h2, e.i2)

    def selection_names(self, sel: Selection) -> tuple[str, ...]:
        return tuple(self.name_of(h, i) for h, i in enumerate(sel))


def build_graph(k: int, vertices, edge_pairs) -> ColoredGraph:
    """Validate raw parsed data and assemble a ColoredGraph.

    `vertices` is a sequence of (name, color) with 0-based colors, in file
    order (rank within a color follows listing order); `edge_pairs` is a
    sequence of (name, name).  All violations are gathered before raising.
    """
    violations = []
    if k < 1:
        violations.append(f"colors {k}: must be >= 1")
        raise GraphValidationError(violations)
    classes: list[list[str]] = [[] for _ in range(k)]
    loc: dict[str, tuple[int, int]] = {}
    for name, color in vertices:
        if not 0 <= color < k:
            violations.append(f"vertex {name}: color {color + 1} out of range 1..{k}")
            continue
        if name in loc:
            violations.append(f"vertex {name}: duplicate name")
            continue
        loc[name] = (color, len(classes[color]))
        classes[color].append(name)
    sizes = {len(c) for c in classes}
    if len(sizes) > 1 or not classes[0]:
        violations.append(
            "unequal color class sizes: " + ", ".join(str(len(c)) for c in classes)
        )
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for a, b in edge_pairs:
        if a not in loc or b not in loc:
            missing = a if a not in loc else b
            violations.append(f"edge {a} {b}: unknown vertex {missing}")
            continue
        if loc[a][0] == loc[b][0]:
            violations.append(f"edge {a} {b}: both endpoints have color {loc[a][0] + 1}")
            continue
        e = Edge.canonical(loc[a], loc[b])
        if e in seen:
            violations.append(f"edge {a} {b}: duplicate")
            continue
        seen.add(e)
        edges.append(e)
    if violations:
        raise GraphValidationError(violations)
    return ColoredGraph(k=k, n=len(classes[0]), names=tuple(tuple(c) for c in classes), edges=tuple(sorted(edges)))


def count_edges_within(g: ColoredGraph, sel: Selection) -> int:
    """Number of graph edges with both endpoints in the selection."""
    if len(sel) != g.k:
        raise ValueError(f"selection must have {g.k} ranks, got {len(sel)}")
    for h, i in enumerate(sel):
        if not 0 <= i < g.n:
            raise ValueError(f"rank {i} out of range for color {h + 1}")
    picked = [(h, i) for h, i in enumerate(sel)]
    return sum(
        1
        for a, b in itertools.combinations(picked, 2)
        if g.has_edge(a, b)
    )


def best_selection(
    g: ColoredGraph, *, state_bound: int = DEFAULT_STATE_BOUND
) -> tuple[Selection, int]:
    """Selection maximizing the internal edge count; lexicographically first on ties."""
    total = g.n**g.k
    if total > state_bound:
        raise StateBoundExceeded(total, state_bound, "selection enumeration")
    best_sel: Selection | None = None
    best_count = -1
    full = g.k * (g.k - 1) // 2
    for sel in itertools.product(range(g.n), repeat=g.k):
        c = count_edges_within(g, sel)
        if c > best_count:
            best_sel, best_count = sel, c
            if c == full:
                break
    assert best_sel is not None
    return best_sel, best_count


def find_multicolored_clique(
    g: ColoredGraph, *, state_bound: int = DEFAULT_STATE_BOUND
) -> Selection | None:
    """Lexicographically first selection forming a clique, or None."""
    sel, count = best_selection(g, state_bound=state_bound)
    return sel if count == g.k * (g.k - 1) // 2 else None


def cross_color_pairs(k: int, n: int):
    """All possible edges of a k-color, size-n graph, in canonical order."""
    for h1, h2 in itertools.combinations(range(k), 2):
        for i1 in range(n):
            for i2 in range(n):
                yield Edge(h1, i1, h2, i2)


def default_names(k: int, n: int) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(f"v{h + 1}_{i + 1}" for i in range(n)) for h in range(k))


def random_graph(k: int, n: int, p: float, rng: random.Random | int) -> ColoredGraph:
    """Each cross-color pair is drawn independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} not in [0, 1]")
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    edges = tuple(e for e in cross_color_pairs(k, n) if rng.random() < p)
    return ColoredGraph(k=k, n=n, names=default_names(k, n), edges=edges)
