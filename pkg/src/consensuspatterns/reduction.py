"""Colored graph -> consensus-pattern instance, with machine-checkable claims.

The construction encodes a k-color, size-n graph with m edges as follows.
The alphabet holds one symbol per vertex plus two markers, written `$` and
`o`.  Every rank i yields a vertex string `$ v_1,i ... v_k,i` (length k+1)
repeated with multiplicity m(k+2)+1; every edge yields a weight-1 gadget of
length k+2 that starts `$ o` and carries its two endpoint symbols in the
slots matching their colors (slot h+2 for 0-based color h), `o` elsewhere.
The pattern length is k+1 and the decision budget is

    multiplicity * (n-1) * k  +  m*k  -  k*(k-1)/2,

which the optimum meets exactly when the graph has a multicolored clique.

Two executable claims back the construction and are exercised by the
harness: `vertex_optima_check` (the optimal patterns of the vertex strings
alone are exactly the selection-shaped patterns, at cost (n-1)k) and
`gadget_distance_check` (a selection pattern sits at distance k-1 from a
gadget when both endpoints are selected, k otherwise).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cliquegraph import ColoredGraph, Edge, Selection, best_selection
from .solvers import DEFAULT_STATE_BOUND, solve_by_pattern_enum
from .stringcore import (
    Alphabet,
    PatternInstance,
    Sequence,
    WeightedString,
    best_offset,
)

DOLLAR_TOKEN = "$"
CIRC_TOKEN = "o"


class VertexOptimaError(AssertionError):
    """The vertex-string sub-instance has unexpected optima."""


class GadgetDistanceError(AssertionError):
    """An edge gadget sits at the wrong distance from a selection pattern."""


@dataclass(frozen=True)
class Reduction:
    """A reduced instance plus everything needed to decode it."""

    graph: ColoredGraph
    instance: PatternInstance
    threshold: int
    multiplicity: int
    dollar: int
    circ: int
    vertex_symbol: dict[tuple[int, int], int]
    _symbol_vertex: dict[int, tuple[int, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_symbol_vertex", {s: v for v, s in self.vertex_symbol.items()}
        )

    @property
    def pattern_length(self) -> int:
        return self.instance.pattern_length

    def vertex_of_symbol(self, symbol: int) -> tuple[int, int] | None:
        return self._symbol_vertex.get(symbol)


@dataclass(frozen=True)
class Decoded:
    """Selection read back from a pattern, if the pattern has selection shape."""

    well_formed: bool
    selection: Selection | None


@dataclass(frozen=True)
class GadgetDistance:
    edge: Edge
    distance: int
    both_selected: bool


@dataclass(frozen=True)
class VertexOptimaResult:
    patterns: tuple[Sequence, ...]
    value: int


@dataclass(frozen=True)
class EquivalenceReport:
    """Joint outcome of the clique search and the reduced-instance solve."""

    clique: Selection | None
    optimum: int
    threshold: int
    max_edges_within: int
    equivalence_holds: bool
    formula_holds: bool
    all_optima_well_formed: bool

    @property
    def clique_exists(self) -> bool:
        return self.clique is not None

    @property
    def holds(self) -> bool:
        return self.equivalence_holds and self.formula_holds and self.all_optima_well_formed


def build_alphabet(g: ColoredGraph) -> tuple[Alphabet, int, int, dict[tuple[int, int], int]]:
    """Markers first, then vertex symbols in (color, rank) order."""
    for row in g.names:
        for name in row:
            if name in (DOLLAR_TOKEN, CIRC_TOKEN):
                raise ValueError(
                    f"vertex name {name!r} collides with a marker token; rename the vertex"
                )
    tokens = [DOLLAR_TOKEN, CIRC_TOKEN]
    vmap: dict[tuple[int, int], int] = {}
    for h in range(g.k):
        for i in range(g.n):
            vmap[(h, i)] = len(tokens)
            tokens.append(g.names[h][i])
    return Alphabet(tuple(tokens)), 0, 1, vmap


def build_vertex_string(g: ColoredGraph, rank: int) -> Sequence:
    """`$` followed by the rank-`rank` vertex of every color."""
    if not 0 <= rank < g.n:
        raise ValueError(f"rank {rank} out of range 0..{g.n - 1}")
    _, dollar, _, vmap = build_alphabet(g)
    return Sequence((dollar,) + tuple(vmap[(h, rank)] for h in range(g.k)))


def build_edge_gadget(g: ColoredGraph, j: int) -> Sequence:
    """`$ o` then one slot per color: the endpoint symbol for its color, else `o`."""
    if not 0 <= j < g.m:
        raise ValueError(f"edge index {j} out of range 0..{g.m - 1}")
    _, dollar, circ, vmap = build_alphabet(g)
    e = g.edges[j]
    slots = [dollar, circ] + [circ] * g.k
    slots[e.h1 + 2] = vmap[(e.h1, e.i1)]
    slots[e.h2 + 2] = vmap[(e.h2, e.i2)]
    return Sequence(tuple(slots))


def multiplicity_for(g: ColoredGraph) -> int:
    return g.m * (g.k + 2) + 1


def threshold_for(g: ColoredGraph) -> int:
    big = multiplicity_for(g)
    return big * (g.n - 1) * g.k + g.m * g.k - g.k * (g.k - 1) // 2


def reduce_graph(g: ColoredGraph) -> Reduction:
    """Build the full reduced instance; requires at least one edge."""
    if g.m < 1:
        raise ValueError("reduction requires a graph with at least one edge")
    alphabet, dollar, circ, vmap = build_alphabet(g)
    big = multiplicity_for(g)
    strings = [
        WeightedString(build_vertex_string(g, i), weight=big) for i in range(g.n)
    ] + [WeightedString(build_edge_gadget(g, j), weight=1) for j in range(g.m)]
    thr = threshold_for(g)
    instance = PatternInstance(
        alphabet=alphabet,
        strings=tuple(strings),
        pattern_length=g.k + 1,
        budget=thr,
    )
    return Reduction(
        graph=g,
        instance=instance,
        threshold=thr,
        multiplicity=big,
        dollar=dollar,
        circ=circ,
        vertex_symbol=vmap,
    )


def selection_pattern(red: Reduction, sel: Selection) -> Sequence:
    """The pattern `$ v_1,sel[0] ... v_k,sel[k-1]` for a selection."""
    g = red.graph
    if len(sel) != g.k or any(not 0 <= i < g.n for i in sel):
        raise ValueError(f"invalid selection {sel} for k={g.k}, n={g.n}")
    return Sequence((red.dollar,) + tuple(red.vertex_symbol[(h, i)] for h, i in enumerate(sel)))


def decode_pattern(red: Reduction, pattern: Sequence) -> Decoded:
    """Read a selection back off a pattern; malformed patterns are reported, not errors."""
    g = red.graph
    if len(pattern) != g.k + 1 or pattern[0] != red.dollar:
        return Decoded(well_formed=False, selection=None)
    ranks = []
    for h in range(g.k):
        v = red.vertex_of_symbol(pattern[h + 1])
        if v is None or v[0] != h:
            return Decoded(well_formed=False, selection=None)
        ranks.append(v[1])
    return Decoded(well_formed=True, selection=tuple(ranks))


def vertex_strings_instance(g: ColoredGraph) -> PatternInstance:
    """The n vertex strings at weight 1 over the full reduction alphabet."""
    alphabet, _, _, _ = build_alphabet(g)
    return PatternInstance(
        alphabet=alphabet,
        strings=tuple(WeightedString(build_vertex_string(g, i)) for i in range(g.n)),
        pattern_length=g.k + 1,
    )


def vertex_optima_check(
    g: ColoredGraph, *, state_bound: int = DEFAULT_STATE_BOUND
) -> VertexOptimaResult:
    """Exhaustively confirm the optima of the vertex strings alone.

    The optimal patterns must be exactly the n^k selection patterns and the
    optimal value exactly (n-1)*k.  Raises VertexOptimaError with the
    discrepancy otherwise.
    """
    sub = vertex_strings_instance(g)
    result = solve_by_pattern_enum(sub, enumerate_all_optima=True, state_bound=state_bound)
    _, dollar, _, vmap = build_alphabet(g)
    expected_value = (g.n - 1) * g.k
    expected = {
        Sequence((dollar,) + tuple(vmap[(h, sel[h])] for h in range(g.k)))
        for sel in _all_selections(g)
    }
    got = {s.pattern for s in result.solutions}
    if result.optimum != expected_value:
        raise VertexOptimaError(
            f"vertex-string optimum {result.optimum} != expected {expected_value}"
        )
    if got != expected:
        extra = sorted(got - expected)
        missing = sorted(expected - got)
        raise VertexOptimaError(
            f"vertex-string optima mismatch: {len(extra)} unexpected {extra[:3]}, "
            f"{len(missing)} missing {missing[:3]}"
        )
    return VertexOptimaResult(patterns=tuple(sorted(got)), value=result.optimum)


def _all_selections(g: ColoredGraph):
    return itertools.product(range(g.n), repeat=g.k)


def gadget_distance_check(red: Reduction, sel: Selection) -> tuple[GadgetDistance, ...]:
    """Best alignment distance of the selection pattern to every edge gadget.

    The distance must be exactly k-1 when both endpoints of the edge are
    selected and exactly k otherwise; any other value raises
    GadgetDistanceError naming the edge.
    """
    g = red.graph
    pattern = selection_pattern(red, sel)
    picked = {(h, i) for h, i in enumerate(sel)}
    results = []
    for j, e in enumerate(g.edges):
        gadget = red.instance.strings[g.n + j].seq
        _, dist = best_offset(pattern, gadget)
        both = set(e.endpoints()) <= picked
        expected = g.k - 1 if both else g.k
        if dist != expected:
            raise GadgetDistanceError(
                f"edge {j} ({'-'.join(g.edge_names(e))}): distance {dist} != {expected} "
                f"for selection {g.selection_names(sel)}"
            )
        results.append(GadgetDistance(edge=e, distance=dist, both_selected=both))
    return tuple(results)


def expected_optimum(g: ColoredGraph, max_edges_within: int) -> int:
    big = multiplicity_for(g)
    return big * (g.n - 1) * g.k + g.m * g.k - max_edges_within


def equivalence_check(
    g: ColoredGraph,
    *,
    reduction: Reduction | None = None,
    state_bound: int = DEFAULT_STATE_BOUND,
    threads: int = 1,
) -> EquivalenceReport:
    """Solve both sides and compare against the decision threshold.

    Checks three facts: the optimum is at or under the threshold exactly
    when a multicolored clique exists; the optimum equals
    multiplicity*(n-1)*k + m*k - max|E(sel)|; and every optimal pattern
    decodes to a selection.
    """
    red = reduction if reduction is not None else reduce_graph(g)
    result = solve_by_pattern_enum(
        red.instance, enumerate_all_optima=True, state_bound=state_bound, threads=threads
    )
    sel, max_within = best_selection(g, state_bound=state_bound)
    full = g.k * (g.k - 1) // 2
    clique = sel if max_within == full else None
    equivalence = (result.optimum <= red.threshold) == (clique is not None)
    formula = result.optimum == expected_optimum(g, max_within)
    well_formed = all(
        decode_pattern(red, s.pattern).well_formed for s in result.solutions
    )
    return EquivalenceReport(
        clique=clique,
        optimum=result.optimum,
        threshold=red.threshold,
        max_edges_within=max_within,
        equivalence_holds=equivalence,
        formula_holds=formula,
        all_optima_well_formed=well_formed,
    )


def validate_reduction(g: ColoredGraph, red: Reduction) -> tuple[str, ...]:
    """Recompute every structural fact of the construction from the graph.

    Returns human-readable violations; empty means the reduction is exactly
    the canonical construction for `g`.
    """
    problems: list[str] = []
    big = multiplicity_for(g)
    thr = threshold_for(g)
    inst = red.instance
    if red.multiplicity != big:
        problems.append(f"multiplicity {red.multiplicity} != m(k+2)+1 = {big}")
    if red.threshold != thr:
        problems.append(f"threshold {red.threshold} != {thr}")
    if inst.budget != thr:
        problems.append(f"instance budget {inst.budget} != threshold {thr}")
    if inst.pattern_length != g.k + 1:
        problems.append(f"pattern length {inst.pattern_length} != k+1 = {g.k + 1}")
    if len(inst.strings) != g.n + g.m:
        problems.append(f"instance has {len(inst.strings)} strings, expected {g.n + g.m}")
        return tuple(problems)

    alphabet, dollar, circ, vmap = build_alphabet(g)
    if inst.alphabet.tokens != alphabet.tokens:
        problems.append("alphabet tokens differ from the canonical construction")
        return tuple(problems)

    for i in range(g.n):
        ws = inst.strings[i]
        if ws.weight != big:
            problems.append(f"vertex string {i}: weight {ws.weight} != {big}")
        want = (dollar,) + tuple(vmap[(h, i)] for h in range(g.k))
        if ws.seq.symbols != want:
            problems.append(f"vertex string {i}: symbols {ws.seq.symbols} != {want}")
    for j, e in enumerate(g.edges):
        ws = inst.strings[g.n + j]
        if ws.weight != 1:
            problems.append(f"gadget {j}: weight {ws.weight} != 1")
        if len(ws.seq) != g.k + 2:
            problems.append(f"gadget {j}: length {len(ws.seq)} != k+2 = {g.k + 2}")
            continue
        want_slots = [dollar, circ] + [circ] * g.k
        want_slots[e.h1 + 2] = vmap[(e.h1, e.i1)]
        want_slots[e.h2 + 2] = vmap[(e.h2, e.i2)]
        if ws.seq.symbols != tuple(want_slots):
            problems.append(f"gadget {j}: symbols {ws.seq.symbols} != {tuple(want_slots)}")
    return tuple(problems)
