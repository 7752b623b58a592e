"""Generators and end-to-end suites tying the construction together.

A graph case passes when the reduced instance is structurally canonical,
the optimum sits at or under the threshold exactly when a multicolored
clique exists, the optimum matches the counting formula, and every optimal
pattern decodes to a selection.  The full check additionally reruns the
vertex-string and gadget-distance claims.

Exhaustive tiny families are the primary evidence (the equivalence is an
iff); seeded random families supplement them.  Deliberate mutants of the
construction live here too, so the suites can prove they are not vacuous.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .cliquegraph import (
    ColoredGraph,
    build_graph,
    cross_color_pairs,
    default_names,
    random_graph,
)
from .reduction import (
    GadgetDistanceError,
    Reduction,
    VertexOptimaError,
    equivalence_check,
    gadget_distance_check,
    reduce_graph,
    validate_reduction,
    vertex_optima_check,
)
from .solvers import DEFAULT_STATE_BOUND
from .stringcore import Alphabet, PatternInstance, Sequence, WeightedString

ReduceFn = Callable[[ColoredGraph], Reduction]

_SELECTION_SAMPLE = 32


@dataclass(frozen=True)
class GenConfig:
    """Deterministic generator settings; one seed fixes the whole stream."""

    seed: int
    k: int = 2
    n: int = 2
    p: float = 0.5
    count: int = 1


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CaseFailure:
    case_id: str
    seed: int | None
    graph_text: str
    failed_checks: tuple[str, ...]


@dataclass(frozen=True)
class SuiteReport:
    cases_run: int
    case_ids: tuple[str, ...]
    failures: tuple[CaseFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


# ---------------------------------------------------------------------------
# generators


def gen_colored_graphs(cfg: GenConfig) -> tuple[ColoredGraph, ...]:
    """`cfg.count` graphs drawn from one rng stream seeded by `cfg.seed`."""
    if cfg.k < 1 or cfg.n < 1:
        raise ValueError("k and n must be >= 1")
    if cfg.count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(cfg.seed)
    return tuple(random_graph(cfg.k, cfg.n, cfg.p, rng) for _ in range(cfg.count))


def gen_colored_graph(cfg: GenConfig) -> ColoredGraph:
    return gen_colored_graphs(cfg)[0]


_INSTANCE_TOKENS = ("a", "b", "c", "d")


def gen_random_instances(cfg: GenConfig) -> tuple[PatternInstance, ...]:
    """Tiny instances: at most 4 symbols and 4 strings, lengths <= 6, L <= 3."""
    rng = random.Random(cfg.seed)
    out = []
    for _ in range(cfg.count):
        n_sym = rng.randint(2, 4)
        alphabet = Alphabet(_INSTANCE_TOKENS[:n_sym])
        length_l = rng.randint(1, 3)
        n_strings = rng.randint(1, 4)
        strings = []
        for _ in range(n_strings):
            length = rng.randint(length_l, 6)
            seq = Sequence(tuple(rng.randrange(n_sym) for _ in range(length)))
            strings.append(WeightedString(seq, weight=rng.randint(1, 5)))
        out.append(
            PatternInstance(
                alphabet=alphabet, strings=tuple(strings), pattern_length=length_l
            )
        )
    return tuple(out)


def gen_random_instance(cfg: GenConfig) -> PatternInstance:
    return gen_random_instances(cfg)[0]


def exhaustive_graphs(k: int, n: int):
    """Every graph on the fixed k*n vertex set, one per subset of edge slots."""
    slots = tuple(cross_color_pairs(k, n))
    names = default_names(k, n)
    for mask in range(2 ** len(slots)):
        edges = tuple(e for b, e in enumerate(slots) if mask >> b & 1)
        yield ColoredGraph(k=k, n=n, names=names, edges=edges)


def demo_graph() -> ColoredGraph:
    """Six vertices in three colors with a single multicolored triangle.

    Small enough to solve by hand, rich enough to exercise every check:
    the triangle a-d-e is the unique clique, so the reduced optimum lands
    exactly on the threshold.
    """
    vertices = [("a", 0), ("b", 0), ("c", 1), ("d", 1), ("e", 2), ("f", 2)]
    edges = [("a", "c"), ("a", "d"), ("a", "e"), ("b", "c"), ("b", "e"), ("c", "f"), ("d", "e")]
    return build_graph(3, vertices, edges)


# ---------------------------------------------------------------------------
# per-graph checks


def theorem_case_check(
    g: ColoredGraph,
    *,
    reduce_fn: ReduceFn = reduce_graph,
    state_bound: int = DEFAULT_STATE_BOUND,
    threads: int = 1,
) -> tuple[Check, ...]:
    """Structure + threshold equivalence + counting formula + optima decode."""
    checks: list[Check] = []
    red = reduce_fn(g)
    problems = validate_reduction(g, red)
    checks.append(Check("structure", not problems, "; ".join(problems)))
    report = equivalence_check(g, reduction=red, state_bound=state_bound, threads=threads)
    checks.append(
        Check(
            "equivalence",
            report.equivalence_holds,
            f"optimum {report.optimum} vs threshold {report.threshold}, "
            f"clique={report.clique_exists}",
        )
    )
    checks.append(
        Check(
            "formula",
            report.formula_holds,
            f"optimum {report.optimum}, max edges within {report.max_edges_within}",
        )
    )
    checks.append(
        Check("optima-decode", report.all_optima_well_formed, "")
    )
    return tuple(checks)


def full_case_check(
    g: ColoredGraph,
    *,
    reduce_fn: ReduceFn = reduce_graph,
    state_bound: int = DEFAULT_STATE_BOUND,
    threads: int = 1,
    selection_seed: int = 0,
) -> tuple[Check, ...]:
    """Theorem checks plus the two per-claim oracles."""
    checks = list(
        theorem_case_check(g, reduce_fn=reduce_fn, state_bound=state_bound, threads=threads)
    )
    try:
        vertex_optima_check(g, state_bound=state_bound)
        checks.append(Check("vertex-optima", True))
    except VertexOptimaError as exc:
        checks.append(Check("vertex-optima", False, str(exc)))
    red = reduce_fn(g)
    try:
        for sel in _selections_to_try(g, selection_seed):
            gadget_distance_check(red, sel)
        checks.append(Check("gadget-distances", True))
    except GadgetDistanceError as exc:
        checks.append(Check("gadget-distances", False, str(exc)))
    return tuple(checks)


def _selections_to_try(g: ColoredGraph, seed: int):
    total = g.n**g.k
    if total <= _SELECTION_SAMPLE:
        yield from itertools.product(range(g.n), repeat=g.k)
        return
    rng = random.Random(seed)
    for _ in range(_SELECTION_SAMPLE):
        yield tuple(rng.randrange(g.n) for _ in range(g.k))


# ---------------------------------------------------------------------------
# suites and mutants


def run_roundtrip_suite(
    cfg: GenConfig,
    *,
    reduce_fn: ReduceFn = reduce_graph,
    state_bound: int = DEFAULT_STATE_BOUND,
) -> SuiteReport:
    """Full check over `cfg.count` generated graphs; edgeless draws are skipped.

    Failures carry the serialized graph so any case can be replayed through
    the command-line `roundtrip`.
    """
    from .formats import render_graph

    graphs = gen_colored_graphs(cfg)
    case_ids: list[str] = []
    failures: list[CaseFailure] = []
    for idx, g in enumerate(graphs):
        if g.m < 1:
            continue
        cid = f"g{idx:04d}"
        case_ids.append(cid)
        checks = full_case_check(g, reduce_fn=reduce_fn, state_bound=state_bound)
        failed = tuple(c.name for c in checks if not c.passed)
        if failed:
            failures.append(
                CaseFailure(
                    case_id=cid,
                    seed=cfg.seed,
                    graph_text=render_graph(g),
                    failed_checks=failed,
                )
            )
    return SuiteReport(
        cases_run=len(case_ids), case_ids=tuple(case_ids), failures=tuple(failures)
    )


def format_suite_report(report: SuiteReport) -> str:
    """`case <id> pass|fail` lines followed by a `summary <pass> <fail>` line."""
    failed_ids = {f.case_id for f in report.failures}
    lines = [
        f"case {cid} {'fail' if cid in failed_ids else 'pass'}"
        for cid in sorted(report.case_ids)
    ]
    lines.append(f"summary {report.cases_run - len(report.failures)} {len(report.failures)}")
    return "\n".join(lines) + "\n"


def _mutant_low_multiplicity(g: ColoredGraph) -> Reduction:
    # one copy short of the safe multiplicity, with everything downstream consistent
    red = reduce_graph(g)
    low = red.multiplicity - 1
    thr = low * (g.n - 1) * g.k + g.m * g.k - g.k * (g.k - 1) // 2
    strings = tuple(
        dataclasses.replace(ws, weight=low) if i < g.n else ws
        for i, ws in enumerate(red.instance.strings)
    )
    instance = PatternInstance(
        alphabet=red.instance.alphabet,
        strings=strings,
        pattern_length=red.instance.pattern_length,
        budget=thr,
    )
    return dataclasses.replace(
        red, instance=instance, threshold=thr, multiplicity=low
    )


def _mutant_threshold_off_by_one(g: ColoredGraph) -> Reduction:
    red = reduce_graph(g)
    instance = PatternInstance(
        alphabet=red.instance.alphabet,
        strings=red.instance.strings,
        pattern_length=red.instance.pattern_length,
        budget=red.threshold + 1,
    )
    return dataclasses.replace(red, instance=instance, threshold=red.threshold + 1)


def _mutant_gadget_slot_shift(g: ColoredGraph) -> Reduction:
    # endpoint symbols land one slot early (slot h+1 instead of h+2)
    red = reduce_graph(g)
    strings = list(red.instance.strings)
    for j, e in enumerate(g.edges):
        slots = [red.dollar, red.circ] + [red.circ] * g.k
        slots[e.h1 + 1] = red.vertex_symbol[(e.h1, e.i1)]
        slots[e.h2 + 1] = red.vertex_symbol[(e.h2, e.i2)]
        strings[g.n + j] = WeightedString(Sequence(tuple(slots)), weight=1)
    instance = PatternInstance(
        alphabet=red.instance.alphabet,
        strings=tuple(strings),
        pattern_length=red.instance.pattern_length,
        budget=red.instance.budget,
    )
    return dataclasses.replace(red, instance=instance)


MUTATIONS: dict[str, ReduceFn] = {
    "low-multiplicity": _mutant_low_multiplicity,
    "threshold-off-by-one": _mutant_threshold_off_by_one,
    "gadget-slot-shift": _mutant_gadget_slot_shift,
}
