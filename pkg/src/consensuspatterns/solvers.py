"""Two independent exact solvers for the consensus-pattern objective.

`solve_by_pattern_enum` scans every candidate pattern over the alphabet and
scores it with per-string best windows.  `solve_by_offset_enum` scans every
tuple of window offsets and builds the column-majority pattern for each.
The two take entirely different routes to the optimum and serve as mutual
oracles: on any instance within both state bounds their optima must agree.

Both are deterministic: the single-witness result is the lexicographically
smallest optimal pattern (by symbol id), regardless of chunking or worker
count.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import StateBoundExceeded
from .stringcore import PatternInstance, Sequence, Solution, best_offset

DEFAULT_STATE_BOUND = 10**8

_CHUNK = 1 << 15

_KINDS = ("pattern-enum", "offset-enum")


@dataclass(frozen=True)
class SolverChoice:
    kind: str = "pattern-enum"
    enumerate_all_optima: bool = False

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown solver kind {self.kind!r}; expected one of {_KINDS}")


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    solutions: tuple[Solution, ...]
    states_explored: int


@dataclass(frozen=True)
class CrossCheck:
    agree: bool
    pattern_enum_optimum: int
    offset_enum_optimum: int


def _require_nonempty(instance: PatternInstance):
    if not instance.strings:
        raise ValueError("cannot solve an empty instance")


def _witness(instance: PatternInstance, pattern: Sequence, optimum: int) -> Solution:
    offsets = tuple(best_offset(pattern, ws.seq)[0] for ws in instance.strings)
    return Solution(pattern=pattern, offsets=offsets, total_cost=optimum)


def _windows(instance: PatternInstance) -> list[tuple[int, list[tuple[int, ...]]]]:
    """Per string: (weight, list of length-L windows, one per offset)."""
    L = instance.pattern_length
    out = []
    for ws in instance.strings:
        wins = [ws.seq.symbols[o : o + L] for o in range(len(ws.seq) - L + 1)]
        out.append((ws.weight, wins))
    return out


# ---------------------------------------------------------------------------
# pattern enumeration


def _pattern_block(n_symbols: int, length: int, start: int, stop: int) -> np.ndarray:
    """Patterns with flat indices [start, stop) in lexicographic order, one per row."""
    idx = np.arange(start, stop, dtype=np.int64)
    block = np.empty((stop - start, length), dtype=np.int16)
    for pos in range(length):
        stride = n_symbols ** (length - 1 - pos)
        block[:, pos] = (idx // stride) % n_symbols
    return block


def _score_block(block: np.ndarray, windows) -> np.ndarray:
    total = np.zeros(block.shape[0], dtype=np.int64)
    for weight, wins in windows:
        per = [np.count_nonzero(block != np.asarray(w, dtype=np.int16), axis=1) for w in wins]
        best = per[0] if len(per) == 1 else np.minimum.reduce(per)
        total += weight * best.astype(np.int64)
    return total


def _scan_chunk(args):
    n_symbols, length, start, stop, windows, collect_all = args
    block = _pattern_block(n_symbols, length, start, stop)
    costs = _score_block(block, windows)
    cmin = int(costs.min())
    if collect_all:
        rows = np.flatnonzero(costs == cmin)
        pats = [tuple(int(v) for v in block[r]) for r in rows]
    else:
        r = int(np.argmin(costs))
        pats = [tuple(int(v) for v in block[r])]
    return cmin, pats


def solve_by_pattern_enum(
    instance: PatternInstance,
    *,
    enumerate_all_optima: bool = False,
    prune: bool = False,
    state_bound: int = DEFAULT_STATE_BOUND,
    threads: int = 1,
) -> SolveResult:
    """Exhaustive minimization over all |alphabet|^L candidate patterns.

    With `prune` set, a depth-first search discards partial patterns whose
    partial cost already exceeds the incumbent; the optimum is unchanged.
    """
    _require_nonempty(instance)
    A = len(instance.alphabet)
    L = instance.pattern_length
    n_patterns = A**L
    if n_patterns > state_bound:
        raise StateBoundExceeded(n_patterns, state_bound, "pattern enumeration")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")

    if prune:
        return _solve_pattern_dfs(instance, enumerate_all_optima)

    windows = _windows(instance)
    spans = [(s, min(s + _CHUNK, n_patterns)) for s in range(0, n_patterns, _CHUNK)]
    jobs = [(A, L, s, e, windows, enumerate_all_optima) for s, e in spans]
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_chunk, jobs))
    else:
        results = [_scan_chunk(j) for j in jobs]

    # merge by (cost, pattern): chunks cover disjoint lexicographic ranges
    optimum = min(c for c, _ in results)
    pats: list[tuple[int, ...]] = []
    for c, chunk_pats in results:
        if c == optimum:
            pats.extend(chunk_pats)
    pats.sort()
    if not enumerate_all_optima:
        pats = pats[:1]
    solutions = tuple(_witness(instance, Sequence(p), optimum) for p in pats)
    return SolveResult(optimum=optimum, solutions=solutions, states_explored=n_patterns)


def _solve_pattern_dfs(instance: PatternInstance, enumerate_all: bool) -> SolveResult:
    A = len(instance.alphabet)
    L = instance.pattern_length
    windows = _windows(instance)
    # mism[i][o]: mismatches of the current prefix against window o of string i
    mism = [[0] * len(wins) for _, wins in windows]

    best = math.inf
    optima: list[tuple[int, ...]] = []
    prefix = [0] * L
    explored = 0

    def bound() -> int:
        return sum(w * min(m) for (w, _), m in zip(windows, mism))

    def descend(depth: int):
        nonlocal best, explored
        explored += 1
        if depth == L:
            cost = bound()
            if cost < best:
                best = cost
                optima.clear()
                optima.append(tuple(prefix))
            elif cost == best and enumerate_all:
                optima.append(tuple(prefix))
            return
        for sym in range(A):
            prefix[depth] = sym
            for (_, wins), m in zip(windows, mism):
                for o, w in enumerate(wins):
                    if w[depth] != sym:
                        m[o] += 1
            b = bound()
            keep = b < best or (b == best and (enumerate_all or not optima))
            if keep:
                descend(depth + 1)
            for (_, wins), m in zip(windows, mism):
                for o, w in enumerate(wins):
                    if w[depth] != sym:
                        m[o] -= 1

    descend(0)
    optima.sort()
    solutions = tuple(_witness(instance, Sequence(p), int(best)) for p in optima)
    return SolveResult(optimum=int(best), solutions=solutions, states_explored=explored)


# ---------------------------------------------------------------------------
# offset enumeration


def _tuple_counts(windows, weights, length: int, tup) -> list[dict[int, int]]:
    counts: list[dict[int, int]] = [{} for _ in range(length)]
    for wins, w, o in zip(windows, weights, tup):
        win = wins[o]
        for c in range(length):
            col = counts[c]
            col[win[c]] = col.get(win[c], 0) + w
    return counts


def solve_by_offset_enum(
    instance: PatternInstance,
    *,
    enumerate_all_optima: bool = False,
    state_bound: int = DEFAULT_STATE_BOUND,
) -> SolveResult:
    """Exhaustive minimization over window-offset tuples.

    For each tuple the optimal pattern is the per-column weighted majority,
    computed in O(L * strings) from column counts.  The optima over all
    tuples are exactly the globally optimal patterns.
    """
    _require_nonempty(instance)
    L = instance.pattern_length
    ranges = [len(ws.seq) - L + 1 for ws in instance.strings]
    n_tuples = math.prod(ranges)
    if n_tuples > state_bound:
        raise StateBoundExceeded(n_tuples, state_bound, "offset enumeration")

    weights = [ws.weight for ws in instance.strings]
    total_weight = sum(weights)
    windows = [
        [ws.seq.symbols[o : o + L] for o in range(r)]
        for ws, r in zip(instance.strings, ranges)
    ]

    best: int | None = None
    best_pattern: tuple[int, ...] | None = None
    best_tuples: list[tuple[int, ...]] = []

    for tup in itertools.product(*(range(r) for r in ranges)):
        counts = _tuple_counts(windows, weights, L, tup)
        tops = [max(col.values()) for col in counts]
        cost = total_weight * L - sum(tops)
        if best is not None and cost > best:
            continue
        canonical = tuple(
            min(s for s, n in col.items() if n == top)
            for col, top in zip(counts, tops)
        )
        if best is None or cost < best:
            best = cost
            best_pattern = canonical
            best_tuples = [tup]
        else:
            best_tuples.append(tup)
            if canonical < best_pattern:
                best_pattern = canonical

    assert best is not None and best_pattern is not None
    if enumerate_all_optima:
        pats: set[tuple[int, ...]] = set()
        for tup in best_tuples:
            counts = _tuple_counts(windows, weights, L, tup)
            choices = []
            for col in counts:
                top = max(col.values())
                choices.append(sorted(s for s, n in col.items() if n == top))
            pats.update(itertools.product(*choices))
        ordered = sorted(pats)
    else:
        ordered = [best_pattern]
    solutions = tuple(_witness(instance, Sequence(p), best) for p in ordered)
    return SolveResult(optimum=best, solutions=solutions, states_explored=n_tuples)


def solve(instance: PatternInstance, choice: SolverChoice, **kwargs) -> SolveResult:
    """Dispatch to the solver named by `choice.kind`."""
    if choice.kind == "pattern-enum":
        return solve_by_pattern_enum(
            instance, enumerate_all_optima=choice.enumerate_all_optima, **kwargs
        )
    return solve_by_offset_enum(
        instance, enumerate_all_optima=choice.enumerate_all_optima, **kwargs
    )


def cross_check(instance: PatternInstance, *, state_bound: int = DEFAULT_STATE_BOUND) -> CrossCheck:
    """Run both solvers and compare optima (witnesses may differ)."""
    a = solve_by_pattern_enum(instance, state_bound=state_bound)
    b = solve_by_offset_enum(instance, state_bound=state_bound)
    return CrossCheck(
        agree=a.optimum == b.optimum,
        pattern_enum_optimum=a.optimum,
        offset_enum_optimum=b.optimum,
    )
