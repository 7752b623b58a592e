"""Symbol and sequence model plus the consensus-pattern objective.

A pattern instance is a weighted multiset of symbol sequences together with
a pattern length L and an optional decision budget.  The objective of a
pattern is the weighted sum, over all strings, of the best Hamming distance
between the pattern and any length-L window of the string.

Everything here is immutable after construction and indexing is 0-based
throughout.  Identical input strings are collapsed into one weighted entry
sharing a single offset; for a fixed pattern every copy has the same optimal
offset, so no optimum is lost.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Alphabet:
    """Ordered collection of distinct symbol tokens, densely numbered from 0."""

    tokens: tuple[str, ...]
    _ids: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        ids: dict[str, int] = {}
        for j, tok in enumerate(self.tokens):
            if not tok or any(c.isspace() for c in tok):
                raise ValueError(f"invalid token {tok!r}: must be non-empty without whitespace")
            if tok in ids:
                raise ValueError(f"duplicate token {tok!r}")
            ids[tok] = j
        object.__setattr__(self, "_ids", ids)

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self._ids

    def id(self, token: str) -> int:
        try:
            return self._ids[token]
        except KeyError:
            raise ValueError(f"unknown token {token!r}") from None

    def token(self, symbol: int) -> str:
        if not 0 <= symbol < len(self.tokens):
            raise ValueError(f"symbol id {symbol} out of range for alphabet of size {len(self.tokens)}")
        return self.tokens[symbol]

    def seq(self, text: str | list[str] | tuple[str, ...]) -> "Sequence":
        """Build a Sequence from whitespace-separated tokens (or a token list)."""
        toks = text.split() if isinstance(text, str) else list(text)
        return Sequence(tuple(self.id(t) for t in toks))

    def render(self, seq: "Sequence") -> str:
        return " ".join(self.token(s) for s in seq)


@dataclass(frozen=True, order=True)
class Sequence:
    """Immutable run of symbol ids; compares and sorts lexicographically."""

    symbols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)


@dataclass(frozen=True)
class WeightedString:
    """A sequence carrying a positive integer multiplicity."""

    seq: Sequence
    weight: int = 1

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError(f"weight must be >= 1, got {self.weight}")


@dataclass(frozen=True, eq=False)
class PatternInstance:
    """Weighted strings + pattern length L + optional budget.

    Equality and hashing are content-based (token spellings, weights, L,
    budget) so that an instance parsed back from its file form equals the
    original even when symbol numbering differs.
    """

    alphabet: Alphabet
    strings: tuple[WeightedString, ...]
    pattern_length: int
    budget: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "strings", tuple(self.strings))
        if self.pattern_length < 1:
            raise ValueError(f"pattern_length must be >= 1, got {self.pattern_length}")
        if self.budget is not None and self.budget < 0:
            raise ValueError(f"budget must be non-negative, got {self.budget}")
        size = len(self.alphabet)
        for idx, ws in enumerate(self.strings):
            if len(ws.seq) < self.pattern_length:
                raise ValueError(
                    f"string {idx} has length {len(ws.seq)} < pattern_length {self.pattern_length}"
                )
            for s in ws.seq:
                if not 0 <= s < size:
                    raise ValueError(f"string {idx} contains symbol id {s} outside the alphabet")

    @property
    def total_count(self) -> int:
        """Number of logical strings, counting multiplicities."""
        return sum(ws.weight for ws in self.strings)

    def _content(self):
        return (
            self.pattern_length,
            self.budget,
            tuple(
                (tuple(self.alphabet.token(s) for s in ws.seq), ws.weight)
                for ws in self.strings
            ),
        )

    def __eq__(self, other):
        if not isinstance(other, PatternInstance):
            return NotImplemented
        return self._content() == other._content()

    def __hash__(self):
        return hash(self._content())


@dataclass(frozen=True)
class Solution:
    """A candidate answer: pattern, one window offset per weighted string, claimed cost."""

    pattern: Sequence
    offsets: tuple[int, ...]
    total_cost: int

    def __post_init__(self):
        object.__setattr__(self, "offsets", tuple(self.offsets))


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking a Solution against its instance."""

    valid: bool
    recomputed_cost: int | None
    within_budget: bool | None
    problems: tuple[str, ...] = ()


def hamming(a: Sequence, b: Sequence) -> int:
    """Number of positions where two equal-length sequences differ."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a.symbols, b.symbols))


def window(s: Sequence, offset: int, length: int) -> Sequence:
    """The contiguous length-`length` slice of `s` starting at `offset`."""
    if length < 0 or offset < 0 or offset + length > len(s):
        raise ValueError(
            f"window [{offset}, {offset + length}) out of range for sequence of length {len(s)}"
        )
    return Sequence(s.symbols[offset : offset + length])


def best_offset(pattern: Sequence, s: Sequence) -> tuple[int, int]:
    """(offset, cost) minimizing Hamming distance; ties go to the smallest offset."""
    L = len(pattern)
    if len(s) < L:
        raise ValueError(f"pattern of length {L} does not fit in sequence of length {len(s)}")
    best_o, best_c = 0, L + 1
    for o in range(len(s) - L + 1):
        c = sum(p != q for p, q in zip(pattern.symbols, s.symbols[o : o + L]))
        if c < best_c:
            best_o, best_c = o, c
    return best_o, best_c


def total_cost(instance: PatternInstance, pattern: Sequence) -> int:
    """Weighted sum over strings of the best window distance to `pattern`.

    For a fixed pattern the window choices decouple per string, so this is
    the optimum over all offset tuples.
    """
    if len(pattern) != instance.pattern_length:
        raise ValueError(
            f"pattern length {len(pattern)} != instance pattern_length {instance.pattern_length}"
        )
    return sum(ws.weight * best_offset(pattern, ws.seq)[1] for ws in instance.strings)


def _column_counts(instance: PatternInstance, offsets) -> list[dict[int, int]]:
    offsets = tuple(offsets)
    if len(offsets) != len(instance.strings):
        raise ValueError(f"expected {len(instance.strings)} offsets, got {len(offsets)}")
    L = instance.pattern_length
    counts: list[dict[int, int]] = [{} for _ in range(L)]
    for idx, (ws, o) in enumerate(zip(instance.strings, offsets)):
        if not 0 <= o <= len(ws.seq) - L:
            raise ValueError(f"offset {o} out of range for string {idx}")
        for c in range(L):
            sym = ws.seq[o + c]
            counts[c][sym] = counts[c].get(sym, 0) + ws.weight
    return counts


def column_majority_pattern(instance: PatternInstance, offsets) -> Sequence:
    """Optimal pattern for fixed offsets: per-column max-weight symbol.

    Ties within a column are broken toward the smallest symbol id, giving a
    canonical representative.
    """
    counts = _column_counts(instance, offsets)
    picks = []
    for col in counts:
        top = max(col.values())
        picks.append(min(s for s, c in col.items() if c == top))
    return Sequence(tuple(picks))


def column_majority_patterns(instance: PatternInstance, offsets) -> tuple[Sequence, ...]:
    """All optimal patterns for fixed offsets (Cartesian product of column ties)."""
    counts = _column_counts(instance, offsets)
    choices = []
    for col in counts:
        top = max(col.values())
        choices.append(sorted(s for s, c in col.items() if c == top))
    return tuple(Sequence(p) for p in itertools.product(*choices))


def verify_solution(instance: PatternInstance, sol: Solution) -> VerifyReport:
    """Recheck a Solution from scratch; all failures surface in the report."""
    problems: list[str] = []
    L = instance.pattern_length
    if len(sol.pattern) != L:
        problems.append(f"pattern length {len(sol.pattern)} != {L}")
    size = len(instance.alphabet)
    if any(not 0 <= s < size for s in sol.pattern):
        problems.append("pattern contains symbol ids outside the alphabet")
    if len(sol.offsets) != len(instance.strings):
        problems.append(f"expected {len(instance.strings)} offsets, got {len(sol.offsets)}")
    else:
        for idx, (ws, o) in enumerate(zip(instance.strings, sol.offsets)):
            if not 0 <= o <= len(ws.seq) - L:
                problems.append(f"offset {o} out of range for string {idx}")

    recomputed = None
    if not problems:
        recomputed = sum(
            ws.weight * hamming(sol.pattern, window(ws.seq, o, L))
            for ws, o in zip(instance.strings, sol.offsets)
        )
        if recomputed != sol.total_cost:
            problems.append(f"claimed cost {sol.total_cost} != recomputed {recomputed}")

    within = None
    if instance.budget is not None and recomputed is not None:
        within = recomputed <= instance.budget

    return VerifyReport(
        valid=not problems,
        recomputed_cost=recomputed,
        within_budget=within,
        problems=tuple(problems),
    )
