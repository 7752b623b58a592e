"""Line-oriented UTF-8 file formats.

Instance files:
    pattern_length <L>
    budget <d>                      (optional, before any string line)
    string <weight> <tok> <tok> ...

Graph files:
    colors <k>
    vertex <name> <color 1..k>      (rank within a color follows file order)
    edge <name> <name>

Solution files:
    pattern <tok> ...
    offsets <o1> <o2> ...           (one per string line, same order)
    cost <c>                        (optional)

Lines whose first non-blank character is `#` are comments.  Reduced
instances carry a `# meta key=value` sidecar block recording the graph
parameters and the symbol/vertex table; meta lines are ordinary comments to
any instance parser.  Colors and ranks are 1-based in files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliquegraph import ColoredGraph, build_graph
from .reduction import Reduction
from .stringcore import Alphabet, PatternInstance, Sequence, Solution, WeightedString


class FormatError(ValueError):
    """A file does not follow its format; message carries the line number."""


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: {what} must be an integer, got {tok!r}") from None


# ---------------------------------------------------------------------------
# instances


def parse_instance(text: str) -> PatternInstance:
    pattern_length: int | None = None
    budget: int | None = None
    rows: list[tuple[int, list[str]]] = []
    tokens: list[str] = []
    seen: set[str] = set()
    for lineno, parts in _data_lines(text):
        key = parts[0]
        if key == "pattern_length":
            if pattern_length is not None:
                raise FormatError(f"line {lineno}: repeated pattern_length")
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: pattern_length takes one value")
            pattern_length = _int(parts[1], lineno, "pattern_length")
        elif key == "budget":
            if pattern_length is None or rows:
                raise FormatError(f"line {lineno}: budget must follow pattern_length and precede strings")
            if budget is not None:
                raise FormatError(f"line {lineno}: repeated budget")
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: budget takes one value")
            budget = _int(parts[1], lineno, "budget")
        elif key == "string":
            if pattern_length is None:
                raise FormatError(f"line {lineno}: string before pattern_length")
            if len(parts) < 3:
                raise FormatError(f"line {lineno}: string needs a weight and at least one token")
            weight = _int(parts[1], lineno, "weight")
            toks = parts[2:]
            for t in toks:
                if t not in seen:
                    seen.add(t)
                    tokens.append(t)
            rows.append((weight, toks))
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")
    if pattern_length is None:
        raise FormatError("missing pattern_length line")
    if not rows:
        raise FormatError("instance has no string lines")
    alphabet = Alphabet(tuple(tokens))
    try:
        strings = tuple(
            WeightedString(alphabet.seq(toks), weight=w) for w, toks in rows
        )
        return PatternInstance(
            alphabet=alphabet,
            strings=strings,
            pattern_length=pattern_length,
            budget=budget,
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def render_instance(instance: PatternInstance, *, reduction: Reduction | None = None) -> str:
    lines: list[str] = []
    if reduction is not None:
        lines.extend(render_meta(reduction))
    lines.append(f"pattern_length {instance.pattern_length}")
    if instance.budget is not None:
        lines.append(f"budget {instance.budget}")
    for ws in instance.strings:
        lines.append(f"string {ws.weight} {instance.alphabet.render(ws.seq)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graphs


def parse_graph(text: str) -> ColoredGraph:
    k: int | None = None
    vertices: list[tuple[str, int]] = []
    edges: list[tuple[str, str]] = []
    for lineno, parts in _data_lines(text):
        key = parts[0]
        if key == "colors":
            if k is not None:
                raise FormatError(f"line {lineno}: repeated colors")
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: colors takes one value")
            k = _int(parts[1], lineno, "colors")
        elif key == "vertex":
            if k is None:
                raise FormatError(f"line {lineno}: vertex before colors")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: vertex takes a name and a color")
            color = _int(parts[2], lineno, "color")
            vertices.append((parts[1], color - 1))
        elif key == "edge":
            if k is None:
                raise FormatError(f"line {lineno}: edge before colors")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: edge takes two vertex names")
            edges.append((parts[1], parts[2]))
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")
    if k is None:
        raise FormatError("missing colors line")
    return build_graph(k, vertices, edges)


def render_graph(g: ColoredGraph) -> str:
    lines = [f"colors {g.k}"]
    for h in range(g.k):
        for i in range(g.n):
            lines.append(f"vertex {g.names[h][i]} {h + 1}")
    for e in g.edges:
        a, b = g.edge_names(e)
        lines.append(f"edge {a} {b}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# solutions


def parse_solution(text: str, instance: PatternInstance) -> Solution:
    """Parse a solution against its instance.

    A missing `cost` line is filled in from the declared pattern and offsets
    when those are usable, so the resulting claim verifies as written.
    """
    pattern: Sequence | None = None
    offsets: tuple[int, ...] | None = None
    cost: int | None = None
    for lineno, parts in _data_lines(text):
        key = parts[0]
        if key == "pattern":
            if pattern is not None:
                raise FormatError(f"line {lineno}: repeated pattern")
            try:
                pattern = instance.alphabet.seq(parts[1:])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: {exc}") from exc
        elif key == "offsets":
            if offsets is not None:
                raise FormatError(f"line {lineno}: repeated offsets")
            offsets = tuple(_int(t, lineno, "offset") for t in parts[1:])
        elif key == "cost":
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: cost takes one value")
            cost = _int(parts[1], lineno, "cost")
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")
    if pattern is None:
        raise FormatError("missing pattern line")
    if offsets is None:
        raise FormatError("missing offsets line")
    if cost is None:
        cost = _recompute_cost(instance, pattern, offsets)
    return Solution(pattern=pattern, offsets=offsets, total_cost=cost)


def _recompute_cost(instance: PatternInstance, pattern: Sequence, offsets) -> int:
    L = instance.pattern_length
    if len(pattern) != L or len(offsets) != len(instance.strings):
        return -1
    total = 0
    for ws, o in zip(instance.strings, offsets):
        if not 0 <= o <= len(ws.seq) - L:
            return -1
        total += ws.weight * sum(
            p != q for p, q in zip(pattern.symbols, ws.seq.symbols[o : o + L])
        )
    return total


def render_solution(sol: Solution, alphabet: Alphabet) -> str:
    lines = [
        f"pattern {alphabet.render(sol.pattern)}",
        "offsets " + " ".join(str(o) for o in sol.offsets),
        f"cost {sol.total_cost}",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reduction meta block


@dataclass(frozen=True)
class ReductionMeta:
    k: int
    n: int
    m: int
    multiplicity: int
    threshold: int
    dollar: str
    circ: str
    vertices: dict[str, tuple[int, int]]  # name -> (color, rank), 0-based


def render_meta(red: Reduction) -> list[str]:
    g = red.graph
    lines = [
        f"# meta k={g.k}",
        f"# meta n={g.n}",
        f"# meta m={g.m}",
        f"# meta N={red.multiplicity}",
        f"# meta threshold={red.threshold}",
        f"# meta dollar={red.instance.alphabet.token(red.dollar)}",
        f"# meta circ={red.instance.alphabet.token(red.circ)}",
    ]
    for h in range(g.k):
        for i in range(g.n):
            lines.append(f"# meta vertex.{g.names[h][i]}={h + 1},{i + 1}")
    return lines


def parse_meta(text: str) -> ReductionMeta:
    fields: dict[str, str] = {}
    vertices: dict[str, tuple[int, int]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line.startswith("# meta "):
            continue
        body = line[len("# meta ") :]
        if "=" not in body:
            raise FormatError(f"malformed meta line: {raw!r}")
        key, value = body.split("=", 1)
        if key.startswith("vertex."):
            name = key[len("vertex.") :]
            try:
                color, rank = (int(x) for x in value.split(","))
            except ValueError:
                raise FormatError(f"malformed vertex meta: {raw!r}") from None
            vertices[name] = (color - 1, rank - 1)
        else:
            fields[key] = value
    try:
        return ReductionMeta(
            k=int(fields["k"]),
            n=int(fields["n"]),
            m=int(fields["m"]),
            multiplicity=int(fields["N"]),
            threshold=int(fields["threshold"]),
            dollar=fields["dollar"],
            circ=fields["circ"],
            vertices=vertices,
        )
    except KeyError as exc:
        raise FormatError(f"meta block is missing key {exc}") from None


# ---------------------------------------------------------------------------
# path helpers


def load_instance(path) -> PatternInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def load_graph(path) -> ColoredGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def load_solution(path, instance: PatternInstance) -> Solution:
    with open(path, encoding="utf-8") as fh:
        return parse_solution(fh.read(), instance)


def dump(path, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
