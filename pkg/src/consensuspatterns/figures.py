"""Figure rendering for the report path.

Two views: the colored graph with the found clique highlighted, and the
alignment of a pattern against every input string with matching cells
shaded.  Figures always go to files; stdout stays machine-parseable.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .cliquegraph import ColoredGraph, Selection
from .stringcore import PatternInstance, Solution

_CLASS_COLORS = ("#e57373", "#64b5f6", "#ffd54f", "#81c784", "#ba68c8", "#4db6ac")


def _layout(g: ColoredGraph) -> dict[tuple[int, int], tuple[float, float]]:
    pos = {}
    for h in range(g.k):
        base = 2 * math.pi * h / g.k
        for i in range(g.n):
            # fan the class members around the class direction
            ang = base + (i - (g.n - 1) / 2) * (0.8 / max(g.n, 2))
            r = 1.0 + 0.15 * (i % 2)
            pos[(h, i)] = (r * math.cos(ang), r * math.sin(ang))
    return pos


def save_graph_figure(g: ColoredGraph, selection: Selection | None, path) -> None:
    """Draw the colored graph; a selection highlights its internal edges."""
    pos = _layout(g)
    picked = set(enumerate(selection)) if selection is not None else set()
    fig, ax = plt.subplots(figsize=(5, 5))
    for e in g.edges:
        (x1, y1), (x2, y2) = pos[(e.h1, e.i1)], pos[(e.h2, e.i2)]
        internal = {(e.h1, e.i1), (e.h2, e.i2)} <= picked
        ax.plot(
            [x1, x2],
            [y1, y2],
            color="#d32f2f" if internal else "#9e9e9e",
            linewidth=2.5 if internal else 1.0,
            zorder=1,
        )
    for h in range(g.k):
        color = _CLASS_COLORS[h % len(_CLASS_COLORS)]
        for i in range(g.n):
            x, y = pos[(h, i)]
            edge_color = "black" if (h, i) in picked else color
            ax.scatter([x], [y], s=600, color=color, edgecolors=edge_color,
                       linewidths=2.0, zorder=2)
            ax.annotate(g.names[h][i], (x, y), ha="center", va="center", zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")
    title = "colored graph"
    if selection is not None:
        title += "  (clique: " + " ".join(g.selection_names(selection)) + ")"
    ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def save_alignment_figure(instance: PatternInstance, sol: Solution, path) -> None:
    """Token grid of the pattern over every string at its chosen offset."""
    alphabet = instance.alphabet
    L = instance.pattern_length
    width = max(len(ws.seq) for ws in instance.strings) + 1
    rows = len(instance.strings) + 1
    fig, ax = plt.subplots(figsize=(0.6 * width + 1.6, 0.45 * rows + 1.0))

    def cell(row, col, text, shade=None):
        y = rows - 1 - row
        if shade:
            ax.add_patch(plt.Rectangle((col - 0.5, y - 0.5), 1, 1, color=shade, zorder=1))
        ax.text(col, y, text, ha="center", va="center", zorder=2, fontsize=10)

    cell(0, -1, "pattern")
    for c, s in enumerate(sol.pattern):
        cell(0, c, alphabet.token(s), shade="#e3f2fd")
    for r, (ws, off) in enumerate(zip(instance.strings, sol.offsets), start=1):
        label = f"x{ws.weight}" if ws.weight > 1 else ""
        cell(r, -1, label)
        for c, s in enumerate(ws.seq):
            in_window = off <= c < off + L
            match = in_window and sol.pattern[c - off] == s
            shade = "#c8e6c9" if match else ("#fff9c4" if in_window else None)
            cell(r, c, alphabet.token(s), shade=shade)
    ax.set_xlim(-1.6, width - 0.4)
    ax.set_ylim(-0.6, rows - 0.4)
    ax.axis("off")
    ax.set_title(f"alignment, total cost {sol.total_cost}")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
