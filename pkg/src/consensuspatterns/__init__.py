"""Exact consensus-pattern solving with a colored-clique instance generator.

The library finds, for a weighted multiset of strings and a pattern length
L, the length-L pattern minimizing the weighted sum of best-window Hamming
distances.  It also builds hard instances from multicolored-clique graphs
and ships an executable harness that rechecks the construction end to end.
"""

from .cliquegraph import (
    ColoredGraph,
    Edge,
    GraphValidationError,
    best_selection,
    build_graph,
    count_edges_within,
    find_multicolored_clique,
    random_graph,
)
from .errors import StateBoundExceeded
from .harness import GenConfig, demo_graph, exhaustive_graphs, run_roundtrip_suite
from .reduction import (
    Reduction,
    decode_pattern,
    equivalence_check,
    gadget_distance_check,
    reduce_graph,
    selection_pattern,
    validate_reduction,
    vertex_optima_check,
)
from .solvers import (
    DEFAULT_STATE_BOUND,
    SolveResult,
    SolverChoice,
    cross_check,
    solve,
    solve_by_offset_enum,
    solve_by_pattern_enum,
)
from .stringcore import (
    Alphabet,
    PatternInstance,
    Sequence,
    Solution,
    WeightedString,
    best_offset,
    column_majority_pattern,
    column_majority_patterns,
    hamming,
    total_cost,
    verify_solution,
    window,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "ColoredGraph",
    "DEFAULT_STATE_BOUND",
    "Edge",
    "GenConfig",
    "GraphValidationError",
    "PatternInstance",
    "Reduction",
    "Sequence",
    "Solution",
    "SolveResult",
    "SolverChoice",
    "StateBoundExceeded",
    "WeightedString",
    "best_offset",
    "best_selection",
    "build_graph",
    "column_majority_pattern",
    "column_majority_patterns",
    "count_edges_within",
    "cross_check",
    "decode_pattern",
    "demo_graph",
    "equivalence_check",
    "exhaustive_graphs",
    "find_multicolored_clique",
    "gadget_distance_check",
    "hamming",
    "random_graph",
    "reduce_graph",
    "run_roundtrip_suite",
    "selection_pattern",
    "solve",
    "solve_by_offset_enum",
    "solve_by_pattern_enum",
    "total_cost",
    "validate_reduction",
    "verify_solution",
    "vertex_optima_check",
    "window",
]
