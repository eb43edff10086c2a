"""Degree sequences: graphic and connected-graphic checks, witness graphs, swaps."""

from .graph import (
    Graph,
    SwapRecord,
    Variant,
    connected_components,
    degree_sequence,
    find_cycle_edge,
    is_connected,
    merge_components,
    two_swap,
)
from .oracle import enumerate_realizations, exists_connected_bruteforce, exists_graphic_bruteforce
from .realize import connect, random_rewire, realize, realize_connected
from .sequence import (
    CheckReport,
    DegreeSequence,
    Reason,
    ReductionTrace,
    Verdict,
    check_report,
    is_connected_graphic,
    is_connected_graphic_reduction,
    is_connected_realizable,
    is_graphic,
    is_graphic_fastpath,
    is_realizable,
    normalize,
    reduction_trace,
)

__version__ = "0.1.0"
