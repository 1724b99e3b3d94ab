"""Edge ideals of vertex-weighted oriented graphs.

Graphs are built from ``(name, weight)`` vertex pairs and ``(tail, head)`` arcs,
or parsed from the JSON document format used by the ``wo-ideal`` tool. Reports
are plain dictionaries with the same keys as the tool's JSON output.
"""

from ._core import (
    CapacityError,
    Graph,
    InternalError,
    InvalidInput,
    TimeoutError,
    census,
    classify,
    edge_ideal,
    is_chordal,
    is_unmixed,
    minimal_vertex_covers,
    oracle_verify,
    primary_decomposition,
    simplex_partition,
    simplicial_analysis,
    strong_vertex_covers,
    system_of_parameters,
)

__all__ = [
    "CapacityError",
    "Graph",
    "InternalError",
    "InvalidInput",
    "TimeoutError",
    "census",
    "classify",
    "edge_ideal",
    "is_chordal",
    "is_unmixed",
    "minimal_vertex_covers",
    "oracle_verify",
    "primary_decomposition",
    "simplex_partition",
    "simplicial_analysis",
    "strong_vertex_covers",
    "system_of_parameters",
]
