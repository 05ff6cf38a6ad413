"""Centrality distances and dynamic signatures of temporal graphs."""

from ._core import (
    ConvergenceError,
    DataError,
    Snapshot,
    Trace,
    centrality,
    centrality_distance,
    chronogram,
    ged,
    generate,
    parse_edge_list,
    signature,
)

CENTRALITIES = ("DC", "BC", "EC", "CC", "PC", "KC")

__all__ = [
    "CENTRALITIES",
    "ConvergenceError",
    "DataError",
    "Snapshot",
    "Trace",
    "centrality",
    "centrality_distance",
    "chronogram",
    "ged",
    "generate",
    "parse_edge_list",
    "signature",
]
