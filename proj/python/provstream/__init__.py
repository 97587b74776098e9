"""Explainable event-stream queries with input/output lineage."""

from ._core import (
    Error,
    bench,
    explain,
    explain_graph,
    generate_log,
    parse_log,
    queries,
    run,
)

__all__ = [
    "Error",
    "bench",
    "explain",
    "explain_graph",
    "generate_log",
    "parse_log",
    "queries",
    "run",
]
