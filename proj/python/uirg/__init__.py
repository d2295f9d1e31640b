"""Upper ideal relation graphs of finite commutative rings."""

import json

from ._core import (
    GraphError,
    ParseError,
    RingError,
    catalog,
    classify,
    dot,
    enumerate_graphs,
    forbidden_line,
    graph6,
    graph_json,
    is_complement_of_line_graph,
    is_isomorphic,
    is_line_graph,
    ring_summary,
    root_graph,
)
from ._core import verify_json


def verify(theorem="all", max_order=16):
    """Run the classification check and return the report as a dict."""
    return json.loads(verify_json(theorem, max_order))


__all__ = [
    "GraphError",
    "ParseError",
    "RingError",
    "catalog",
    "classify",
    "dot",
    "enumerate_graphs",
    "forbidden_line",
    "graph6",
    "graph_json",
    "is_complement_of_line_graph",
    "is_isomorphic",
    "is_line_graph",
    "ring_summary",
    "root_graph",
    "verify",
    "verify_json",
]
