"""Edge PageRank, rival edge centralities, and executable axiom checks
for labeled directed multigraphs."""

__version__ = "0.1.0"

from .errors import ClassViolation, ConvergenceError, EdgeRankError, GraphError
from .multigraph import Graph, load_graph, dump_graph
from .centrality import (
    EdgeScores,
    MeasureSpec,
    NodeScores,
    SolverConfig,
    edge_pagerank,
    node_pagerank,
    score,
)

__all__ = [
    "ClassViolation",
    "ConvergenceError",
    "EdgeRankError",
    "GraphError",
    "Graph",
    "load_graph",
    "dump_graph",
    "EdgeScores",
    "MeasureSpec",
    "NodeScores",
    "SolverConfig",
    "edge_pagerank",
    "node_pagerank",
    "score",
]
