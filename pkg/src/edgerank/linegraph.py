"""Line digraphs and the Heuchenne closure test."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple

from .centrality import DEFAULT_SOLVER, SolverConfig, edge_pagerank, node_pagerank
from .errors import GraphError
from .multigraph import Graph

__all__ = [
    "LineGraphResult",
    "HeuchenneWitness",
    "EquivalenceReport",
    "line_edge_label",
    "line_graph",
    "pagerank_linegraph_equivalence",
    "heuchenne_witnesses",
    "heuchenne_check",
]

ARROW = "→"


def line_edge_label(src: str, dst: str) -> str:
    return f"{src}{ARROW}{dst}"


@dataclass(frozen=True)
class LineGraphResult:
    graph: Graph
    provenance: Mapping[str, tuple[str, str]]

    def provenance_dict(self) -> dict:
        return {k: list(self.provenance[k]) for k in sorted(self.provenance)}


def line_graph(g: Graph) -> LineGraphResult:
    """Line digraph of ``g``.

    Nodes are the edges of ``g``; there is an arc ``ei -> ej`` whenever
    ``ei`` ends where ``ej`` starts.  The edge ``e: (u, v)`` becomes a node
    of weight ``b(u) / outdeg(u)``.  A self-loop yields a self-arc.
    """
    nodes = {e: g.weight(g.start(e)) / g.out_degree(g.start(e)) for e in g.edge_order}
    arcs = {}
    provenance = {}
    for ei in g.edge_order:
        for ej in g.out_edges(g.end(ei)):
            label = line_edge_label(ei, ej)
            arcs[label] = (ei, ej)
            provenance[label] = (ei, ej)
    return LineGraphResult(Graph(nodes, arcs), provenance)


class EquivalenceReport(NamedTuple):
    max_discrepancy: float
    worst_edge: str | None
    edge_scores: dict
    line_scores: dict


def pagerank_linegraph_equivalence(g: Graph, a: float,
                                   cfg: SolverConfig = DEFAULT_SOLVER) -> EquivalenceReport:
    """Compare Edge PageRank of ``g`` with node PageRank of its line graph."""
    edge_pr = edge_pagerank(g, a, cfg)
    line_pr = node_pagerank(line_graph(g).graph, a, cfg)
    worst, worst_edge = 0.0, None
    for e in g.edge_order:
        d = abs(edge_pr[e] - line_pr[e])
        if d > worst or worst_edge is None:
            worst, worst_edge = d, e
    return EquivalenceReport(worst, worst_edge, dict(edge_pr), dict(line_pr))


class HeuchenneWitness(NamedTuple):
    """Arcs ``(a, c)``, ``(b, c)``, ``(b, d)`` present and ``(a, d)`` absent."""
    a: str
    c: str
    b: str
    d: str


def _arc_sets(g: Graph):
    seen = set()
    for e in g.edge_order:
        pair = g.edges[e]
        if pair in seen:
            raise GraphError(f"parallel arcs {pair[0]!r} -> {pair[1]!r}; collapse them first")
        seen.add(pair)
    succ = {v: g.out_neighbors(v) for v in g.node_order}
    pred = {v: frozenset(g.start(e) for e in g.in_edges(v)) for v in g.node_order}
    return succ, pred


def heuchenne_witnesses(g: Graph) -> Iterator[HeuchenneWitness]:
    """Every violation of the line-digraph closure condition, in ascending
    ``(a, c, b, d)`` label order.

    Line digraphs never violate it, so any witness proves ``g`` is not the
    line digraph of a multigraph.  The converse is not checked.
    """
    succ, pred = _arc_sets(g)
    for a in g.node_order:
        for c in sorted(succ[a]):
            for b in sorted(pred[c] - {a}):
                for d in sorted(succ[b] - succ[a]):
                    yield HeuchenneWitness(a, c, b, d)


def heuchenne_check(g: Graph) -> HeuchenneWitness | None:
    """First closure violation, or None when the condition holds everywhere."""
    return next(heuchenne_witnesses(g), None)
