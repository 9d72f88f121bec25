"""Labeled directed multigraphs with node weights.

A graph holds a set of node labels with non-negative weights and a set of
edge labels, each mapped to an ordered ``(start, end)`` pair.  Parallel edges
and self-loops are allowed; because every edge carries its own label, two
edges between the same pair of nodes are still distinct objects.

Graphs are immutable.  Every transformation below returns a fresh graph and
leaves its input untouched.
"""
from __future__ import annotations

import enum
import json
import math
from collections import defaultdict, deque
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

import jsonschema

from .errors import GraphError

__all__ = [
    "Graph",
    "Violation",
    "NodeRole",
    "EdgeRole",
    "OutTwinWitness",
    "validate",
    "ensure_valid",
    "incident_edges",
    "successors",
    "classify",
    "out_twin_witness",
    "graph_sum",
    "redirect",
    "delete_node",
    "delete_edge",
    "set_weight",
    "add_node",
    "add_edge",
    "swap_ends",
    "replicate_edge",
    "collapse_parallel",
    "fresh_label",
    "graph_from_dict",
    "graph_to_dict",
    "load_graph",
    "dump_graph",
]


class Graph:
    """Immutable directed multigraph ``(V, E, phi, b)``.

    Parameters
    ----------
    nodes : mapping of node label to weight
    edges : mapping of edge label to ``(start, end)``

    The constructor does not check invariants, so that :func:`validate` can
    report on malformed input.  Use :func:`ensure_valid` or the JSON loader
    when the input is untrusted.
    """

    def __init__(self, nodes: Mapping[str, float] | None = None,
                 edges: Mapping[str, tuple[str, str]] | None = None):
        self._nodes = {v: float(w) for v, w in (nodes or {}).items()}
        self._edges = {e: (s, t) for e, (s, t) in (edges or {}).items()}

    @property
    def nodes(self) -> Mapping[str, float]:
        return MappingProxyType(self._nodes)

    @property
    def edges(self) -> Mapping[str, tuple[str, str]]:
        return MappingProxyType(self._edges)

    def weight(self, v: str) -> float:
        return self._nodes[v]

    def start(self, e: str) -> str:
        return self._edges[e][0]

    def end(self, e: str) -> str:
        return self._edges[e][1]

    @cached_property
    def node_order(self) -> tuple[str, ...]:
        return tuple(sorted(self._nodes))

    @cached_property
    def edge_order(self) -> tuple[str, ...]:
        return tuple(sorted(self._edges))

    @cached_property
    def _adjacency(self):
        out = defaultdict(list)
        inc = defaultdict(list)
        for e in self.edge_order:
            s, t = self._edges[e]
            out[s].append(e)
            inc[t].append(e)
        return ({v: tuple(es) for v, es in out.items()},
                {v: tuple(es) for v, es in inc.items()})

    def out_edges(self, v: str) -> tuple[str, ...]:
        """Outgoing edges of ``v`` in label order."""
        return self._adjacency[0].get(v, ())

    def in_edges(self, v: str) -> tuple[str, ...]:
        """Incoming edges of ``v`` in label order."""
        return self._adjacency[1].get(v, ())

    def out_degree(self, v: str) -> int:
        return len(self.out_edges(v))

    def in_degree(self, v: str) -> int:
        return len(self.in_edges(v))

    def out_neighbors(self, v: str) -> frozenset[str]:
        """Distinct end nodes of the out-edges of ``v``."""
        return frozenset(self._edges[e][1] for e in self.out_edges(v))

    def total_weight(self) -> float:
        return math.fsum(self._nodes.values())

    def __contains__(self, label) -> bool:
        return label in self._nodes or label in self._edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    def __hash__(self):
        return hash((frozenset(self._nodes.items()), frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self._nodes)}, |E|={len(self._edges)})"


class Violation(NamedTuple):
    label: str
    reason: str


class NodeRole(enum.Enum):
    SINK = "sink"
    ISOLATED = "isolated"
    ORDINARY = "ordinary"


class EdgeRole(enum.Enum):
    SOURCE_EDGE = "source-edge"
    ISOLATED_EDGE = "isolated-edge"
    ORDINARY = "ordinary"


class OutTwinWitness(NamedTuple):
    """Pairing of the out-edges of two out-twins ``u`` and ``w``.

    ``pairs`` holds ``(edge of u, edge of w)`` tuples with equal end nodes.
    """
    u: str
    w: str
    pairs: tuple[tuple[str, str], ...]

    def partner(self, e: str) -> str:
        """The edge paired with ``e`` (on either side)."""
        for a, b in self.pairs:
            if a == e:
                return b
            if b == e:
                return a
        raise KeyError(e)


def validate(g: Graph) -> Violation | None:
    """Return the first violated graph invariant, or None if ``g`` is valid."""
    for v in sorted(g.nodes, key=str):
        if not isinstance(v, str):
            return Violation(str(v), "node label is not a string")
        w = g.nodes[v]
        if not math.isfinite(w):
            return Violation(v, "non-finite weight")
        if w < 0:
            return Violation(v, "negative weight")
    for e in sorted(g.edges, key=str):
        if not isinstance(e, str):
            return Violation(str(e), "edge label is not a string")
        s, t = g.edges[e]
        if s not in g.nodes or t not in g.nodes:
            return Violation(e, "dangling endpoint")
    return None


def ensure_valid(g: Graph) -> Graph:
    bad = validate(g)
    if bad is not None:
        raise GraphError(f"invalid graph: {bad.label}: {bad.reason}")
    return g


def _need_node(g: Graph, v: str) -> None:
    if v not in g.nodes:
        raise GraphError(f"unknown node {v!r}")


def _need_edge(g: Graph, e: str) -> None:
    if e not in g.edges:
        raise GraphError(f"unknown edge {e!r}")


def incident_edges(g: Graph, v: str, direction: str = "both") -> frozenset[str]:
    """Incoming, outgoing or all edges touching ``v``.

    A self-loop on ``v`` is both incoming and outgoing.
    """
    _need_node(g, v)
    if direction == "in":
        return frozenset(g.in_edges(v))
    if direction == "out":
        return frozenset(g.out_edges(v))
    if direction == "both":
        return frozenset(g.in_edges(v)) | frozenset(g.out_edges(v))
    raise ValueError(f"direction must be 'in', 'out' or 'both', not {direction!r}")


def successors(g: Graph, u: str) -> frozenset[str]:
    """Nodes reachable from ``u`` by a nonempty path.

    ``u`` itself is included only when it lies on a cycle.
    """
    _need_node(g, u)
    seen: set[str] = set()
    queue = deque(g.end(e) for e in g.out_edges(u))
    while queue:
        v = queue.popleft()
        if v in seen:
            continue
        seen.add(v)
        queue.extend(g.end(e) for e in g.out_edges(v))
    return frozenset(seen)


def node_role(g: Graph, v: str) -> NodeRole:
    _need_node(g, v)
    if g.out_degree(v):
        return NodeRole.ORDINARY
    return NodeRole.SINK if g.in_degree(v) else NodeRole.ISOLATED


def edge_role(g: Graph, e: str) -> EdgeRole:
    _need_edge(g, e)
    u, v = g.edges[e]
    # a self-loop is incoming to its start, so it is never a source edge
    if u == v or g.in_degree(u) or g.out_degree(u) != 1:
        return EdgeRole.ORDINARY
    if g.in_degree(v) == 1 and g.out_degree(v) == 0:
        return EdgeRole.ISOLATED_EDGE
    return EdgeRole.SOURCE_EDGE


def classify(g: Graph, x: str) -> NodeRole | EdgeRole:
    """Role of a node or an edge.  Returns the most specific role, so an
    isolated node reports ``ISOLATED`` rather than ``SINK``."""
    if x in g.nodes and x in g.edges:
        raise GraphError(f"label {x!r} names both a node and an edge")
    if x in g.nodes:
        return node_role(g, x)
    if x in g.edges:
        return edge_role(g, x)
    raise GraphError(f"unknown label {x!r}")


def out_twin_witness(g: Graph, u: str, w: str) -> OutTwinWitness | None:
    """Bijection between the out-edges of ``u`` and ``w`` preserving ends.

    Returns None when the end-node multisets differ.  Within each end node,
    edges are matched in ascending label order.
    """
    _need_node(g, u)
    _need_node(g, w)
    if u == w:
        raise GraphError("out-twins must be distinct nodes")
    by_end_u = defaultdict(list)
    by_end_w = defaultdict(list)
    for e in g.out_edges(u):
        by_end_u[g.end(e)].append(e)
    for e in g.out_edges(w):
        by_end_w[g.end(e)].append(e)
    if {k: len(v) for k, v in by_end_u.items()} != {k: len(v) for k, v in by_end_w.items()}:
        return None
    pairs = []
    for end in sorted(by_end_u):
        pairs.extend(zip(by_end_u[end], by_end_w[end]))
    return OutTwinWitness(u, w, tuple(pairs))


def graph_sum(g: Graph, h: Graph) -> Graph:
    """Union of two graphs with disjoint node and edge labels."""
    clash = set(g.nodes) & set(h.nodes)
    if clash:
        raise GraphError(f"node label collision: {sorted(clash)[0]!r}")
    clash = set(g.edges) & set(h.edges)
    if clash:
        raise GraphError(f"edge label collision: {sorted(clash)[0]!r}")
    return Graph({**g.nodes, **h.nodes}, {**g.edges, **h.edges})


def redirect(g: Graph, u: str, v: str) -> Graph:
    """Redirect node ``u`` into ``v``.

    ``u`` and all its out-edges disappear (a self-loop on ``u`` included),
    every remaining edge that ended at ``u`` now ends at ``v``, and ``v``
    absorbs the weight of ``u``.
    """
    _need_node(g, u)
    _need_node(g, v)
    if u == v:
        raise GraphError("cannot redirect a node into itself")
    nodes = {x: w for x, w in g.nodes.items() if x != u}
    nodes[v] = g.weight(u) + g.weight(v)
    edges = {}
    for e, (s, t) in g.edges.items():
        if s == u:
            continue
        edges[e] = (s, v if t == u else t)
    return Graph(nodes, edges)


def delete_node(g: Graph, u: str) -> Graph:
    """Remove a node with no incident edges."""
    _need_node(g, u)
    if g.in_degree(u) or g.out_degree(u):
        raise GraphError(f"node {u!r} has incident edges; delete them first")
    return Graph({x: w for x, w in g.nodes.items() if x != u}, g.edges)


def delete_edge(g: Graph, e: str) -> Graph:
    _need_edge(g, e)
    return Graph(g.nodes, {x: p for x, p in g.edges.items() if x != e})


def set_weight(g: Graph, v: str, x: float) -> Graph:
    _need_node(g, v)
    if not x >= 0:
        raise GraphError(f"weight must be non-negative, got {x}")
    return Graph({**g.nodes, v: x}, g.edges)


def add_node(g: Graph, v: str, weight: float = 0.0) -> Graph:
    if v in g.nodes:
        raise GraphError(f"node label collision: {v!r}")
    if not weight >= 0:
        raise GraphError(f"weight must be non-negative, got {weight}")
    return Graph({**g.nodes, v: weight}, g.edges)


def add_edge(g: Graph, e: str, u: str, v: str) -> Graph:
    if e in g.edges:
        raise GraphError(f"edge label collision: {e!r}")
    _need_node(g, u)
    _need_node(g, v)
    return Graph(g.nodes, {**g.edges, e: (u, v)})


def swap_ends(g: Graph, e1: str, e2: str) -> Graph:
    """Exchange the end nodes of two edges, keeping their starts."""
    _need_edge(g, e1)
    _need_edge(g, e2)
    if e1 == e2:
        raise GraphError("swap_ends needs two distinct edges")
    (u1, v1), (u2, v2) = g.edges[e1], g.edges[e2]
    return Graph(g.nodes, {**g.edges, e1: (u1, v2), e2: (u2, v1)})


def fresh_label(taken: Iterable[str], base: str) -> str:
    """First label of the form ``base``, ``base~1``, ``base~2``... not in ``taken``."""
    taken = set(taken)
    if base not in taken:
        return base
    i = 1
    while f"{base}~{i}" in taken:
        i += 1
    return f"{base}~{i}"


def replicate_edge(g: Graph, e: str, k: int) -> Graph:
    """Add ``k - 1`` parallel copies of ``e`` under fresh labels."""
    _need_edge(g, e)
    if k < 1:
        raise GraphError(f"replication count must be >= 1, got {k}")
    edges = dict(g.edges)
    for _ in range(k - 1):
        edges[fresh_label(edges, e)] = g.edges[e]
    return Graph(g.nodes, edges)


def collapse_parallel(g: Graph, e: str) -> Graph:
    """Keep ``e`` as the only out-edge of its start.

    Requires every out-edge of the start of ``e`` to be a parallel copy of
    ``e`` (same end node).
    """
    _need_edge(g, e)
    u, v = g.edges[e]
    if any(g.end(x) != v for x in g.out_edges(u)):
        raise GraphError(f"out-edges of {u!r} do not all end at {v!r}")
    drop = set(g.out_edges(u)) - {e}
    return Graph(g.nodes, {x: p for x, p in g.edges.items() if x not in drop})


# --- JSON document -------------------------------------------------------

GRAPH_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["nodes", "edges"],
    "properties": {
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "weight"],
                "properties": {
                    "id": {"type": "string"},
                    "weight": {"type": "number", "minimum": 0},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "from", "to"],
                "properties": {
                    "id": {"type": "string"},
                    "from": {"type": "string"},
                    "to": {"type": "string"},
                },
            },
        },
    },
}


def graph_from_dict(doc) -> Graph:
    """Build and validate a graph from its JSON document form."""
    try:
        jsonschema.validate(doc, GRAPH_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "document"
        raise GraphError(f"invalid graph document at {where}: {exc.message}") from None
    nodes: dict[str, float] = {}
    for item in doc["nodes"]:
        if item["id"] in nodes:
            raise GraphError(f"duplicate node id {item['id']!r}")
        nodes[item["id"]] = item["weight"]
    edges: dict[str, tuple[str, str]] = {}
    for item in doc["edges"]:
        if item["id"] in edges:
            raise GraphError(f"duplicate edge id {item['id']!r}")
        edges[item["id"]] = (item["from"], item["to"])
    return ensure_valid(Graph(nodes, edges))


def graph_to_dict(g: Graph) -> dict:
    return {
        "nodes": [{"id": v, "weight": g.weight(v)} for v in g.node_order],
        "edges": [{"id": e, "from": g.start(e), "to": g.end(e)} for e in g.edge_order],
    }


def load_graph(path) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    return graph_from_dict(doc)


def dump_graph(g: Graph, fh=None, **kwargs) -> str | None:
    """Serialize ``g``; write to ``fh`` if given, else return the string."""
    kwargs.setdefault("indent", 2)
    kwargs.setdefault("ensure_ascii", False)
    if fh is None:
        return json.dumps(graph_to_dict(g), **kwargs)
    json.dump(graph_to_dict(g), fh, **kwargs)
    fh.write("\n")
    return None
