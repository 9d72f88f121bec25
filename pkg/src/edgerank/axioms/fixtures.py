"""Named construction graphs with their closed-form Edge PageRank scores."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..centrality import MeasureSpec, SolverConfig, DEFAULT_SOLVER, score
from ..errors import GraphError
from ..linegraph import line_edge_label, line_graph
from ..multigraph import Graph, swap_ends

__all__ = ["Fixture", "FIXTURES", "fixtures", "estimate_decay_factor", "ranking_example", "fanout_example"]


@dataclass(frozen=True)
class Fixture:
    """A graph plus the Edge PageRank values it is known to have.

    ``expected(a)`` maps edge labels to the score at decay factor ``a``;
    ``tolerance`` is the precision of those values (0 for exact formulas).
    """
    name: str
    graph: Graph
    params: dict = field(default_factory=dict)
    expected: Callable[[float], dict] | None = None
    tolerance: float = 0.0
    node_expected: Callable[[float], dict] | None = None


def _nonneg(**kw):
    for k, v in kw.items():
        if not v >= 0:
            raise GraphError(f"fixture parameter {k} must be non-negative, got {v}")


def _count(k):
    if int(k) != k or k < 1:
        raise GraphError(f"fixture parameter k must be a positive integer, got {k}")
    return int(k)


def two_path(x: float = 1.0, y: float = 0.0) -> Fixture:
    _nonneg(x=x, y=y)
    g = Graph({"u": x, "v": y, "w": 0.0}, {"e1": ("u", "v"), "e2": ("v", "w")})
    return Fixture("two-path", g, {"x": x, "y": y},
                   lambda a: {"e1": x, "e2": a * x + y})


def self_loop(x: float = 1.0) -> Fixture:
    _nonneg(x=x)
    g = Graph({"v": x}, {"e": ("v", "v")})
    return Fixture("self-loop", g, {"x": x}, lambda a: {"e": x / (1.0 - a)})


def swap_pair(a: float = 0.5, swapped: bool = False) -> Fixture:
    """Source edge ``e1`` tuned to the self-loop's score ``1 / (1 - a)``.

    With ``swapped=True`` the ends are already exchanged, giving the path
    ``u -> v -> w``; both variants have the same scores.
    """
    if not 0 <= a < 1:
        raise GraphError(f"swap-pair needs 0 <= a < 1, got {a}")
    x = 1.0 / (1.0 - a)
    g = Graph({"u": x, "v": 1.0, "w": 0.0}, {"e1": ("u", "w"), "e2": ("v", "v")})
    if swapped:
        g = swap_ends(g, "e1", "e2")
        return Fixture("swap-pair-swapped", g, {"a": a},
                       lambda b: {"e1": x, "e2": 1.0 + b * x})
    return Fixture("swap-pair", g, {"a": a}, lambda b: {"e1": x, "e2": 1.0 / (1.0 - b)})


def star(x: float = 1.0, k: int = 2) -> Fixture:
    _nonneg(x=x)
    k = _count(k)
    nodes = {"v": x, **{f"w{i}": 0.0 for i in range(1, k + 1)}}
    edges = {f"e{i}": ("v", f"w{i}") for i in range(1, k + 1)}
    return Fixture("star", Graph(nodes, edges), {"x": x, "k": k},
                   lambda a: {e: x / k for e in edges})


def star_edge(x: float = 1.0, y: float = 0.0, k: int = 2) -> Fixture:
    _nonneg(x=x, y=y)
    k = _count(k)
    nodes = {"u": x, "v": y, **{f"w{i}": 0.0 for i in range(1, k + 1)}}
    edges = {"e": ("u", "v"), **{f"e{i}": ("v", f"w{i}") for i in range(1, k + 1)}}
    return Fixture("star-edge", Graph(nodes, edges), {"x": x, "y": y, "k": k},
                   lambda a: {"e": x, **{f"e{i}": (a * x + y) / k for i in range(1, k + 1)}})


def ranking_example() -> Graph:
    return Graph(
        {"v1": 1.0, "v2": 1.0, "v3": 1.0, "v4": 1.0},
        {
            "e1": ("v1", "v1"),
            "e2": ("v1", "v4"),
            "e3": ("v2", "v4"),
            "e4": ("v3", "v1"),
            "e5": ("v3", "v2"),
            "e6": ("v3", "v2"),
            "e7": ("v3", "v4"),
            "e8": ("v4", "v3"),
        },
    )


# rounded to two decimals, valid at a = 0.9 only
_RANKING_EDGES = {"e2": 3.55, "e3": 6.80, "e7": 3.22}
_RANKING_NODES = {"v1": 7.09, "v2": 6.80, "v3": 12.89}


def ranking_fixture() -> Fixture:
    def table(a, values):
        return dict(values) if a == 0.9 else {}
    return Fixture("fig1", ranking_example(), {}, lambda a: table(a, _RANKING_EDGES), 0.005,
                   lambda a: table(a, _RANKING_NODES))


def fanout_example() -> Graph:
    """Ten nodes, nine edges.  ``n2`` feeds both ``n3`` and ``n4``, which
    also receive one source edge each and fan out to two sinks apiece."""
    nodes = {f"n{i}": 1.0 for i in range(10)}
    edges = {
        "e0": ("n1", "n2"),
        "e1": ("n0", "n3"),
        "e2": ("n2", "n3"),
        "e3": ("n2", "n4"),
        "e4": ("n8", "n4"),
        "e5": ("n3", "n9"),
        "e6": ("n3", "n7"),
        "e7": ("n4", "n5"),
        "e8": ("n4", "n6"),
    }
    return Graph(nodes, edges)


def fanout_fixture() -> Fixture:
    return Fixture("fig5", fanout_example())


def swapped_line_graph() -> Fixture:
    """Line digraph of the fan-out example with the ends of arcs ``e2 -> e6`` and
    ``e3 -> e7`` exchanged; arcs are relabeled by their new endpoints."""
    lg = line_graph(fanout_example()).graph
    g = swap_ends(lg, line_edge_label("e2", "e6"), line_edge_label("e3", "e7"))
    edges = {line_edge_label(s, t): (s, t) for s, t in g.edges.values()}
    return Fixture("fig5-swapped", Graph(g.nodes, edges))


FIXTURES = {
    "two-path": two_path,
    "self-loop": self_loop,
    "swap-pair": swap_pair,
    "star": star,
    "star-edge": star_edge,
    "fig1": ranking_fixture,
    "fig5": fanout_fixture,
    "fig5-swapped": swapped_line_graph,
}


def fixtures(name: str, **params) -> Fixture:
    """Build the fixture ``name`` with keyword parameters (``x``, ``y``,
    ``k``, or ``a`` for swap-pair)."""
    try:
        builder = FIXTURES[name]
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for fixture {name!r}: {exc}") from None


def estimate_decay_factor(spec: MeasureSpec, cfg: SolverConfig = DEFAULT_SOLVER) -> float:
    """Score of the second edge of the two-path with weights ``[1, 0, 0]``.

    For a measure satisfying the axioms this is the decay factor of the
    Edge PageRank it coincides with.
    """
    fx = two_path(1.0, 0.0)
    return score(spec, fx.graph, cfg)["e2"]
