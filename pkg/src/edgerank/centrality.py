"""Edge centrality measures on directed multigraphs.

Seven measures are available, all returning :class:`EdgeScores`:

=====================  =====================================  ====================
kind                   recursion / definition                 defined on
=====================  =====================================  ====================
``edge-pagerank``      x_e = (a * in(u) + b(u)) / outdeg(u)    every graph, a < 1
``eigenedge``          x_e = in(u) / lambda, sum x = 1         strongly connected
``edge-katz``          x_e = a * in(u) + b(u)                  lambda < 1/a
``edge-seeley``        x_e = in(u) / outdeg(u), sum x = 1      strongly connected
``edge-betweenness``   shortest-path share                     every graph
``information``        relative efficiency loss                strongly connected
``gtom``               common-successor overlap                partial (see gtom)
=====================  =====================================  ====================

Here ``u`` is the start of ``e`` and ``in(u)`` is the summed score of the
edges entering ``u``.  "Strongly connected" means: the graph has at least one
edge and all its non-isolated nodes lie in a single strongly connected
component.  Isolated nodes are tolerated so that deleting or adding one keeps
a graph inside the class.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

import numpy as np

from .errors import ClassViolation, ConvergenceError, GraphError
from .multigraph import Graph

__all__ = [
    "SolverConfig",
    "EdgeScores",
    "NodeScores",
    "MeasureSpec",
    "MEASURE_KINDS",
    "edge_pagerank",
    "node_pagerank",
    "random_surfer",
    "spectral_radius",
    "strongly_connected_components",
    "strongly_connected",
    "in_strongly_connected_class",
    "eigenedge",
    "edge_katz",
    "katz_admissible",
    "edge_seeley",
    "edge_betweenness",
    "efficiency",
    "information_centrality",
    "gtom",
    "score",
    "rank_incoming",
]

# dense operators below this edge count, index arithmetic above
_DENSE_LIMIT = 400


@dataclass(frozen=True)
class SolverConfig:
    tolerance: float = 1e-12
    max_iterations: int = 100_000

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


DEFAULT_SOLVER = SolverConfig()


class _Scores(Mapping):
    """Read-only label -> score mapping with provenance.

    A value of ``None`` marks a score the measure leaves undefined.
    """

    def __init__(self, values, measure="", params=None, stderr=None):
        self._values = dict(values)
        self.measure = measure
        self.params = dict(params or {})
        self.stderr = dict(stderr) if stderr is not None else None

    def __getitem__(self, key):
        return self._values[key]

    def __iter__(self):
        return iter(sorted(self._values))

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        body = ", ".join(f"{k}: {_fmt(v)}" for k, v in self.items())
        return f"{type(self).__name__}({self.measure}; {body})"

    @property
    def undefined(self) -> frozenset:
        return frozenset(k for k, v in self._values.items() if v is None)

    def defined(self) -> dict:
        return {k: v for k, v in self.items() if v is not None}

    def to_dict(self) -> dict:
        doc = {
            "measure": self.measure,
            "params": self.params,
            "values": {k: ("undefined" if v is None else v) for k, v in self.items()},
        }
        if self.stderr is not None:
            doc["stderr"] = {k: self.stderr[k] for k in sorted(self.stderr)}
        return doc

    def to_csv(self) -> str:
        lines = ["id,value"]
        lines += [f"{k},{'undefined' if v is None else repr(v)}" for k, v in self.items()]
        return "\n".join(lines) + "\n"


def _fmt(v):
    return "undefined" if v is None else f"{v:.6g}"


class EdgeScores(_Scores):
    """Centrality values keyed by edge label."""


class NodeScores(_Scores):
    """Centrality values keyed by node label."""


# --- indexing ------------------------------------------------------------

class _Index:
    """Integer view of a graph: nodes and edges in label order."""

    def __init__(self, g: Graph):
        self.g = g
        self.nodes = g.node_order
        self.edges = g.edge_order
        self.n = len(self.nodes)
        self.m = len(self.edges)
        pos = {v: i for i, v in enumerate(self.nodes)}
        self.pos = pos
        self.start = np.array([pos[g.start(e)] for e in self.edges], dtype=np.intp)
        self.end = np.array([pos[g.end(e)] for e in self.edges], dtype=np.intp)
        self.weight = np.array([g.weight(v) for v in self.nodes], dtype=float)
        self.outdeg = np.bincount(self.start, minlength=self.n).astype(float)

    def inflow(self, x: np.ndarray) -> np.ndarray:
        """Per-node sum of ``x`` over incoming edges."""
        return np.bincount(self.end, weights=x, minlength=self.n)

    def feed(self):
        """Edge-to-edge operator: ``(F @ x)[e] = inflow(x)[start(e)]``.

        Returned as a dense matrix for small graphs and as a callable
        otherwise.
        """
        if self.m <= _DENSE_LIMIT:
            return (self.start[:, None] == self.end[None, :]).astype(float)
        return None

    def edge_scores(self, x, measure, params) -> EdgeScores:
        return EdgeScores({e: float(v) for e, v in zip(self.edges, x)}, measure, params)


def _apply(op, idx: _Index, x: np.ndarray) -> np.ndarray:
    if op is not None:
        return op @ x
    return idx.inflow(x)[idx.start]


def _iterate(step, x0: np.ndarray, cfg: SolverConfig, name: str) -> np.ndarray:
    """Iterate ``x <- step(x)`` until the sup-norm change is below tolerance."""
    x = x0
    change = math.inf
    for _ in range(cfg.max_iterations):
        nxt = step(x)
        change = float(np.max(np.abs(nxt - x))) if x.size else 0.0
        x = nxt
        if change <= cfg.tolerance:
            return x
    raise ConvergenceError(name, cfg.max_iterations, change)


def _check_decay(a: float, upper: float | None = 1.0) -> float:
    a = float(a)
    if not (a >= 0 and (upper is None or a < upper)) or math.isnan(a):
        bound = "[0, 1)" if upper == 1.0 else "[0, inf)"
        raise ValueError(f"decay factor must lie in {bound}, got {a}")
    return a


# --- PageRank family -----------------------------------------------------

def edge_pagerank(g: Graph, a: float, cfg: SolverConfig = DEFAULT_SOLVER) -> EdgeScores:
    """Edge PageRank by synchronous fixed-point iteration from zero.

    Solves ``x_e = (a * in(u) + b(u)) / outdeg(u)`` for every edge
    ``e: (u, v)``.  The map is a contraction for ``a < 1``.
    """
    a = _check_decay(a)
    idx = _Index(g)
    params = {"alpha": a}
    if idx.m == 0:
        return idx.edge_scores([], "edge-pagerank", params)
    deg = idx.outdeg[idx.start]
    base = idx.weight[idx.start] / deg
    op = idx.feed()
    if op is not None:
        op = a * op / deg[:, None]
        step = lambda x: op @ x + base
    else:
        step = lambda x: a * idx.inflow(x)[idx.start] / deg + base
    x = _iterate(step, np.zeros(idx.m), cfg, "edge_pagerank")
    return idx.edge_scores(step(x), "edge-pagerank", params)


def node_pagerank(g: Graph, a: float, cfg: SolverConfig = DEFAULT_SOLVER) -> NodeScores:
    """Node PageRank derived from Edge PageRank: ``a * in(u) + b(u)``."""
    pr = edge_pagerank(g, a, cfg)
    idx = _Index(g)
    x = np.array([pr[e] for e in idx.edges])
    values = a * idx.inflow(x) + idx.weight
    return NodeScores(dict(zip(idx.nodes, values.tolist())), "node-pagerank", {"alpha": a})


def random_surfer(g: Graph, a: float, walks: int, seed: int,
                  chunk: int = 1 << 16) -> EdgeScores:
    """Monte-Carlo Edge PageRank.

    Each walk starts at a node drawn with probability proportional to its
    weight.  At every step the surfer follows a uniformly chosen out-edge
    and then continues with probability ``a``; reaching a sink ends the
    walk.  The score of an edge is its mean traversal count per walk times
    the total node weight.  ``stderr`` on the result holds the standard
    error of each estimate.

    Walks are simulated in chunks; chunk ``i`` draws from its own stream
    derived from ``(seed, i)``, so results depend only on the arguments.
    """
    a = _check_decay(a)
    if walks < 1:
        raise ValueError("walks must be at least 1")
    idx = _Index(g)
    total = float(idx.weight.sum())
    if not total > 0:
        raise GraphError("random surfer needs a positive total node weight")
    params = {"alpha": a, "walks": walks, "seed": seed}
    if idx.m == 0:
        return EdgeScores({}, "random-surfer", params, stderr={})

    order = np.argsort(idx.start, kind="stable")
    offsets = np.concatenate([[0], np.cumsum(np.bincount(idx.start, minlength=idx.n))])
    deg = idx.outdeg.astype(np.intp)
    p_start = idx.weight / total
    chunk = max(1, min(chunk, (1 << 23) // max(idx.m, 1)))

    sums = np.zeros(idx.m)
    sumsq = np.zeros(idx.m)
    done = 0
    i = 0
    while done < walks:
        size = min(chunk, walks - done)
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(i,)))
        counts = np.zeros((size, idx.m), dtype=np.int64)
        cur = rng.choice(idx.n, size=size, p=p_start)
        live = np.flatnonzero(deg[cur] > 0)
        while live.size:
            here = cur[live]
            pick = offsets[here] + (rng.random(live.size) * deg[here]).astype(np.intp)
            e = order[pick]
            counts[live, e] += 1
            cur[live] = idx.end[e]
            keep = (rng.random(live.size) < a) & (deg[cur[live]] > 0)
            live = live[keep]
        sums += counts.sum(axis=0)
        sumsq += (counts.astype(float) ** 2).sum(axis=0)
        done += size
        i += 1

    mean = sums / walks
    var = np.maximum(sumsq / walks - mean ** 2, 0.0)
    stderr = np.sqrt(var / walks) * total
    return EdgeScores(
        {e: float(v) for e, v in zip(idx.edges, mean * total)},
        "random-surfer",
        params,
        stderr={e: float(s) for e, s in zip(idx.edges, stderr)},
    )


# --- connectivity and spectra --------------------------------------------

def strongly_connected_components(g: Graph) -> list[frozenset[str]]:
    """Tarjan's algorithm, iterative.  Components come out in reverse
    topological order of the condensation."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    comps: list[frozenset[str]] = []
    counter = 0
    for root in g.node_order:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(g.out_edges(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for e in it:
                w = g.end(e)
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.out_edges(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    return comps


def strongly_connected(g: Graph) -> bool:
    """True iff every node reaches every other node.

    The empty graph and a single node count as strongly connected.
    """
    return len(strongly_connected_components(g)) <= 1


def in_strongly_connected_class(g: Graph) -> bool:
    """At least one edge, and all non-isolated nodes form one strong component."""
    if not g.edges:
        return False
    active = {v for v in g.nodes if g.out_degree(v) or g.in_degree(v)}
    comps = [c for c in strongly_connected_components(g) if c & active]
    return len(comps) == 1 and comps[0] == active


def _perron(op_apply, size: int, cfg: SolverConfig, name: str) -> tuple[np.ndarray, float]:
    """Dominant eigenpair of a nonnegative irreducible operator.

    Iterates ``x <- (A + I) x`` with L1 renormalization.  The shift makes
    the iteration aperiodic without moving the eigenvectors.
    """
    def step(x):
        y = op_apply(x) + x
        return y / y.sum()

    x0 = np.full(size, 1.0 / size)
    try:
        x = _iterate(step, x0, cfg, name)
    except ConvergenceError:
        longer = SolverConfig(cfg.tolerance, cfg.max_iterations * 10)
        x = _iterate(step, x0, longer, name)
    lam = float(op_apply(x).sum() / x.sum())
    return x, lam


def spectral_radius(g: Graph, cfg: SolverConfig = DEFAULT_SOLVER) -> float:
    """Largest eigenvalue of the node adjacency matrix (entry ``(u, v)``
    counts the parallel edges ``u -> v``).

    The radius is the maximum over strong components; each nontrivial
    component is handled by shifted power iteration from the uniform
    vector, and an acyclic graph has radius 0.
    """
    if not g.nodes:
        raise GraphError("spectral radius of the empty graph is undefined")
    best = 0.0
    for comp in strongly_connected_components(g):
        members = sorted(comp)
        if len(members) == 1:
            v = members[0]
            best = max(best, float(sum(1 for e in g.out_edges(v) if g.end(e) == v)))
            continue
        pos = {v: i for i, v in enumerate(members)}
        A = np.zeros((len(members), len(members)))
        for v in members:
            for e in g.out_edges(v):
                t = g.end(e)
                if t in pos:
                    A[pos[v], pos[t]] += 1.0
        _, lam = _perron(lambda x: A.T @ x, len(members), cfg, "spectral_radius")
        best = max(best, lam)
    return best


# power iteration leaves the radius a hair low, so an integer radius of
# exactly 1/a must not slip through as admissible
_KATZ_MARGIN = 1e-9


def katz_admissible(g: Graph, a: float, cfg: SolverConfig = DEFAULT_SOLVER) -> bool:
    """True when ``a * spectral_radius(g) < 1`` with a small safety margin."""
    if a == 0 or not g.edges:
        return True
    return a * spectral_radius(g, cfg) < 1.0 - _KATZ_MARGIN


def _require_sc(g: Graph, measure: str) -> None:
    if not in_strongly_connected_class(g):
        raise ClassViolation(measure, "strongly-connected")


def eigenedge(g: Graph, cfg: SolverConfig = DEFAULT_SOLVER) -> EdgeScores:
    """Eigenedge: the Perron vector of the edge feed operator, summing to 1.

    The eigenvalue of the edge operator coincides with the spectral radius
    of the node adjacency matrix.
    """
    _require_sc(g, "eigenedge")
    idx = _Index(g)
    op = idx.feed()
    x, lam = _perron(lambda x: _apply(op, idx, x), idx.m, cfg, "eigenedge")
    if not lam > 0:
        raise ClassViolation("eigenedge", "positive dominant eigenvalue")
    return idx.edge_scores(x / x.sum(), "eigenedge", {"lambda": lam})


def edge_katz(g: Graph, a: float, cfg: SolverConfig = DEFAULT_SOLVER) -> EdgeScores:
    """Edge Katz: ``x_e = a * in(u) + b(u)``, iterated from zero."""
    a = _check_decay(a, upper=None)
    idx = _Index(g)
    params = {"alpha": a}
    if idx.m == 0:
        return idx.edge_scores([], "edge-katz", params)
    if not katz_admissible(g, a, cfg):
        raise ClassViolation("edge-katz", f"spectral radius < 1/a = {1.0 / a:g}")
    base = idx.weight[idx.start]
    op = idx.feed()
    if op is not None:
        # direct solve: iteration crawls when a * radius is close to 1
        x = np.linalg.solve(np.eye(idx.m) - a * op, base)
        return idx.edge_scores(np.maximum(x, 0.0), "edge-katz", params)
    step = lambda x: a * idx.inflow(x)[idx.start] + base
    x = _iterate(step, np.zeros(idx.m), cfg, "edge_katz")
    return idx.edge_scores(step(x), "edge-katz", params)


def edge_seeley(g: Graph, cfg: SolverConfig = DEFAULT_SOLVER) -> EdgeScores:
    """Edge Seeley index: stationary edge flow, ``x_e = in(u) / outdeg(u)``,
    summing to 1."""
    _require_sc(g, "edge-seeley")
    idx = _Index(g)
    deg = idx.outdeg[idx.start]
    op = idx.feed()
    x, _ = _perron(lambda x: _apply(op, idx, x) / deg, idx.m, cfg, "edge_seeley")
    return idx.edge_scores(x / x.sum(), "edge-seeley", {})


# --- path-based measures -------------------------------------------------

def _bfs_layers(g: Graph, s: str, exact: bool):
    """Single-source shortest-path DAG over individual edges."""
    one = 1 if exact else 1.0
    dist = {s: 0}
    sigma = {s: one}
    preds: dict[str, list[str]] = {s: []}
    order = []
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        for e in g.out_edges(v):
            w = g.end(e)
            if w not in dist:
                dist[w] = dist[v] + 1
                sigma[w] = 0 * one
                preds[w] = []
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(e)
    return order, sigma, preds


def edge_betweenness(g: Graph, exact: bool = False) -> EdgeScores:
    """Edge Betweenness: for every ordered pair ``s != t`` with ``t``
    reachable from ``s``, the share of shortest ``s``-``t`` paths through
    each edge.  Parallel edges count as distinct paths.

    With ``exact=True`` path counts are integers and shares are
    :class:`~fractions.Fraction` until the final conversion.
    """
    scores = {e: (Fraction(0) if exact else 0.0) for e in g.edges}
    for s in g.node_order:
        order, sigma, preds = _bfs_layers(g, s, exact)
        delta = {v: (Fraction(0) if exact else 0.0) for v in order}
        for w in reversed(order):
            for e in preds[w]:
                v = g.start(e)
                share = (Fraction(sigma[v], sigma[w]) if exact else sigma[v] / sigma[w]) * (1 + delta[w])
                scores[e] += share
                delta[v] += share
    values = {e: (v if exact else float(v)) for e, v in scores.items()}
    if exact:
        return EdgeScores(values, "edge-betweenness", {"exact": True})
    return EdgeScores(values, "edge-betweenness", {})


def _distances(counts: np.ndarray) -> np.ndarray:
    """All-pairs hop distances from an adjacency count matrix (inf when
    unreachable, 0 on the diagonal)."""
    n = counts.shape[0]
    adj = counts > 0
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    frontier = np.eye(n, dtype=bool)
    seen = frontier.copy()
    k = 0
    while frontier.any():
        k += 1
        frontier = (frontier.astype(np.uint8) @ adj.astype(np.uint8) > 0) & ~seen
        dist[frontier] = k
        seen |= frontier
    return dist


def _efficiency_from(dist: np.ndarray) -> float:
    n = dist.shape[0]
    off = ~np.eye(n, dtype=bool)
    d = dist[off]
    return math.fsum((1.0 / d[np.isfinite(d)]).tolist())


def efficiency(g: Graph) -> float:
    """Sum of inverse hop distances over ordered pairs of distinct nodes;
    unreachable pairs contribute nothing."""
    idx = _Index(g)
    counts = np.zeros((idx.n, idx.n))
    np.add.at(counts, (idx.start, idx.end), 1.0)
    return _efficiency_from(_distances(counts))


def information_centrality(g: Graph) -> EdgeScores:
    """Relative drop in efficiency caused by deleting each edge."""
    _require_sc(g, "information")
    idx = _Index(g)
    counts = np.zeros((idx.n, idx.n))
    np.add.at(counts, (idx.start, idx.end), 1.0)
    eff = _efficiency_from(_distances(counts))
    if not eff > 0:
        raise ClassViolation("information", "positive efficiency (an edge between distinct nodes)")
    values = {}
    cache: dict[tuple[int, int], float] = {}
    for e, s, t in zip(idx.edges, idx.start, idx.end):
        if s == t or counts[s, t] > 1:
            # removing a self-loop or one of several parallel copies leaves
            # every distance unchanged
            values[e] = 0.0
            continue
        key = (int(s), int(t))
        if key not in cache:
            counts[s, t] -= 1
            cache[key] = _efficiency_from(_distances(counts))
            counts[s, t] += 1
        values[e] = (eff - cache[key]) / eff
    return EdgeScores(values, "information", {})


def gtom(g: Graph) -> EdgeScores:
    """Generalized topological overlap of each edge ``e: (u, v)``.

    ``(|N(u) & N(v)| + 1) / min(|N(u)|, |N(v)|)`` where ``N`` is the set of
    distinct out-neighbours.  The value is undefined (``None``) when ``v``
    is a sink.
    """
    values = {}
    for e, (u, v) in g.edges.items():
        nu, nv = g.out_neighbors(u), g.out_neighbors(v)
        denom = min(len(nu), len(nv))
        values[e] = (len(nu & nv) + 1) / denom if denom else None
    return EdgeScores(values, "gtom", {})


# --- dispatch ------------------------------------------------------------

MEASURE_KINDS = (
    "edge-pagerank",
    "eigenedge",
    "edge-katz",
    "edge-seeley",
    "edge-betweenness",
    "information",
    "gtom",
)

_ALIASES = {
    "pagerank": "edge-pagerank",
    "katz": "edge-katz",
    "seeley": "edge-seeley",
    "betweenness": "edge-betweenness",
    "eig": "eigenedge",
}

_CLASS_OF = {
    "edge-pagerank": "all",
    "edge-betweenness": "all",
    "gtom": "all",
    "eigenedge": "strongly-connected",
    "edge-seeley": "strongly-connected",
    "information": "strongly-connected",
    "edge-katz": "katz-admissible",
}


@dataclass(frozen=True)
class MeasureSpec:
    """One measure together with its parameter.

    ``decay`` is required for ``edge-pagerank`` (``0 <= a < 1``) and
    ``edge-katz`` (``a >= 0``) and must be absent for the others.
    """
    kind: str
    decay: float | None = None
    solver: SolverConfig = field(default=DEFAULT_SOLVER, compare=False)

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        if kind not in MEASURE_KINDS:
            raise ValueError(f"unknown measure {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        needs = kind in ("edge-pagerank", "edge-katz")
        if needs and self.decay is None:
            raise ValueError(f"{kind} needs a decay factor")
        if not needs and self.decay is not None:
            raise ValueError(f"{kind} takes no decay factor")
        if needs:
            object.__setattr__(
                self, "decay",
                _check_decay(self.decay, 1.0 if kind == "edge-pagerank" else None))

    @property
    def graph_class(self) -> str:
        return _CLASS_OF[self.kind]

    @property
    def label(self) -> str:
        return f"{self.kind}({self.decay:g})" if self.decay is not None else self.kind

    def admits(self, g: Graph) -> str | None:
        """None if the measure is defined on ``g``, else the failed predicate."""
        cls = self.graph_class
        if cls == "strongly-connected":
            if not in_strongly_connected_class(g):
                return "strongly-connected"
            if self.kind == "information" and all(s == t for s, t in g.edges.values()):
                return "strongly-connected with an edge between distinct nodes"
            return None
        if cls == "katz-admissible":
            if not katz_admissible(g, self.decay, self.solver):
                return f"spectral radius < 1/a = {1.0 / self.decay:g}"
        return None


def score(spec: MeasureSpec, g: Graph, cfg: SolverConfig | None = None) -> EdgeScores:
    """Evaluate ``spec`` on ``g``; raises :class:`ClassViolation` when the
    measure is undefined there."""
    cfg = cfg or spec.solver
    reason = spec.admits(g)
    if reason is not None:
        raise ClassViolation(spec.kind, reason)
    kind = spec.kind
    if kind == "edge-pagerank":
        return edge_pagerank(g, spec.decay, cfg)
    if kind == "edge-katz":
        return edge_katz(g, spec.decay, cfg)
    if kind == "eigenedge":
        return eigenedge(g, cfg)
    if kind == "edge-seeley":
        return edge_seeley(g, cfg)
    if kind == "edge-betweenness":
        return edge_betweenness(g)
    if kind == "information":
        return information_centrality(g)
    return gtom(g)


def rank_incoming(g: Graph, v: str, spec: MeasureSpec,
                  cfg: SolverConfig | None = None) -> list[tuple[str, float | None]]:
    """Incoming edges of ``v`` by descending score, ties by label.
    Undefined scores sort last."""
    if v not in g.nodes:
        raise GraphError(f"unknown node {v!r}")
    incoming = g.in_edges(v)
    if not incoming:
        return []
    s = score(spec, g, cfg)
    ranked = sorted(incoming, key=lambda e: (s[e] is None, -(s[e] or 0.0), e))
    return [(e, s[e]) for e in ranked]


def iter_measures(katz_decay: float = 0.25, pagerank_decay: float = 0.85) -> Iterator[MeasureSpec]:
    """One spec per measure kind, in table order."""
    for kind in MEASURE_KINDS:
        if kind == "edge-pagerank":
            yield MeasureSpec(kind, pagerank_decay)
        elif kind == "edge-katz":
            yield MeasureSpec(kind, katz_decay)
        else:
            yield MeasureSpec(kind)
