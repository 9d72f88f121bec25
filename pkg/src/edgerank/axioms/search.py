"""Randomized counterexample search and the measure-by-axiom matrix.

A search samples graphs from the measure's domain, enumerates every place
an axiom's transformation applies, and runs the corresponding check.
Random graphs rarely contain some sites (out-twins, long runs of parallel
edges, equally scored edge pairs), so each trial also plants a few:

* node deletion: a fresh isolated node is added;
* edge multiplication: an edge that is the sole out-edge of its start is
  replicated two or three times;
* edge swap: a fresh source edge whose start weight equals the score of a
  chosen edge (it ties with that edge for measures that score source edges
  by their start weight);
* node redirect: a fresh node copies the out-edges of an existing node and
  receives one edge from a random node;
* baseline: a fresh isolated edge is added.

"Satisfied" in the matrix means that no counterexample turned up within
the trial budget.  It is evidence, not proof.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..centrality import MeasureSpec, iter_measures, katz_admissible, score
from ..errors import ClassViolation, GraphError
from ..multigraph import (
    EdgeRole,
    Graph,
    add_edge,
    add_node,
    edge_role,
    fresh_label,
    graph_sum,
    out_twin_witness,
    replicate_edge,
)
from .checks import AXIOMS, AxiomCheckResult, Status, TrialConfig, run_check

__all__ = [
    "random_graph",
    "enumerate_sites",
    "SearchReport",
    "search",
    "falsify",
    "EXPECTED_VERDICTS",
    "verdict_matches",
    "SatisfactionMatrix",
    "satisfaction_matrix",
]


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, (tuple, list)):
        return np.random.default_rng(list(seed))
    return np.random.default_rng(seed)


def _sample_edges(rng, n, m, cfg: TrialConfig, edges=None, width=2):
    """Add up to ``m`` random edges (fewer if the flags exhaust the pairs)."""
    edges = dict(edges or {})
    pairs = set(edges.values())
    counter = itertools.count(len(edges))
    attempts = 0
    added = 0
    while added < m and attempts < 50 * (m + 1):
        attempts += 1
        s = int(rng.integers(n))
        t = int(rng.integers(n))
        if s == t and not cfg.allow_self_loops:
            continue
        pair = (f"v{s}", f"v{t}")
        if pair in pairs and not cfg.allow_parallel:
            continue
        label = f"e{next(counter):0{width}d}"
        edges[label] = pair
        pairs.add(pair)
        added += 1
    return edges


def random_graph(cfg: TrialConfig, seed, graph_class: str = "all",
                 decay: float | None = None) -> Graph:
    """Random multigraph from a measure domain.

    ``graph_class`` is ``"all"``, ``"strongly-connected"`` (a random
    Hamiltonian cycle plus random extra edges) or ``"katz-admissible"``
    (rejection sampling on spectral radius < 1/decay).
    """
    rng = _rng(seed)
    for _ in range(cfg.rejection_budget):
        n = int(rng.integers(cfg.n_range[0], cfg.n_range[1] + 1))
        m = int(rng.integers(cfg.m_range[0], cfg.m_range[1] + 1))
        nodes = {f"v{i}": float(rng.uniform(0.0, cfg.w_max)) for i in range(n)}
        width = max(2, len(str(max(m, n))))
        if graph_class == "strongly-connected":
            if n == 1 and not cfg.allow_self_loops:
                continue
            perm = rng.permutation(n)
            cycle = {}
            for i in range(n if n > 1 else 1):
                s, t = perm[i], perm[(i + 1) % n]
                cycle[f"e{i:0{width}d}"] = (f"v{s}", f"v{t}")
            edges = _sample_edges(rng, n, max(0, m - len(cycle)), cfg, cycle, width)
            return Graph(nodes, edges)
        g = Graph(nodes, _sample_edges(rng, n, m, cfg, width=width))
        if graph_class == "all":
            return g
        if graph_class == "katz-admissible":
            if decay is None:
                raise ValueError("katz-admissible sampling needs a decay factor")
            if katz_admissible(g, decay):
                return g
            continue
        raise ValueError(f"unknown graph class {graph_class!r}")
    raise GraphError(f"no {graph_class} graph found in {cfg.rejection_budget} attempts")


def _sample_in_domain(spec: MeasureSpec, cfg: TrialConfig, rng) -> Graph:
    return random_graph(cfg, rng, spec.graph_class, spec.decay)


# --- site enumeration ----------------------------------------------------

def enumerate_sites(spec: MeasureSpec, axiom: str, g: Graph, cfg: TrialConfig,
                    rng) -> list[tuple[Graph, tuple]]:
    """``(graph, site)`` pairs where ``axiom`` applies, for graph ``g`` and
    planted variants of it."""
    rng = _rng(rng)
    w = lambda: float(rng.uniform(0.0, cfg.w_max))
    sites: list[tuple[Graph, tuple]] = []

    if axiom == "node-deletion":
        sites += [(g, (v,)) for v in g.node_order
                  if not g.in_degree(v) and not g.out_degree(v)]
        v = fresh_label(g.nodes, "iso")
        sites.append((add_node(g, v, w()), (v,)))

    elif axiom == "edge-deletion":
        sites += [(g, (e,)) for e in g.edge_order]

    elif axiom == "edge-multiplication":
        for u in g.node_order:
            out = g.out_edges(u)
            if out and len({g.end(e) for e in out}) == 1:
                sites.append((g, (out[0],)))
                if len(out) == 1:
                    k = int(rng.integers(2, 4))
                    sites.append((replicate_edge(g, out[0], k), (out[0],)))

    elif axiom == "edge-swap":
        sites += _swap_sites(spec, g, cfg, rng, w)

    elif axiom == "node-redirect":
        for u, t in itertools.permutations(g.node_order, 2):
            if out_twin_witness(g, u, t) is not None:
                sites.append((g, (u, t)))
        if g.nodes:
            target = g.node_order[int(rng.integers(len(g.nodes)))]
            others = [v for v in g.node_order if v != target]
            twin = fresh_label(g.nodes, "twin")
            h = add_node(g, twin, w())
            for e in g.out_edges(target):
                h = add_edge(h, fresh_label(h.edges, f"{e}'"), twin, g.end(e))
            if others:
                # the feeder must not be the target, or their out-edges differ
                feeder = others[int(rng.integers(len(others)))]
                h = add_edge(h, fresh_label(h.edges, "feed"), feeder, twin)
            sites.append((h, (twin, target)))

    elif axiom == "baseline":
        sites += [(g, (e,)) for e in g.edge_order
                  if edge_role(g, e) is EdgeRole.ISOLATED_EDGE]
        s, t = fresh_label(g.nodes, "src"), fresh_label(g.nodes, "dst")
        e = fresh_label(g.edges, "iso-edge")
        sites.append((graph_sum(g, Graph({s: w(), t: w()}, {e: (s, t)})), (e,)))

    else:
        raise ValueError(f"unknown axiom {axiom!r}")

    if cfg.max_sites is not None and len(sites) > cfg.max_sites:
        keep = sorted(rng.choice(len(sites), size=cfg.max_sites, replace=False))
        sites = [sites[i] for i in keep]
    return sites


def _swap_sites(spec, g, cfg, rng, w):
    sites = []
    if spec.admits(g) is None and g.edges:
        s = score(spec, g, cfg.solver)
        defined = sorted((v, e) for e, v in s.items() if v is not None)
        # equal scores are adjacent after sorting
        for i, (vi, ei) in enumerate(defined):
            for vj, ej in defined[i + 1:]:
                if vj - vi > cfg.tol_pre:
                    break
                if g.end(ei) != g.end(ej):
                    sites.append((g, (ei, ej)))
        # tie a fresh source edge to a random edge by weight
        target = g.edge_order[int(rng.integers(len(g.edges)))]
        if s[target] is not None:
            src, dst = fresh_label(g.nodes, "src"), fresh_label(g.nodes, "dst")
            e = fresh_label(g.edges, "tied")
            h = graph_sum(g, Graph({src: s[target], dst: w()}, {e: (src, dst)}))
            sites.append((h, (target, e)))
    return sites


# --- search --------------------------------------------------------------

@dataclass
class SearchReport:
    measure: str
    axiom: str
    trials: int = 0
    counts: Counter = field(default_factory=Counter)
    counterexample: AxiomCheckResult | None = None
    undefined: AxiomCheckResult | None = None
    max_pass_discrepancy: float = 0.0

    @property
    def verdict(self) -> str:
        if self.counterexample is not None:
            return "violated"
        if self.undefined is not None:
            return "undefined"
        if self.counts[Status.PASS]:
            return "satisfied"
        return "vacuous"

    def summary(self) -> str:
        v = self.verdict
        if v == "violated":
            return f"violated (trial {self.counterexample.trials})"
        if v == "undefined":
            return f"undefined score (trial {self.undefined.trials})"
        if v == "satisfied":
            return f"no counterexample in {self.trials} trials"
        return f"vacuous in {self.trials} trials"

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "axiom": self.axiom,
            "verdict": self.verdict,
            "summary": self.summary(),
            "trials": self.trials,
            "checks": {s.value: self.counts[s] for s in Status},
            "max_pass_discrepancy": self.max_pass_discrepancy,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "undefined": self.undefined.to_dict() if self.undefined else None,
        }


def search(spec: MeasureSpec, axiom: str, cfg: TrialConfig = TrialConfig(),
           stop_at_first: bool = True) -> SearchReport:
    """Run up to ``cfg.trials`` randomized trials of ``axiom`` for ``spec``.

    Trial ``i`` draws all its randomness from ``(cfg.seed, i)``, so the
    report depends only on the arguments.
    """
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}")
    spec = MeasureSpec(spec.kind, spec.decay, cfg.solver)
    report = SearchReport(spec.label, axiom)
    for i in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, i])
        g = _sample_in_domain(spec, cfg, rng)
        report.trials = i + 1
        for h, site in enumerate_sites(spec, axiom, g, cfg, rng):
            try:
                res = run_check(spec, axiom, h, site, cfg)
            except ClassViolation as exc:
                res = AxiomCheckResult(axiom, spec.label, Status.SKIPPED, note=str(exc))
            res.trials = i + 1
            report.counts[res.status] += 1
            if res.status is Status.PASS:
                report.max_pass_discrepancy = max(report.max_pass_discrepancy, res.max_discrepancy)
            elif res.status is Status.FAIL and report.counterexample is None:
                report.counterexample = res
            elif res.status is Status.UNDEFINED and report.undefined is None:
                report.undefined = res
        if report.counterexample is not None and stop_at_first:
            break
    return report


def falsify(spec: MeasureSpec, axiom: str,
            cfg: TrialConfig = TrialConfig()) -> AxiomCheckResult | None:
    """First counterexample to ``axiom`` for ``spec``, or None."""
    return search(spec, axiom, cfg).counterexample


# --- the matrix ----------------------------------------------------------

_ALL_HOLD = {a: "satisfied" for a in AXIOMS}
_ONLY_NODE_DELETION = {a: ("satisfied" if a == "node-deletion" else "violated") for a in AXIOMS}

# expected verdict per measure kind; "satisfied" also admits "vacuous" under
# restricted domains, and "violated" also admits "undefined" for gtom
EXPECTED_VERDICTS = {
    "edge-pagerank": dict(_ALL_HOLD),
    "eigenedge": {**_ALL_HOLD, "edge-multiplication": "violated"},
    "edge-katz": {**_ALL_HOLD, "edge-multiplication": "violated"},
    "edge-seeley": dict(_ALL_HOLD),
    "edge-betweenness": dict(_ONLY_NODE_DELETION),
    "information": {**_ALL_HOLD, "edge-multiplication": "violated",
                    "edge-swap": "violated", "node-redirect": "violated"},
    "gtom": dict(_ONLY_NODE_DELETION),
}


def verdict_matches(kind: str, axiom: str, verdict: str) -> bool:
    want = EXPECTED_VERDICTS[kind][axiom]
    if want == "satisfied":
        return verdict in ("satisfied", "vacuous")
    return verdict in ("violated", "undefined") if kind == "gtom" else verdict == "violated"


@dataclass
class SatisfactionMatrix:
    measures: list[MeasureSpec]
    cells: dict[tuple[str, str], SearchReport]

    def verdict(self, kind: str, axiom: str) -> str:
        return self.cells[(kind, axiom)].verdict

    def mismatches(self) -> list[tuple[str, str, str]]:
        return [(m.kind, a, self.verdict(m.kind, a))
                for m in self.measures for a in AXIOMS
                if (m.kind, a) in self.cells
                and not verdict_matches(m.kind, a, self.verdict(m.kind, a))]

    def to_dict(self) -> dict:
        return {
            "measures": [m.label for m in self.measures],
            "axioms": list(AXIOMS),
            "cells": [self.cells[(m.kind, a)].to_dict()
                      for m in self.measures for a in AXIOMS if (m.kind, a) in self.cells],
        }

    def render(self) -> str:
        """Aligned text table, one row per measure."""
        short = {"violated": "VIOLATED", "satisfied": "ok", "vacuous": "vacuous",
                 "undefined": "UNDEFINED"}
        head = ["measure"] + list(AXIOMS)
        rows = []
        for m in self.measures:
            row = [m.label]
            for a in AXIOMS:
                cell = self.cells.get((m.kind, a))
                row.append(short[cell.verdict] if cell else "-")
            rows.append(row)
        widths = [max(len(r[i]) for r in [head] + rows) for i in range(len(head))]
        fmt = lambda r: "  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip()
        lines = [fmt(head), fmt(["-" * wd for wd in widths])] + [fmt(r) for r in rows]
        return "\n".join(lines)


def satisfaction_matrix(cfg: TrialConfig = TrialConfig(),
                        measures: list[MeasureSpec] | None = None,
                        axioms=AXIOMS) -> SatisfactionMatrix:
    """Search every (measure, axiom) pair.  Each cell stops at its first
    counterexample."""
    measures = list(measures) if measures is not None else list(iter_measures())
    cells = {}
    for m in measures:
        for a in axioms:
            cells[(m.kind, a)] = search(m, a, cfg)
    return SatisfactionMatrix(measures, cells)
