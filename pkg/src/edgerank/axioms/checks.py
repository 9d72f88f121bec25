"""The six axioms as executable checks.

Each ``check_*`` function applies one axiom's graph transformation at one
site, evaluates the measure before and after, and compares the result with
what the axiom demands.  A check is skipped when either graph lies outside
the measure's domain, so restricted axioms are tested only where they apply.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..centrality import MeasureSpec, SolverConfig, EdgeScores, score
from ..errors import GraphError
from ..multigraph import (
    EdgeRole,
    Graph,
    collapse_parallel,
    delete_edge,
    delete_node,
    edge_role,
    graph_to_dict,
    out_twin_witness,
    redirect,
    successors,
    swap_ends,
)

__all__ = [
    "AXIOMS",
    "Status",
    "TrialConfig",
    "AxiomCheckResult",
    "check_node_deletion",
    "check_edge_deletion",
    "check_edge_multiplication",
    "check_edge_swap",
    "check_node_redirect",
    "check_baseline",
    "run_check",
]

AXIOMS = (
    "node-deletion",
    "edge-deletion",
    "edge-multiplication",
    "edge-swap",
    "node-redirect",
    "baseline",
)


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"
    SKIPPED = "skipped"
    # the measure left a score undefined where the axiom pins its value
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class TrialConfig:
    """Knobs for checks and randomized searches.

    ``tol_pre`` bounds score equality for the Edge Swap precondition and
    ``tol_check`` is the smallest discrepancy reported as a violation; the
    wide gap between them keeps solver noise from producing false
    counterexamples.
    """
    trials: int = 1000
    seed: int = 0
    n_range: tuple[int, int] = (2, 8)
    m_range: tuple[int, int] = (1, 16)
    w_max: float = 5.0
    allow_self_loops: bool = True
    allow_parallel: bool = True
    tol_check: float = 1e-6
    tol_solver: float = 1e-12
    tol_pre: float = 1e-10
    max_sites: int | None = None
    rejection_budget: int = 1000

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        lo, hi = self.n_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad node-count range {self.n_range}")
        lo, hi = self.m_range
        if not 0 <= lo <= hi:
            raise ValueError(f"bad edge-count range {self.m_range}")
        if not self.w_max >= 0:
            raise ValueError("w_max must be non-negative")
        if not 0 < self.tol_pre * 100 <= self.tol_check:
            raise ValueError("tol_pre must be at least 100 times smaller than tol_check")
        if not 0 < self.tol_solver * 100 <= self.tol_check:
            raise ValueError("tol_solver must be at least 100 times smaller than tol_check")

    @property
    def solver(self) -> SolverConfig:
        return SolverConfig(tolerance=self.tol_solver)


@dataclass
class AxiomCheckResult:
    axiom: str
    measure: str
    status: Status
    max_discrepancy: float = 0.0
    witness: dict | None = None
    note: str = ""
    trials: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.status is Status.FAIL and self.witness is None:
            raise ValueError("a failed check must carry a witness")

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAIL

    def to_dict(self) -> dict:
        doc = {
            "measure": self.measure,
            "axiom": self.axiom,
            "status": self.status.value,
            "trials": self.trials,
            "discrepancy": self.max_discrepancy,
            "witness": self.witness,
        }
        if self.note:
            doc["note"] = self.note
        return doc


def _witness(g: Graph, params: dict, diffs: dict) -> dict:
    return {"graph": graph_to_dict(g), "params": params, "diffs": diffs}


def _result(axiom, spec, status, **kw) -> AxiomCheckResult:
    return AxiomCheckResult(axiom, spec.label, status, **kw)


def _scores_or_reason(spec: MeasureSpec, g: Graph, cfg: TrialConfig):
    reason = spec.admits(g)
    if reason is not None:
        return None, reason
    return score(spec, g, cfg.solver), None


def _compare(axiom, spec, g, params, expected: dict, actual: EdgeScores,
             cfg: TrialConfig) -> AxiomCheckResult:
    """Compare expected against actual scores on the keys of ``expected``."""
    if not expected:
        return _result(axiom, spec, Status.VACUOUS, note="nothing to compare")
    worst = 0.0
    diffs = {}
    for e in sorted(expected):
        want, got = expected[e], actual[e]
        if want is None or got is None:
            return _result(axiom, spec, Status.SKIPPED,
                           note=f"score of {e} is undefined")
        d = abs(want - got)
        worst = max(worst, d)
        if d > cfg.tol_check:
            diffs[e] = {"expected": want, "actual": got}
    if diffs:
        return _result(axiom, spec, Status.FAIL, max_discrepancy=worst,
                       witness=_witness(g, params, diffs))
    return _result(axiom, spec, Status.PASS, max_discrepancy=worst)


def check_node_deletion(spec: MeasureSpec, g: Graph, u: str,
                        cfg: TrialConfig = TrialConfig()) -> AxiomCheckResult:
    """Removing an isolated node leaves every edge score unchanged."""
    axiom = "node-deletion"
    g2 = delete_node(g, u)  # raises unless u is isolated
    before, why = _scores_or_reason(spec, g, cfg)
    after, why2 = (None, None) if why else _scores_or_reason(spec, g2, cfg)
    if why or why2:
        return _result(axiom, spec, Status.SKIPPED, note=f"out of class: {why or why2}")
    return _compare(axiom, spec, g, {"node": u}, dict(before), after, cfg)


def check_edge_deletion(spec: MeasureSpec, g: Graph, e_star: str,
                        cfg: TrialConfig = TrialConfig()) -> AxiomCheckResult:
    """Removing ``e*: (u, v)`` leaves unchanged every edge whose start is
    neither ``u`` nor reachable from ``u``."""
    axiom = "edge-deletion"
    g2 = delete_edge(g, e_star)
    u = g.start(e_star)
    downstream = successors(g, u) | {u}
    kept = [e for e in g.edge_order if e != e_star and g.start(e) not in downstream]
    if not kept:
        return _result(axiom, spec, Status.VACUOUS, note="every edge starts downstream")
    before, why = _scores_or_reason(spec, g, cfg)
    after, why2 = (None, None) if why else _scores_or_reason(spec, g2, cfg)
    if why or why2:
        return _result(axiom, spec, Status.SKIPPED, note=f"out of class: {why or why2}")
    return _compare(axiom, spec, g, {"edge": e_star},
                    {e: before[e] for e in kept}, after, cfg)


def check_edge_multiplication(spec: MeasureSpec, g: Graph, e_star: str,
                              cfg: TrialConfig = TrialConfig()) -> AxiomCheckResult:
    """When every out-edge of ``u`` is a parallel copy of ``e*: (u, v)``,
    dropping all copies but ``e*`` multiplies its score by ``outdeg(u)``
    and leaves the rest unchanged."""
    axiom = "edge-multiplication"
    g2 = collapse_parallel(g, e_star)  # raises unless the precondition holds
    k = g.out_degree(g.start(e_star))
    before, why = _scores_or_reason(spec, g, cfg)
    after, why2 = (None, None) if why else _scores_or_reason(spec, g2, cfg)
    if why or why2:
        return _result(axiom, spec, Status.SKIPPED, note=f"out of class: {why or why2}")
    expected = {e: before[e] for e in g2.edge_order}
    expected[e_star] = None if before[e_star] is None else k * before[e_star]
    return _compare(axiom, spec, g, {"edge": e_star, "copies": k}, expected, after, cfg)


def check_edge_swap(spec: MeasureSpec, g: Graph, e1: str, e2: str,
                    cfg: TrialConfig = TrialConfig(),
                    before: EdgeScores | None = None) -> AxiomCheckResult:
    """Swapping the ends of two equally scored edges changes no score.

    ``before`` may pass in precomputed scores of ``g``.
    """
    axiom = "edge-swap"
    g2 = swap_ends(g, e1, e2)
    if before is None:
        before, why = _scores_or_reason(spec, g, cfg)
        if why:
            return _result(axiom, spec, Status.SKIPPED, note=f"out of class: {why}")
    f1, f2 = before[e1], before[e2]
    if f1 is None or f2 is None or abs(f1 - f2) > cfg.tol_pre:
        return _result(axiom, spec, Status.SKIPPED, note="scores of the pair differ")
    after, why = _scores_or_reason(spec, g2, cfg)
    if why:
        return _result(axiom, spec, Status.SKIPPED, note=f"out of class: {why}")
    return _compare(axiom, spec, g, {"e1": e1, "e2": e2}, dict(before), after, cfg)


def check_node_redirect(spec: MeasureSpec, g: Graph, u: str, w: str,
                        cfg: TrialConfig = TrialConfig()) -> AxiomCheckResult:
    """Redirecting ``u`` into its out-twin ``w`` adds the score of each
    out-edge of ``u`` onto its partner out-edge of ``w``; all other edges
    keep their scores."""
    axiom = "node-redirect"
    twins = out_twin_witness(g, u, w)
    if twins is None:
        raise GraphError(f"{u!r} and {w!r} are not out-twins")
    g2 = redirect(g, u, w)
    before, why = _scores_or_reason(spec, g, cfg)
    after, why2 = (None, None) if why else _scores_or_reason(spec, g2, cfg)
    if why or why2:
        return _result(axiom, spec, Status.SKIPPED, note=f"out of class: {why or why2}")
    expected = {e: before[e] for e in g2.edge_order}
    for eu, ew in twins.pairs:
        a, b = before[ew], before[eu]
        expected[ew] = None if a is None or b is None else a + b
    params = {"u": u, "w": w, "pairs": [list(p) for p in twins.pairs]}
    return _compare(axiom, spec, g, params, expected, after, cfg)


def check_baseline(spec: MeasureSpec, g: Graph, e: str,
                   cfg: TrialConfig = TrialConfig()) -> AxiomCheckResult:
    """An isolated edge scores the weight of its start."""
    axiom = "baseline"
    if edge_role(g, e) is not EdgeRole.ISOLATED_EDGE:
        raise GraphError(f"{e!r} is not an isolated edge")
    before, why = _scores_or_reason(spec, g, cfg)
    if why:
        # a graph with an isolated edge is never strongly connected
        status = Status.VACUOUS if spec.graph_class == "strongly-connected" else Status.SKIPPED
        return _result(axiom, spec, status, note=f"out of class: {why}")
    want = g.weight(g.start(e))
    got = before[e]
    if got is None:
        return _result(axiom, spec, Status.UNDEFINED,
                       witness=_witness(g, {"edge": e}, {e: {"expected": want, "actual": "undefined"}}),
                       note=f"score of isolated edge {e} is undefined")
    return _compare(axiom, spec, g, {"edge": e}, {e: want}, before, cfg)


def run_check(spec: MeasureSpec, axiom: str, g: Graph, site: tuple,
              cfg: TrialConfig = TrialConfig()) -> AxiomCheckResult:
    """Dispatch on the axiom name; ``site`` holds the check's label arguments."""
    fn = {
        "node-deletion": check_node_deletion,
        "edge-deletion": check_edge_deletion,
        "edge-multiplication": check_edge_multiplication,
        "edge-swap": check_edge_swap,
        "node-redirect": check_node_redirect,
        "baseline": check_baseline,
    }.get(axiom)
    if fn is None:
        raise ValueError(f"unknown axiom {axiom!r}")
    return fn(spec, g, *site, cfg=cfg)
