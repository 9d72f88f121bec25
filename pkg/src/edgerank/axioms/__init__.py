"""Axiom checks, proof fixtures and randomized falsification."""
from .checks import (
    AXIOMS,
    AxiomCheckResult,
    Status,
    TrialConfig,
    check_baseline,
    check_edge_deletion,
    check_edge_multiplication,
    check_edge_swap,
    check_node_deletion,
    check_node_redirect,
    run_check,
)
from .fixtures import FIXTURES, Fixture, estimate_decay_factor, fixtures
from .search import (
    EXPECTED_VERDICTS,
    SatisfactionMatrix,
    SearchReport,
    enumerate_sites,
    falsify,
    random_graph,
    satisfaction_matrix,
    search,
    verdict_matches,
)

__all__ = [
    "AXIOMS",
    "AxiomCheckResult",
    "Status",
    "TrialConfig",
    "check_baseline",
    "check_edge_deletion",
    "check_edge_multiplication",
    "check_edge_swap",
    "check_node_deletion",
    "check_node_redirect",
    "run_check",
    "FIXTURES",
    "Fixture",
    "estimate_decay_factor",
    "fixtures",
    "EXPECTED_VERDICTS",
    "SatisfactionMatrix",
    "SearchReport",
    "enumerate_sites",
    "falsify",
    "random_graph",
    "satisfaction_matrix",
    "search",
    "verdict_matches",
]
