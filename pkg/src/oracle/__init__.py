from src.oracle.audit import AuditResult, orbit_stabilizer_audit
from src.oracle.compare import (
    ComparisonReport,
    compare_oracle,
    compare_profiles,
    graph_side_profile_F,
    graph_side_profile_tau,
)
from src.oracle.wick import (
    PairingConfig,
    coloring_sum,
    correlator,
    oracle_degree_laurent,
    pairings,
    profile_term,
    propagator,
    tau_coefficients_oracle,
)

__all__ = [
    "AuditResult",
    "ComparisonReport",
    "PairingConfig",
    "coloring_sum",
    "compare_oracle",
    "compare_profiles",
    "correlator",
    "graph_side_profile_F",
    "graph_side_profile_tau",
    "oracle_degree_laurent",
    "orbit_stabilizer_audit",
    "pairings",
    "profile_term",
    "propagator",
    "tau_coefficients_oracle",
]
