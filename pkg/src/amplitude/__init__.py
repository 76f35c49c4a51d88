from src.amplitude.graph_sum import (
    EdgeWeight,
    WTable,
    check_w_invariants,
    compute_W,
    edge_weight,
    graph_amplitude,
    sum_amplitudes,
)

__all__ = [
    "EdgeWeight",
    "WTable",
    "check_w_invariants",
    "compute_W",
    "edge_weight",
    "graph_amplitude",
    "sum_amplitudes",
]
