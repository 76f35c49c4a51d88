from src.ribbon.blowup import BlowUp, ProfileGraph, blow_up, standard_profile_graph
from src.ribbon.dot import to_dot
from src.ribbon.graph import (
    FaceMarking,
    MetricAssignment,
    RibbonGraph,
    cycles,
    is_connected,
    perimeters,
    validate,
    validate_marking,
)
from src.ribbon.interchange import GraphRecord, graph_from_interchange, graph_to_interchange
from src.ribbon.types import (
    GraphType,
    VertexProfile,
    check_stable,
    graph_type,
    profile_of,
    profiles_up_to,
    stable_types,
)

__all__ = [
    "BlowUp",
    "FaceMarking",
    "GraphRecord",
    "GraphType",
    "MetricAssignment",
    "ProfileGraph",
    "RibbonGraph",
    "VertexProfile",
    "blow_up",
    "check_stable",
    "cycles",
    "graph_from_interchange",
    "graph_to_interchange",
    "graph_type",
    "is_connected",
    "perimeters",
    "profile_of",
    "profiles_up_to",
    "stable_types",
    "standard_profile_graph",
    "to_dot",
    "validate",
    "validate_marking",
]
