import json

import pytest
from pydantic import ValidationError

from src.errors import (
    FixedPointInvolution,
    InvalidGraph,
    InvalidMarking,
    InvalidPermutation,
    InvalidProfile,
    LowDegreeVertex,
    NotInvolution,
    PartnerInBoundary,
    UnstableType,
)
from src.ribbon import to_dot
from src.ribbon.blowup import ProfileGraph, blow_up, standard_profile_graph
from src.ribbon.graph import (
    FaceMarking,
    MetricAssignment,
    RibbonGraph,
    cycles,
    inverse,
    is_connected,
    perimeters,
    validate,
    validate_marking,
)
from src.ribbon.interchange import graph_from_interchange, graph_to_interchange
from src.ribbon.types import GraphType, VertexProfile, check_stable, graph_type, profile_of, stable_types

THETA_SIGMA0 = (1, 2, 0, 4, 5, 3)


def test_cycles_start_at_minimum():
    """Each cycle starts at its smallest element and cycles are sorted."""
    assert cycles((1, 2, 0, 4, 5, 3)) == [(0, 1, 2), (3, 4, 5)]
    assert inverse((1, 2, 0)) == (2, 0, 1)


def test_theta_faces(theta):
    """The planar theta graph has three faces of length two."""
    graph, marking = theta
    assert graph.vertices == [(0, 1, 2), (3, 4, 5)]
    assert len(graph.face_cycles) == 3
    assert all(len(c) == 2 for c in graph.face_cycles)
    assert graph_type(graph) == GraphType(0, 0, 3)
    assert marking.n == 3


def test_worked_types(genus_one_theta, boundary_dumbbell, dumbbell_with_boundary_loop, chord_graph):
    """Euler count recovers the type of every worked graph."""
    assert graph_type(genus_one_theta[0]) == GraphType(1, 0, 1)
    assert graph_type(boundary_dumbbell[0]) == GraphType(0, 2, 1)
    assert graph_type(dumbbell_with_boundary_loop[0]) == GraphType(0, 1, 2)
    assert graph_type(chord_graph[0]) == GraphType(0, 1, 2)


def test_euler_characteristic(theta, genus_one_theta, boundary_dumbbell):
    """Sphere 2, torus 0; boundary cycles count as faces."""
    assert theta[0].euler_characteristic() == 2
    assert genus_one_theta[0].euler_characteristic() == 0
    assert boundary_dumbbell[0].euler_characteristic() == 2


def test_boundary_partner_rejected():
    """Both halves of an edge in B is not a valid boundary."""
    with pytest.raises(PartnerInBoundary):
        validate(RibbonGraph(THETA_SIGMA0, (3, 5, 4, 0, 2, 1), frozenset({0, 3})))


def test_invalid_permutations():
    """Malformed sigma0 or sigma1 are rejected with the matching error."""
    with pytest.raises(InvalidPermutation):
        validate(RibbonGraph((0, 0, 1), (1, 0, 2)))
    with pytest.raises(FixedPointInvolution):
        validate(RibbonGraph(THETA_SIGMA0, (0, 5, 4, 3, 2, 1)))
    with pytest.raises(NotInvolution):
        validate(RibbonGraph(THETA_SIGMA0, (1, 2, 3, 4, 5, 0)))


def test_low_degree_vertex():
    """A vertex of degree two is not allowed."""
    with pytest.raises(LowDegreeVertex):
        validate(RibbonGraph((1, 0), (1, 0)))


def test_marking_must_be_bijection(theta):
    """A marking that repeats a color is rejected."""
    graph, _ = theta
    reps = [c[0] for c in graph.face_cycles]
    with pytest.raises(InvalidMarking):
        validate_marking(graph, FaceMarking.from_pairs([(reps[0], 1), (reps[1], 1), (reps[2], 2)]))


def test_perimeters_of_dumbbell(boundary_dumbbell):
    """Unit edges give face perimeter 4 and boundary loops of length 1."""
    graph, marking = boundary_dumbbell
    x, y = perimeters(graph, marking, MetricAssignment((1, 1, 1)))
    assert x == (4,)
    assert y == (1, 1)


def test_perimeters_respect_inequality(dumbbell_with_boundary_loop):
    """A boundary longer than all faces together cannot occur."""
    graph, marking = dumbbell_with_boundary_loop
    x, y = perimeters(graph, marking, MetricAssignment((1, 1, 1)))
    assert sum(y) <= sum(x)
    with pytest.raises(InvalidGraph):
        MetricAssignment((0, 1, 1))


def test_boundary_edges_count_once_on_each_side(boundary_dumbbell, dumbbell_with_boundary_loop, chord_graph):
    """sum(x) - sum(y) is twice the internal length, so equality needs no internal edges."""
    for graph, marking in (boundary_dumbbell, dumbbell_with_boundary_loop, chord_graph):
        lengths = tuple(range(2, 2 + len(graph.edges)))
        x, y = perimeters(graph, marking, MetricAssignment(lengths))
        internal = sum(l for e, l in zip(graph.edges, lengths) if not graph.is_boundary_edge(e))
        boundary = sum(l for e, l in zip(graph.edges, lengths) if graph.is_boundary_edge(e))
        assert sum(y) == boundary
        assert sum(x) - sum(y) == 2 * internal
        assert internal > 0 and sum(y) < sum(x)


def test_unstable_types():
    """((0,0),1), ((0,0),2) and ((0,1),1) are unstable."""
    for t in (GraphType(0, 0, 1), GraphType(0, 0, 2), GraphType(0, 1, 1)):
        with pytest.raises(UnstableType):
            check_stable(t)
    assert check_stable(GraphType(0, 0, 3)).edges == 3


def test_stable_types_sorted_by_edges():
    """Types up to E = 3 are the four smallest ones."""
    assert stable_types(3) == [GraphType(0, 0, 3), GraphType(0, 1, 2), GraphType(0, 2, 1), GraphType(1, 0, 1)]


def test_profile_arithmetic():
    """|h|, reduced counts and |G| follow from d and b_j."""
    profile = VertexProfile.from_sequence([2, 0, 1])
    assert profile.half_edges == 8
    assert profile.reduced_vertices == 4
    assert profile.reduced_edges == 6
    assert profile.group_order() == 2 * 9 * 2
    assert profile.label() == "[2,0,1]"
    with pytest.raises(InvalidProfile):
        VertexProfile.from_sequence([-1])


def test_blow_up_restores_boundary_dumbbell():
    """Two degree-one boundary vertices paired together blow up to type ((0,2),1)."""
    profile = VertexProfile.from_sequence([0, 2])
    blown = blow_up(standard_profile_graph(profile, (1, 0)))
    assert graph_type(blown.graph) == GraphType(0, 2, 1)
    assert profile_of(blown.graph) == profile
    assert len(blown.weight_transfer) == 2


def test_blow_up_four_valent_vertex():
    """One degree-4 boundary vertex with legs paired in two edges becomes a boundary 4-cycle."""
    profile = VertexProfile.from_sequence([0, 0, 0, 0, 1])
    blown = blow_up(standard_profile_graph(profile, (1, 0, 3, 2)))
    graph = blown.graph
    assert graph.is_trivalent()
    assert [len(c) for c in graph.boundary_cycles] == [4]
    assert len(blown.weight_transfer) == 4
    assert profile_of(graph) == profile
    assert graph.h == 4 + 8


def test_blow_up_without_boundary_vertices_is_identity():
    """d = 2 and nothing to expand: the theta graph comes back unchanged."""
    sigma1 = (3, 5, 4, 0, 2, 1)
    blown = blow_up(standard_profile_graph(VertexProfile.from_sequence([2]), sigma1))
    assert blown.graph == RibbonGraph(THETA_SIGMA0, sigma1)
    assert blown.weight_transfer == ()


def test_blow_up_rejects_bad_pairing():
    """A pairing with a fixed point cannot be blown up."""
    with pytest.raises(InvalidProfile):
        blow_up(ProfileGraph((1, 2, 0), (0, 1, 2)))


def test_interchange_roundtrip(chord_graph):
    """A written record reads back as the same graph and marking."""
    graph, marking = chord_graph
    record = graph_to_interchange(graph, marking, aut_order=1, type_label="((0,1),2)")
    again, again_marking = graph_from_interchange(record.model_dump_json())
    assert again == graph
    assert again_marking == marking
    assert json.loads(record.model_dump_json())["boundary"] == [0, 5]


def test_interchange_rejects_short_permutation():
    """sigma arrays must have half_edges entries."""
    with pytest.raises(ValidationError):
        graph_from_interchange({"half_edges": 6, "sigma0": [1, 2, 0], "sigma1": [1, 0, 2]})


def test_dot_dashes_boundary_edges(boundary_dumbbell):
    """Boundary edges are dashed and labeled b on their boundary side."""
    graph, marking = boundary_dumbbell
    text = to_dot(graph, marking, "dumbbell")
    assert text.startswith('graph "dumbbell" {')
    assert text.count("style=dashed") == 2
    assert 'label="b|1"' in text


def test_connectivity(theta):
    """The theta graph is connected; two disjoint thetas are not."""
    graph, _ = theta
    assert is_connected(graph)
    doubled = RibbonGraph(
        graph.sigma0 + tuple(x + 6 for x in graph.sigma0),
        graph.sigma1 + tuple(x + 6 for x in graph.sigma1),
    )
    assert not is_connected(doubled)
