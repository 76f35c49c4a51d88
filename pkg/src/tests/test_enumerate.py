from fractions import Fraction

import pytest

from src.enumeration.canonical import (
    automorphism_order,
    automorphisms,
    brute_force_automorphism_order,
    canonical_code,
    canonical_form,
)
from src.enumeration.generate import generate_by_profile, generate_by_type, rooted_pairings, trivalent_maps
from src.errors import BoundExceeded, UnstableType
from src.ribbon.graph import FaceMarking, validate
from src.ribbon.types import GraphType, VertexProfile, graph_type, profile_of, stable_types


def test_rooted_maps_on_two_vertices():
    """Five rooted maps fall into three unrooted ones."""
    assert len(rooted_pairings(2)) == 5
    maps = trivalent_maps(2)
    assert len(maps) == 3
    assert sum(Fraction(6, len(m.automorphisms)) for m in maps) == 5


def test_odd_vertex_count_has_no_maps():
    """Trivalent maps need an even number of vertices."""
    assert rooted_pairings(3) == []


def test_canonical_code_ignores_labels(theta, chord_graph):
    """Relabeling half-edges does not change the code."""
    for graph, marking in (theta, chord_graph):
        order = tuple(reversed(range(graph.h)))
        assert canonical_code(graph) == canonical_code(graph.relabel(order))


def test_canonical_code_separates_genus(theta, genus_one_theta):
    """Planar and toroidal theta graphs are different maps."""
    assert canonical_code(theta[0]) != canonical_code(genus_one_theta[0])


def test_automorphism_orders_agree_with_brute_force(
    theta, genus_one_theta, boundary_dumbbell, dumbbell_with_boundary_loop, chord_graph
):
    """Root counting and propagation give the same |Aut|."""
    for graph, marking in (theta, genus_one_theta, boundary_dumbbell, dumbbell_with_boundary_loop, chord_graph):
        assert automorphism_order(graph, marking) == brute_force_automorphism_order(graph, marking)
        assert automorphism_order(graph) == brute_force_automorphism_order(graph)


def test_worked_automorphism_orders(genus_one_theta, boundary_dumbbell):
    """The toroidal theta has 6 automorphisms, the boundary dumbbell 2."""
    assert automorphism_order(*genus_one_theta) == 6
    assert automorphism_order(*boundary_dumbbell) == 2
    group = automorphisms(*boundary_dumbbell)
    assert group[0] == tuple(range(6))
    assert len(group) == 2


def test_canonical_form_is_fixed(chord_graph):
    """The canonical representative is its own canonical form."""
    form = canonical_form(*chord_graph)
    again = canonical_form(validate(form.graph), form.marking)
    assert again.code == form.code
    assert again.graph == form.graph


def test_two_boundaries_one_face():
    """((0,2),1) has one class with |Aut| = 2."""
    classes = generate_by_type(GraphType(0, 2, 1))
    assert [c.aut_order for c in classes] == [2]


def test_one_boundary_two_faces():
    """((0,1),2) has three face-marked classes, all rigid."""
    classes = generate_by_type(GraphType(0, 1, 2))
    assert len(classes) == 3
    assert all(c.aut_order == 1 for c in classes)


def test_torus_one_face():
    """((1,0),1) is the toroidal theta alone."""
    classes = generate_by_type(GraphType(1, 0, 1))
    assert [c.aut_order for c in classes] == [6]


def test_classes_have_requested_type():
    """Every class of every type up to E = 6 re-derives its type and is sorted by code."""
    for t in stable_types(6):
        classes = generate_by_type(t)
        assert classes, t
        codes = [c.code for c in classes]
        assert codes == sorted(codes)
        assert len(set(codes)) == len(codes)
        for c in classes:
            assert graph_type(c.graph) == t
            assert c.graph.is_trivalent()
            assert canonical_code(c.graph, c.marking) == c.code


def test_profile_enumeration():
    """Profile [0,2] is the boundary dumbbell; odd profiles are empty."""
    classes = generate_by_profile(VertexProfile.from_sequence([0, 2]))
    assert len(classes) == 1
    assert profile_of(classes[0].graph) == VertexProfile.from_sequence([0, 2])
    assert generate_by_profile(VertexProfile.from_sequence([1])) == []


def test_bounds_and_stability():
    """Unstable types and types beyond the edge bound are refused."""
    with pytest.raises(UnstableType):
        generate_by_type(GraphType(0, 1, 1))
    with pytest.raises(BoundExceeded):
        generate_by_type(GraphType(0, 0, 6))


def test_jobs_do_not_change_output():
    """A process pool returns the same classes in the same order."""
    t = GraphType(0, 1, 3)
    serial = generate_by_type(t, jobs=1)
    pooled = generate_by_type(t, jobs=2)
    assert [(c.code, c.aut_order) for c in serial] == [(c.code, c.aut_order) for c in pooled]


@pytest.mark.slow
def test_classes_up_to_nine_edges():
    """Enumeration succeeds for every type with E <= 9."""
    for t in stable_types(9):
        for c in generate_by_type(t):
            assert graph_type(c.graph) == t


def test_automorphism_orders_agree_on_every_small_class():
    """Brute-force propagation matches root counting for each class with |h| <= 12."""
    for t in stable_types(6):
        for c in generate_by_type(t):
            assert c.aut_order == brute_force_automorphism_order(c.graph, c.marking), t
            assert automorphism_order(c.graph, c.marking) == c.aut_order


def test_swapping_theta_colors_gives_one_class(theta):
    """Theta faces are permuted by automorphisms, so markings (1,2,3) and (2,1,3) agree."""
    graph, _ = theta
    reps = [c[0] for c in graph.face_cycles]
    first = FaceMarking.from_pairs(zip(reps, (1, 2, 3)))
    swapped = FaceMarking.from_pairs(zip(reps, (2, 1, 3)))
    assert canonical_code(graph, first) == canonical_code(graph, swapped)
