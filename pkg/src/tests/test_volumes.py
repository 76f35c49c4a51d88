from fractions import Fraction

import pytest

from src.enumeration.generate import generate_by_type
from src.errors import DegenerateFiber, InvalidProfile
from src.ribbon.types import GraphType
from src.volumes import (
    IncidenceMatrix,
    cell_fiber_volume,
    fiber_polytope,
    incidence_matrix,
    laplace_check,
    laplace_exact,
    polytope_volume,
    total_volume,
    volume_scaling_defect,
    y_integrated_volume,
)
from src.volumes.fiber import polytope_vertices, split_incidence


def test_incidence_of_dumbbell(boundary_dumbbell):
    """The face runs twice along the bar; each loop is a boundary row."""
    incidence = incidence_matrix(*boundary_dumbbell)
    assert incidence.rows == ((1, 1, 2), (1, 0, 0), (0, 1, 0))
    assert (incidence.faces, incidence.boundaries) == (1, 2)


def test_incidence_of_theta(theta):
    """Each face of the theta graph meets two edges once; |det A| = 2."""
    incidence = incidence_matrix(*theta)
    assert sorted(incidence.rows) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert split_incidence(incidence)[3] == 2


def test_point_fibers(theta, boundary_dumbbell):
    """Square incidence matrices give fibers of volume 1 / |det A|."""
    assert cell_fiber_volume(fiber_polytope(incidence_matrix(*theta), (2, 2, 2))).value == Fraction(1, 2)
    value = cell_fiber_volume(fiber_polytope(incidence_matrix(*boundary_dumbbell), (4,), (1, 1)))
    assert value.value == Fraction(1, 2)
    assert not value.wall


def test_empty_point_fiber(boundary_dumbbell):
    """Boundaries longer than the face leave nothing."""
    value = cell_fiber_volume(fiber_polytope(incidence_matrix(*boundary_dumbbell), (2,), (2, 1)))
    assert value.value == 0


def test_dependent_rows():
    """Repeated rows cannot be perimeter coordinates."""
    with pytest.raises(DegenerateFiber):
        split_incidence(IncidenceMatrix(((1, 1, 0), (1, 1, 0)), 2, 0))


def test_simplex_volume():
    """{z >= 0, z1 + z2 <= 1} has area 1/2."""
    constraints = [((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)]
    assert polytope_volume(
        [(tuple(map(Fraction, a)), Fraction(b)) for a, b in constraints], 2
    ) == (Fraction(1, 2), False)


def test_square_volume():
    """The unit square triangulates into two simplices."""
    constraints = [((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1)]
    volume, _ = polytope_volume([(tuple(map(Fraction, a)), Fraction(b)) for a, b in constraints], 2)
    assert volume == 1


def test_two_boundaries_one_face():
    """Vol((0,2),1) is 1/2 below the diagonal and 0 above it."""
    assert total_volume(GraphType(0, 2, 1), [4], [1, 1]).value == Fraction(1, 2)
    assert total_volume(GraphType(0, 2, 1), [7], [3, 1]).value == Fraction(1, 2)
    assert total_volume(GraphType(0, 2, 1), [2], [3, 1]).value == 0


def test_torus_one_face():
    """Vol((1,0),1)(x) = x^2 / 48."""
    for x in (1, 4, Fraction(3, 2)):
        assert total_volume(GraphType(1, 0, 1), [x]).value == Fraction(x) ** 2 / 48


def test_volume_arguments():
    """Wrong counts and non-positive faces are rejected."""
    with pytest.raises(InvalidProfile):
        total_volume(GraphType(0, 2, 1), [4], [1])
    with pytest.raises(InvalidProfile):
        total_volume(GraphType(1, 0, 1), [0])


def test_y_integrated_volume():
    """Integrating out y leaves x^2 / 4 and x^2 / 48."""
    assert y_integrated_volume(GraphType(0, 2, 1)) == Fraction(1, 4)
    assert y_integrated_volume(GraphType(1, 0, 1)) == Fraction(1, 48)
    with pytest.raises(InvalidProfile):
        y_integrated_volume(GraphType(0, 1, 2))


def test_laplace_identity():
    """The Laplace transform of C x^(E-1) is the W table."""
    for t in (GraphType(0, 2, 1), GraphType(1, 0, 1)):
        result = laplace_exact(t)
        assert result.matches, result


def test_scaling_is_homogeneous():
    """Off walls Vol(s x, s y) = s^(E-n-b) Vol(x, y)."""
    assert volume_scaling_defect(GraphType(0, 2, 1), [4], [1, 1], 3) == 0
    assert volume_scaling_defect(GraphType(1, 0, 1), [3], [], 2) == 0


def test_laplace_sampling_is_seeded():
    """Same seed, same estimate."""
    a = laplace_check(GraphType(0, 2, 1), [2], samples=20_000, seed=7)
    b = laplace_check(GraphType(0, 2, 1), [2], samples=20_000, seed=7)
    assert a.integral_estimate == b.integral_estimate
    assert a.w_exact == pytest.approx(1 / 16)
    assert (a.samples, a.seed) == (20_000, 7)


def test_laplace_sampling_rough():
    """A modest sample already lands within 5%."""
    report = laplace_check(GraphType(0, 1, 2), [1, 1], samples=200_000, seed=1, tolerance=0.05)
    assert report.w_exact == pytest.approx(2)
    assert report.within_tolerance


@pytest.mark.slow
def test_laplace_sampling_one_percent():
    """A million samples agree with W to 1% for ((0,1),2) and ((0,2),1)."""
    for t, lambdas in ((GraphType(0, 1, 2), [1, 1]), (GraphType(0, 2, 1), [2])):
        report = laplace_check(t, lambdas, samples=1_000_000, seed=0, tolerance=0.01)
        assert report.within_tolerance, report


def test_fiber_volume_ignores_edge_order():
    """Reordering the edge columns picks another basis but the same quotient volume."""
    x, y = (3, 4, 5), (2,)
    for c in generate_by_type(GraphType(0, 1, 3)):
        incidence = incidence_matrix(c.graph, c.marking)
        expected = cell_fiber_volume(fiber_polytope(incidence, x, y)).value
        for perm in ((5, 4, 3, 2, 1, 0), (2, 0, 4, 1, 5, 3)):
            rows = tuple(tuple(row[p] for p in perm) for row in incidence.rows)
            permuted = IncidenceMatrix(rows, incidence.faces, incidence.boundaries)
            assert cell_fiber_volume(fiber_polytope(permuted, x, y)).value == expected


def test_cube_vertices_with_redundant_rows():
    """A repeated facet does not add vertices; the unit cube still has 8 and volume 1."""
    constraints = [
        ((-1, 0, 0), 0), ((0, -1, 0), 0), ((0, 0, -1), 0),
        ((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1), ((2, 0, 0), 2),
    ]
    constraints = [(tuple(map(Fraction, a)), Fraction(b)) for a, b in constraints]
    points, tight = polytope_vertices(constraints, 3)
    assert len(points) == 8
    assert (Fraction(1), Fraction(1), Fraction(1)) in points
    assert all(len(t) >= 3 for t in tight)
    assert polytope_volume(constraints, 3)[0] == 1
