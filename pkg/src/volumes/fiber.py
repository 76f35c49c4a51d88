"""Fibers of the perimeter map as explicit polytopes.

The fiber over (x, y) is {l > 0 : A l = (x, y)}. Splitting the edges into a
basis B of columns and the rest N gives l_B = A_B^-1 ((x, y) - A_N l_N), so
the fiber is the polytope {z >= 0 : M z <= c} in the free coordinates z = l_N
with M = A_B^-1 A_N and c = A_B^-1 (x, y). The quotient measure is
|det A_B|^-1 times Lebesgue measure in z.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

import sympy

from src.errors import DegenerateFiber, InvariantViolation
from src.ribbon.graph import FaceMarking, RibbonGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Rows: faces by color, then boundary cycles; columns: edges."""

    rows: Tuple[Tuple[int, ...], ...]
    faces: int
    boundaries: int

    @property
    def edges(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def as_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.rows)


def incidence_matrix(graph: RibbonGraph, marking: FaceMarking) -> IncidenceMatrix:
    """How many times each face and boundary cycle runs along each edge.

    Raises:
        InvariantViolation: an edge column does not sum to 2.
    """
    index = graph.edge_index()
    colors = marking.color_of()
    ordered = sorted(graph.face_cycles, key=lambda c: colors[c[0]]) + list(graph.boundary_cycles)
    rows = []
    for cycle in ordered:
        row = [0] * len(graph.edges)
        for x in cycle:
            row[index[x]] += 1
        rows.append(tuple(row))
    for e in range(len(graph.edges)):
        if sum(row[e] for row in rows) != 2:
            raise InvariantViolation("incidence-columns", f"edge {graph.edges[e]} is traversed {sum(r[e] for r in rows)} times")
    return IncidenceMatrix(tuple(rows), len(graph.face_cycles), len(graph.boundary_cycles))


@dataclass(frozen=True)
class VolumeValue:
    value: Fraction
    dimension: int
    # |det A_B| of the splitting that normalizes the measure
    normalization: int
    wall: bool = False


@dataclass(frozen=True)
class FiberPolytope:
    """{z >= 0 : M z <= c} with its measure normalization."""

    matrix: Tuple[Tuple[Fraction, ...], ...]
    bound: Tuple[Fraction, ...]
    basis: Tuple[int, ...]
    free: Tuple[int, ...]
    determinant: int

    @property
    def dimension(self) -> int:
        return len(self.free)

    def constraints(self) -> List[Tuple[Tuple[Fraction, ...], Fraction]]:
        """All inequalities a . z <= b: -z_i <= 0 first, then the rows of M."""
        k = self.dimension
        out = [(tuple(Fraction(-1) if j == i else Fraction(0) for j in range(k)), Fraction(0)) for i in range(k)]
        out.extend(zip(self.matrix, self.bound))
        return out

    def edge_lengths(self, z: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        lengths = [Fraction(0)] * (len(self.basis) + len(self.free))
        for e, value in zip(self.free, z):
            lengths[e] = Fraction(value)
        for e, row, c in zip(self.basis, self.matrix, self.bound):
            lengths[e] = c - sum((a * Fraction(v) for a, v in zip(row, z)), Fraction(0))
        return tuple(lengths)


def split_incidence(incidence: IncidenceMatrix) -> Tuple[Tuple[int, ...], Tuple[int, ...], sympy.Matrix, int]:
    """Basis columns from the reduced row echelon form.

    Raises:
        DegenerateFiber: the rows are dependent, so the perimeters are not
            free coordinates.
    """
    a = incidence.as_sympy()
    _, pivots = a.rref()
    if len(pivots) < a.rows:
        raise DegenerateFiber(f"incidence rank {len(pivots)} below {a.rows} cycles")
    basis = tuple(pivots)
    free = tuple(e for e in range(a.cols) if e not in pivots)
    a_b = a.extract(list(range(a.rows)), list(basis))
    det = a_b.det()
    return basis, free, a_b, int(abs(det))


def fiber_polytope(incidence: IncidenceMatrix, x: Sequence, y: Sequence = ()) -> FiberPolytope:
    basis, free, a_b, det = split_incidence(incidence)
    a = incidence.as_sympy()
    inverse = a_b.inv()
    a_n = a.extract(list(range(a.rows)), list(free)) if free else sympy.zeros(a.rows, 0)
    m = inverse * a_n
    target = sympy.Matrix([sympy.Rational(str(Fraction(v))) for v in list(x) + list(y)])
    c = inverse * target
    matrix = tuple(tuple(_fraction(m[i, j]) for j in range(m.cols)) for i in range(m.rows))
    return FiberPolytope(matrix, tuple(_fraction(v) for v in c), basis, free, det)


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


Row = Tuple[Fraction, ...]
Point = Tuple[Fraction, ...]


def _reduce(row: Row, echelon: Sequence[Tuple[int, Row]]):
    """Row reduced against an echelon basis, as (pivot, row), or None when dependent."""
    r = list(row)
    for pivot, e in echelon:
        if r[pivot]:
            f = r[pivot]
            r = [a - f * b for a, b in zip(r, e)]
    for pivot, value in enumerate(r):
        if value:
            return pivot, tuple(a / value for a in r)
    return None


def _rank(rows: Sequence[Row]) -> int:
    echelon: List[Tuple[int, Row]] = []
    for row in rows:
        reduced = _reduce(row, echelon)
        if reduced is not None:
            echelon.append(reduced)
    return len(echelon)


def _solve(rows: Sequence[Row], rhs: Sequence[Fraction]) -> Point:
    """Gauss-Jordan solve of a nonsingular square system."""
    n = len(rows)
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col])
        m[col], m[pivot] = m[pivot], m[col]
        lead = m[col][col]
        m[col] = [v / lead for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


def _affine_rank(points: Sequence[Point]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    return _rank([tuple(p[i] - base[i] for i in range(len(base))) for p in points[1:]])


def polytope_vertices(
    constraints: Sequence[Tuple[Tuple[Fraction, ...], Fraction]], dimension: int
) -> Tuple[List[Point], List[FrozenSet[int]]]:
    """Vertices with the set of constraints tight at each.

    Constraint subsets are grown one row at a time; a prefix whose rows are
    already dependent is dropped with all its extensions, so only the
    nonsingular `dimension`-subsets are ever solved.
    """
    rows = [tuple(Fraction(v) for v in a) for a, _ in constraints]
    bounds = [Fraction(b) for _, b in constraints]
    found: Dict[Point, FrozenSet[int]] = {}

    def extend(start: int, chosen: Tuple[int, ...], echelon: List[Tuple[int, Row]]):
        if len(chosen) == dimension:
            point = _solve([rows[i] for i in chosen], [bounds[i] for i in chosen])
            if point in found:
                return
            slack = [b - sum((a * p for a, p in zip(row, point)), Fraction(0)) for row, b in zip(rows, bounds)]
            if all(s >= 0 for s in slack):
                found[point] = frozenset(i for i, s in enumerate(slack) if s == 0)
            return
        for i in range(start, len(rows) - (dimension - len(chosen)) + 1):
            reduced = _reduce(rows[i], echelon)
            if reduced is not None:
                extend(i + 1, chosen + (i,), echelon + [reduced])

    extend(0, (), [])
    points = sorted(found)
    return points, [found[p] for p in points]


def _triangulate(
    face: FrozenSet[int], dim: int, points: Sequence[Point], tight: Sequence[FrozenSet[int]], constraint_count: int
) -> List[Tuple[int, ...]]:
    """Pulling triangulation of a face given by its vertex indices."""
    if dim == 0:
        return [(min(face),)]
    apex = min(face)
    facets = set()
    for c in range(constraint_count):
        on = frozenset(v for v in face if c in tight[v])
        if apex in on or on == face or len(on) < dim:
            continue
        if _affine_rank([points[v] for v in sorted(on)]) == dim - 1:
            facets.add(on)
    simplices = []
    for facet in sorted(facets, key=sorted):
        for simplex in _triangulate(facet, dim - 1, points, tight, constraint_count):
            simplices.append((apex,) + simplex)
    return simplices


def polytope_volume(
    constraints: Sequence[Tuple[Tuple[Fraction, ...], Fraction]], dimension: int
) -> Tuple[Fraction, bool]:
    """Exact Lebesgue volume of {a . z <= b} and whether it is degenerate.

    A vertex with more than `dimension` tight constraints, or a nonempty
    lower-dimensional polytope, marks a target on a chamber wall; the value
    is then the volume of the closure.
    """
    points, tight = polytope_vertices(constraints, dimension)
    if not points:
        return Fraction(0), False
    wall = any(len(t) > dimension for t in tight)
    if _affine_rank(points) < dimension:
        return Fraction(0), True
    simplices = _triangulate(frozenset(range(len(points))), dimension, points, tight, len(constraints))
    total = sympy.Rational(0)
    for simplex in simplices:
        base = points[simplex[0]]
        rows = [[_rational(points[v][i] - base[i]) for i in range(dimension)] for v in simplex[1:]]
        total += abs(sympy.Matrix(rows).det())
    return _fraction(total / math.factorial(dimension)), wall


def cell_fiber_volume(fiber: FiberPolytope) -> VolumeValue:
    """Volume of one cell's fiber in the quotient measure; 0 for an empty fiber."""
    if fiber.dimension == 0:
        if any(c < 0 for c in fiber.bound):
            return VolumeValue(Fraction(0), 0, fiber.determinant)
        wall = any(c == 0 for c in fiber.bound)
        return VolumeValue(Fraction(1, fiber.determinant), 0, fiber.determinant, wall)
    raw, wall = polytope_volume(fiber.constraints(), fiber.dimension)
    if wall:
        logger.debug(f"Fiber target on a chamber wall; using the closure volume {raw}")
    return VolumeValue(raw / fiber.determinant, fiber.dimension, fiber.determinant, wall)
