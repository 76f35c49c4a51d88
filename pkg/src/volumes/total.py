from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import sympy

from src.amplitude.graph_sum import compute_W
from src.enumeration.generate import MarkedGraphClass, generate_by_type
from src.errors import InvalidProfile
from src.events import emit_event
from src.ribbon.types import GraphType, check_stable
from src.utils.parallel import parallel_map
from src.volumes.fiber import (
    VolumeValue,
    cell_fiber_volume,
    fiber_polytope,
    incidence_matrix,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TotalVolume:
    type: GraphType
    x: Tuple[Fraction, ...]
    y: Tuple[Fraction, ...]
    value: Fraction
    wall: bool
    classes: int


def class_weight(c: MarkedGraphClass) -> Fraction:
    """2^alpha / |Aut|."""
    return Fraction(2 ** c.type.alpha, c.aut_order)


def symmetrized_cell_volume(c: MarkedGraphClass, x: Sequence[Fraction], y: Sequence[Fraction]) -> VolumeValue:
    """(1/b!) sum over orderings of y of the fiber volume; boundary cycles carry no labels."""
    incidence = incidence_matrix(c.graph, c.marking)
    total = Fraction(0)
    wall = False
    dimension = normalization = 0
    orderings = list(itertools.permutations(y))
    for ordering in orderings:
        value = cell_fiber_volume(fiber_polytope(incidence, x, ordering))
        total += value.value
        wall = wall or value.wall
        dimension, normalization = value.dimension, value.normalization
    return VolumeValue(total / len(orderings), dimension, normalization, wall)


def _weighted_volume(job: Tuple[MarkedGraphClass, Tuple[Fraction, ...], Tuple[Fraction, ...]]) -> Tuple[Fraction, bool]:
    c, x, y = job
    value = symmetrized_cell_volume(c, x, y)
    return class_weight(c) * value.value, value.wall


def total_volume(
    t: GraphType, x: Sequence, y: Sequence = (), jobs: int = 1, max_edges: Optional[int] = None
) -> TotalVolume:
    """Combinatorial volume of type t at face perimeters x and boundary perimeters y.

    Raises:
        InvalidProfile: x or y has the wrong length or a negative entry.
    """
    check_stable(t)
    x = tuple(Fraction(v) for v in x)
    y = tuple(Fraction(v) for v in y)
    if len(x) != t.n or len(y) != t.b:
        raise InvalidProfile(f"type {t} needs {t.n} face and {t.b} boundary perimeters")
    if any(v <= 0 for v in x) or any(v < 0 for v in y):
        raise InvalidProfile("face perimeters must be positive and boundary perimeters non-negative")
    classes = generate_by_type(t, jobs=jobs, max_edges=max_edges)
    if sum(y) > sum(x):
        return TotalVolume(t, x, y, Fraction(0), False, len(classes))
    parts = parallel_map(_weighted_volume, [(c, x, y) for c in classes], jobs)
    value = sum((v for v, _ in parts), Fraction(0))
    wall = any(w for _, w in parts)
    if wall:
        logger.warning(f"Target x={x}, y={y} lies on a chamber wall of {t}; reporting the closure value")
    emit_event("volume_computed", {"type": t.label(), "value": str(value), "wall": wall})
    return TotalVolume(t, x, y, value, wall, len(classes))


def y_integrated_volume(t: GraphType, max_edges: Optional[int] = None) -> Fraction:
    """C with the integral of Vol(x, y) over all y >= 0 equal to C x^(E-1), for n = 1.

    With a single face every edge meets the face row, so integrating out y
    leaves the simplex {l >= 0 : sum a_e l_e = x} and each class gives
    2^alpha / |Aut| / ((E-1)! prod_e a_e).

    Raises:
        InvalidProfile: t has more than one face.
    """
    if t.n != 1:
        raise InvalidProfile(f"y-integration in closed form needs one face, {t} has {t.n}")
    total = Fraction(0)
    for c in generate_by_type(t, max_edges=max_edges):
        face_row = incidence_matrix(c.graph, c.marking).rows[0]
        total += class_weight(c) / (math.factorial(t.edges - 1) * math.prod(face_row))
    return total


@dataclass(frozen=True)
class LaplaceIdentity:
    type: GraphType
    coefficient: Fraction
    transform: str
    w: str
    matches: bool


def laplace_exact(t: GraphType, max_edges: Optional[int] = None) -> LaplaceIdentity:
    """Symbolic Laplace transform of the y-integrated volume against W, for n = 1."""
    coefficient = y_integrated_volume(t, max_edges)
    x, lam = sympy.symbols("x l1", positive=True)
    density = sympy.Rational(coefficient.numerator, coefficient.denominator) * x ** (t.edges - 1)
    transform = sympy.simplify(sympy.integrate(density * sympy.exp(-lam * x), (x, 0, sympy.oo)))

    w = compute_W(t, max_edges=max_edges).laurent
    expected = sympy.Integer(0)
    for (m,), coeff in w.terms:
        value = coeff.evaluate({"Q": 1, "hbar": 1})
        expected += sympy.Rational(value.numerator, value.denominator) * lam ** (-m)
    matches = sympy.simplify(transform - expected) == 0
    return LaplaceIdentity(t, coefficient, str(transform), str(expected), bool(matches))


def volume_scaling_defect(t: GraphType, x: Sequence, y: Sequence, s: Fraction) -> Fraction:
    """Vol(sx, sy) - s^(E-n-b) Vol(x, y); zero off chamber walls."""
    s = Fraction(s)
    base = total_volume(t, x, y).value
    scaled = total_volume(t, [s * Fraction(v) for v in x], [s * Fraction(v) for v in y]).value
    return scaled - s ** (t.edges - t.n - t.b) * base
