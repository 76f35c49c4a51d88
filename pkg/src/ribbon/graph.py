from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple, Union

from src.errors import (
    BoundaryNotClosed,
    FixedPointInvolution,
    InvalidGraph,
    InvalidMarking,
    InvalidPermutation,
    InvariantViolation,
    LowDegreeVertex,
    NotInvolution,
    PartnerInBoundary,
)

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]
Cycle = Tuple[int, ...]
Length = Union[Fraction, float, int]


def cycles(perm: Sequence[int]) -> List[Cycle]:
    """Disjoint cycles of a permutation given as an image array.

    Each cycle starts at its minimal element; cycles are sorted by it.
    """
    seen = [False] * len(perm)
    result = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = perm[x]
        result.append(tuple(cycle))
    return result


def inverse(perm: Sequence[int]) -> Permutation:
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    return tuple(inv)


@dataclass(frozen=True)
class RibbonGraph:
    """Half-edges 0..H-1 with vertex rotation sigma0, edge involution sigma1
    and boundary half-edges B. Faces and boundaries are the cycles of
    sigma2 = sigma0^-1 o sigma1.
    """

    sigma0: Permutation
    sigma1: Permutation
    boundary: FrozenSet[int] = frozenset()
    checked: bool = field(default=False, compare=False)

    @property
    def h(self) -> int:
        return len(self.sigma0)

    @cached_property
    def sigma2(self) -> Permutation:
        inv0 = inverse(self.sigma0)
        return tuple(inv0[self.sigma1[x]] for x in range(self.h))

    @cached_property
    def vertices(self) -> List[Cycle]:
        return cycles(self.sigma0)

    @cached_property
    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (x, sigma1(x)) with x the smaller half, sorted."""
        return [(x, self.sigma1[x]) for x in range(self.h) if x < self.sigma1[x]]

    @cached_property
    def sigma2_cycles(self) -> List[Cycle]:
        return cycles(self.sigma2)

    @cached_property
    def face_cycles(self) -> List[Cycle]:
        return [c for c in self.sigma2_cycles if c[0] not in self.boundary]

    @cached_property
    def boundary_cycles(self) -> List[Cycle]:
        return [c for c in self.sigma2_cycles if c[0] in self.boundary]

    @cached_property
    def cycle_of(self) -> Tuple[int, ...]:
        """Minimal representative of the sigma2-cycle of every half-edge."""
        rep = [0] * self.h
        for cycle in self.sigma2_cycles:
            for x in cycle:
                rep[x] = cycle[0]
        return tuple(rep)

    def edge_index(self) -> Dict[int, int]:
        """Half-edge -> position of its edge in `edges`."""
        index = {}
        for k, (x, y) in enumerate(self.edges):
            index[x] = k
            index[y] = k
        return index

    def is_boundary_edge(self, edge: Tuple[int, int]) -> bool:
        x, y = edge
        return (x in self.boundary) != (y in self.boundary)

    def is_trivalent(self) -> bool:
        return all(len(v) == 3 for v in self.vertices)

    def euler_characteristic(self) -> int:
        """V - E + (faces + boundary cycles) of the closed surface."""
        return len(self.vertices) - self.h // 2 + len(self.sigma2_cycles)

    def relabel(self, order: Sequence[int]) -> RibbonGraph:
        """Graph with half-edge order[k] renamed to k."""
        new_of = {old: new for new, old in enumerate(order)}
        sigma0 = tuple(new_of[self.sigma0[old]] for old in order)
        sigma1 = tuple(new_of[self.sigma1[old]] for old in order)
        boundary = frozenset(new_of[x] for x in self.boundary)
        return RibbonGraph(sigma0, sigma1, boundary, checked=self.checked)


@dataclass(frozen=True)
class FaceMarking:
    """Bijection from face cycles (by minimal half-edge) to colors 1..n."""

    assignment: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> FaceMarking:
        return cls(tuple(sorted((int(r), int(c)) for r, c in pairs)))

    @classmethod
    def sequential(cls, graph: RibbonGraph) -> FaceMarking:
        """Color faces 1..n in order of their minimal half-edge."""
        return cls(tuple((c[0], k) for k, c in enumerate(graph.face_cycles, start=1)))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def color_of(self) -> Dict[int, int]:
        return dict(self.assignment)

    def half_edge_colors(self, graph: RibbonGraph) -> Tuple[int, ...]:
        """Color of the face containing each half-edge, 0 on boundary half-edges."""
        colors = self.color_of()
        return tuple(colors.get(rep, 0) for rep in graph.cycle_of)


@dataclass(frozen=True)
class MetricAssignment:
    """Positive edge lengths, indexed like RibbonGraph.edges."""

    lengths: Tuple[Length, ...]

    def __post_init__(self):
        if any(not value > 0 for value in self.lengths):
            raise InvalidGraph("edge lengths must be positive", invariant="positive-metric")


def _check_permutation(perm: Sequence[int], h: int, name: str) -> None:
    if len(perm) != h or sorted(perm) != list(range(h)):
        raise InvalidPermutation(f"{name} is not a permutation of 0..{h - 1}")


def validate(raw: RibbonGraph) -> RibbonGraph:
    """Check the ribbon-graph-with-boundary conditions and tag the graph valid.

    Raises:
        InvalidPermutation, FixedPointInvolution, NotInvolution,
        PartnerInBoundary, BoundaryNotClosed, LowDegreeVertex
    """
    h = raw.h
    _check_permutation(raw.sigma0, h, "sigma0")
    _check_permutation(raw.sigma1, h, "sigma1")
    if any(x < 0 or x >= h for x in raw.boundary):
        raise InvalidPermutation("boundary contains a label outside 0..H-1")

    for x in range(h):
        if raw.sigma1[x] == x:
            raise FixedPointInvolution(f"sigma1 fixes half-edge {x}")
        if raw.sigma1[raw.sigma1[x]] != x:
            raise NotInvolution(f"sigma1 is not an involution at {x}")

    for x in sorted(raw.boundary):
        if raw.sigma1[x] in raw.boundary:
            raise PartnerInBoundary(f"edge ({x}, {raw.sigma1[x]}) has both halves in B")

    for x in sorted(raw.boundary):
        if raw.sigma2[x] not in raw.boundary:
            raise BoundaryNotClosed(f"sigma2 maps {x} in B to {raw.sigma2[x]} outside B")

    for vertex in raw.vertices:
        if len(vertex) < 3:
            raise LowDegreeVertex(f"vertex {vertex} has degree {len(vertex)}")

    return replace(raw, checked=True)


def validate_marking(graph: RibbonGraph, marking: FaceMarking) -> FaceMarking:
    reps = sorted(c[0] for c in graph.face_cycles)
    given = [r for r, _ in marking.assignment]
    if sorted(given) != reps:
        raise InvalidMarking(f"marking covers {sorted(given)}, faces are {reps}")
    colors = sorted(c for _, c in marking.assignment)
    if colors != list(range(1, len(reps) + 1)):
        raise InvalidMarking(f"colors {colors} are not a bijection onto 1..{len(reps)}")
    return marking


def is_connected(graph: RibbonGraph) -> bool:
    """True iff <sigma0, sigma1> acts transitively on the half-edges."""
    if graph.h == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (graph.sigma0[x], graph.sigma1[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == graph.h


def perimeters(
    graph: RibbonGraph, marking: FaceMarking, metric: MetricAssignment
) -> Tuple[Tuple[Length, ...], Tuple[Length, ...]]:
    """Face perimeters x (by color) and boundary perimeters y (by min rep).

    An edge traversed twice by a cycle counts twice.
    """
    if len(metric.lengths) != len(graph.edges):
        raise InvalidGraph(
            f"{len(metric.lengths)} lengths for {len(graph.edges)} edges", invariant="metric-size"
        )
    index = graph.edge_index()

    def length(cycle: Cycle) -> Length:
        return sum((metric.lengths[index[x]] for x in cycle), start=0)

    colors = marking.color_of()
    faces = sorted(graph.face_cycles, key=lambda c: colors[c[0]])
    x = tuple(length(c) for c in faces)
    y = tuple(length(c) for c in graph.boundary_cycles)
    if sum(y) > sum(x):
        raise InvariantViolation("perimeter-inequality", f"sum(y)={sum(y)} > sum(x)={sum(x)}")
    return x, y
