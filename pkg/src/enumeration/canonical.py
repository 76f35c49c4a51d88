from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.ribbon.graph import FaceMarking, RibbonGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism invariant of a connected, marked ribbon graph.

    Four integers per half-edge in traversal order: sigma0 image label,
    sigma1 image label, boundary flag, face color (0 on boundary).
    """

    code: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.code)


@dataclass(frozen=True)
class CanonicalForm:
    code: CanonicalCode
    graph: RibbonGraph
    marking: FaceMarking
    aut_order: int


def traversal_order(graph: RibbonGraph, root: int) -> List[int]:
    """Breadth-first labeling from a root half-edge.

    A vertex is labeled in sigma0 order from the half-edge through which it
    is first reached; labels are then processed in order, each reaching the
    vertex of its sigma1 partner.
    """
    labeled = [False] * graph.h
    order: List[int] = []

    def discover(x: int) -> None:
        y = x
        while not labeled[y]:
            labeled[y] = True
            order.append(y)
            y = graph.sigma0[y]

    discover(root)
    position = 0
    while position < len(order):
        partner = graph.sigma1[order[position]]
        if not labeled[partner]:
            discover(partner)
        position += 1
    return order


def _code(graph: RibbonGraph, colors: Sequence[int], order: Sequence[int]) -> Tuple[int, ...]:
    label = {x: k for k, x in enumerate(order)}
    code = []
    for x in order:
        code.append(label[graph.sigma0[x]])
        code.append(label[graph.sigma1[x]])
        code.append(1 if x in graph.boundary else 0)
        code.append(colors[x])
    return tuple(code)


def _colors(graph: RibbonGraph, marking: Optional[FaceMarking]) -> Tuple[int, ...]:
    if marking is None:
        return (0,) * graph.h
    return marking.half_edge_colors(graph)


def _minimal_roots(
    graph: RibbonGraph, marking: Optional[FaceMarking]
) -> Tuple[Tuple[int, ...], List[List[int]]]:
    colors = _colors(graph, marking)
    best: Optional[Tuple[int, ...]] = None
    orders: List[List[int]] = []
    for root in range(graph.h):
        order = traversal_order(graph, root)
        code = _code(graph, colors, order)
        if best is None or code < best:
            best, orders = code, [order]
        elif code == best:
            orders.append(order)
    return best or (), orders


def canonical_code(graph: RibbonGraph, marking: Optional[FaceMarking] = None) -> CanonicalCode:
    """Minimum of the traversal code over all root half-edges."""
    code, _ = _minimal_roots(graph, marking)
    return CanonicalCode(code)


def automorphism_order(graph: RibbonGraph, marking: Optional[FaceMarking] = None) -> int:
    """Number of roots attaining the minimal code.

    Two roots with equal codes differ by exactly one automorphism, and on
    a connected graph an automorphism is fixed by the image of one
    half-edge.
    """
    _, orders = _minimal_roots(graph, marking)
    return len(orders)


def automorphisms(graph: RibbonGraph, marking: Optional[FaceMarking] = None) -> List[Tuple[int, ...]]:
    """The automorphism group as half-edge image arrays, identity first."""
    _, orders = _minimal_roots(graph, marking)
    reference = orders[0]
    group = []
    for order in orders:
        phi = [0] * graph.h
        for k, x in enumerate(reference):
            phi[x] = order[k]
        group.append(tuple(phi))
    return sorted(group, key=lambda p: (p != tuple(range(graph.h)), p))


def canonical_form(graph: RibbonGraph, marking: Optional[FaceMarking] = None) -> CanonicalForm:
    """Relabel half-edges in canonical traversal order."""
    code, orders = _minimal_roots(graph, marking)
    order = orders[0]
    relabeled = graph.relabel(order)
    if marking is None:
        new_marking = FaceMarking()
    else:
        old_colors = marking.half_edge_colors(graph)
        new_marking = FaceMarking.from_pairs(
            (cycle[0], old_colors[order[cycle[0]]]) for cycle in relabeled.face_cycles
        )
    return CanonicalForm(CanonicalCode(code), relabeled, new_marking, len(orders))


def brute_force_automorphism_order(
    graph: RibbonGraph, marking: Optional[FaceMarking] = None
) -> int:
    """Count automorphisms by propagating each possible image of half-edge 0."""
    colors = _colors(graph, marking)
    count = 0
    for target in range(graph.h):
        phi: Dict[int, int] = {0: target}
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            for step in (graph.sigma0, graph.sigma1):
                source, image = step[x], step[phi[x]]
                if source in phi:
                    ok = phi[source] == image
                else:
                    phi[source] = image
                    stack.append(source)
                if not ok:
                    break
        if not ok or len(phi) != graph.h or len(set(phi.values())) != graph.h:
            continue
        if any((x in graph.boundary) != (phi[x] in graph.boundary) for x in range(graph.h)):
            continue
        if any(colors[x] != colors[phi[x]] for x in range(graph.h)):
            continue
        count += 1
    return count
