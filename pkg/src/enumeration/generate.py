from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.config import settings
from src.enumeration.canonical import CanonicalCode, canonical_form
from src.errors import BoundExceeded, InvariantViolation
from src.events import emit_event
from src.ribbon.graph import FaceMarking, RibbonGraph, validate
from src.ribbon.types import GraphType, VertexProfile, check_stable, graph_type
from src.utils.parallel import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MarkedGraphClass:
    """One isomorphism class of connected face-marked trivalent graphs."""

    graph: RibbonGraph
    marking: FaceMarking
    aut_order: int
    type: GraphType
    code: CanonicalCode


@dataclass(frozen=True)
class TrivalentMap:
    """Unmarked connected trivalent map in canonical traversal labeling.

    sigma0 is the standard rotation 3k -> 3k+1 -> 3k+2; the map is
    determined by its pairing.
    """

    sigma1: Tuple[int, ...]
    automorphisms: Tuple[Tuple[int, ...], ...]

    @property
    def vertices(self) -> int:
        return len(self.sigma1) // 3

    def graph(self, boundary: Sequence[int] = ()) -> RibbonGraph:
        return RibbonGraph(standard_rotation(self.vertices), self.sigma1, frozenset(boundary))


def standard_rotation(vertices: int) -> Tuple[int, ...]:
    return tuple(3 * (x // 3) + (x % 3 + 1) % 3 for x in range(3 * vertices))


def _rotate(x: int) -> int:
    return 3 * (x // 3) + (x % 3 + 1) % 3


def _compare_root(mate: Sequence[int], root: int) -> Tuple[int, Optional[List[int]]]:
    """Compare the traversal from `root` against the generated labeling.

    Returns (-1, None) if the root gives a smaller code, (1, None) if
    larger, (0, order) if equal.
    """
    h = len(mate)
    label = [-1] * h
    order: List[int] = []

    def discover(x: int) -> None:
        for y in (x, _rotate(x), _rotate(_rotate(x))):
            label[y] = len(order)
            order.append(y)

    discover(root)
    for k in range(h):
        partner = mate[order[k]]
        if label[partner] < 0:
            discover(partner)
        c = label[partner]
        if c != mate[k]:
            return (-1 if c < mate[k] else 1), None
    return 0, order


def _canonical_automorphisms(mate: Sequence[int]) -> Optional[List[Tuple[int, ...]]]:
    """Automorphisms if root 0 is canonical, else None."""
    group = []
    for root in range(len(mate)):
        sign, order = _compare_root(mate, root)
        if sign < 0:
            return None
        if sign == 0:
            group.append(tuple(order))
    return group


def _extend(mate: List[int], p: int, found: int, total: int, out: List[Tuple[int, ...]]) -> None:
    while p < 3 * found and mate[p] >= 0:
        p += 1
    if p == 3 * found:
        if found == total:
            out.append(tuple(mate))
        return
    for q in range(p + 1, 3 * found):
        if mate[q] < 0:
            mate[p], mate[q] = q, p
            _extend(mate, p + 1, found, total, out)
            mate[p] = mate[q] = -1
    if found < total:
        q = 3 * found
        mate[p], mate[q] = q, p
        _extend(mate, p + 1, found + 1, total, out)
        mate[p] = mate[q] = -1


def rooted_pairings(vertices: int) -> List[Tuple[int, ...]]:
    """Every rooted connected trivalent map on `vertices` vertices, once each.

    Pairings are produced directly in traversal labeling: the lowest
    unpaired label pairs either with a later discovered label or with the
    entry half-edge of the next new vertex.
    """
    if vertices <= 0 or vertices % 2:
        return []
    out: List[Tuple[int, ...]] = []
    _extend([-1] * (3 * vertices), 0, 1, vertices, out)
    return out


@lru_cache(maxsize=None)
def trivalent_maps(vertices: int) -> Tuple[TrivalentMap, ...]:
    """Unrooted connected trivalent maps, each in canonical labeling."""
    maps = []
    rooted = rooted_pairings(vertices)
    for mate in rooted:
        group = _canonical_automorphisms(mate)
        if group is not None:
            maps.append(TrivalentMap(mate, tuple(group)))
    logger.info(f"Generated {len(rooted)} rooted and {len(maps)} unrooted maps on {vertices} vertices")
    emit_event("maps_generated", {"vertices": vertices, "rooted": len(rooted), "maps": len(maps)})
    return tuple(maps)


def _admissible_boundaries(graph: RibbonGraph, count: int) -> Iterator[Tuple[int, ...]]:
    """Sets of `count` sigma2-cycles that may be declared boundary.

    A cycle meeting itself across an edge, or two cycles meeting each
    other, would put both halves of an edge in B.
    """
    cycle_index = {}
    for k, cycle in enumerate(graph.sigma2_cycles):
        for x in cycle:
            cycle_index[x] = k
    adjacent = set()
    for x, y in graph.edges:
        adjacent.add((cycle_index[x], cycle_index[y]))
        adjacent.add((cycle_index[y], cycle_index[x]))
    candidates = [k for k in range(len(graph.sigma2_cycles)) if (k, k) not in adjacent]
    for chosen in itertools.combinations(candidates, count):
        if all((a, b) not in adjacent for a, b in itertools.combinations(chosen, 2)):
            yield chosen


def _decorations(
    trivalent_map: TrivalentMap, boundary_sets: List[Tuple[int, ...]]
) -> List[MarkedGraphClass]:
    """Orbit representatives of (boundary set, marking) under the map's automorphisms."""
    graph = trivalent_map.graph()
    cycles = graph.sigma2_cycles
    cycle_index = {}
    for k, cycle in enumerate(cycles):
        for x in cycle:
            cycle_index[x] = k
    actions = [
        tuple(cycle_index[phi[c[0]]] for c in cycles) for phi in trivalent_map.automorphisms
    ]

    classes = []
    for chosen in boundary_sets:
        faces = [k for k in range(len(cycles)) if k not in chosen]
        for colors in itertools.permutations(range(1, len(faces) + 1)):
            decoration = [0] * len(cycles)
            for k, color in zip(faces, colors):
                decoration[k] = color
            decoration = tuple(decoration)
            stabilizer = 0
            minimal = True
            for action in actions:
                image = [0] * len(cycles)
                for k, target in enumerate(action):
                    image[target] = decoration[k]
                image = tuple(image)
                if image < decoration:
                    minimal = False
                    break
                if image == decoration:
                    stabilizer += 1
            if not minimal:
                continue
            boundary = [x for k in chosen for x in cycles[k]]
            marked = validate(trivalent_map.graph(boundary))
            marking = FaceMarking.from_pairs((cycles[k][0], decoration[k]) for k in faces)
            form = canonical_form(marked, marking)
            if form.aut_order != stabilizer:
                raise InvariantViolation(
                    "aut-order", f"stabilizer {stabilizer} vs root count {form.aut_order}"
                )
            classes.append(
                MarkedGraphClass(
                    graph=form.graph,
                    marking=form.marking,
                    aut_order=form.aut_order,
                    type=graph_type(form.graph),
                    code=form.code,
                )
            )
    return classes


def _classes_for_type(job: Tuple[TrivalentMap, GraphType]) -> List[MarkedGraphClass]:
    trivalent_map, t = job
    graph = trivalent_map.graph()
    if len(graph.sigma2_cycles) != t.b + t.n:
        return []
    return _decorations(trivalent_map, list(_admissible_boundaries(graph, t.b)))


def _classes_for_profile(job: Tuple[TrivalentMap, VertexProfile]) -> List[MarkedGraphClass]:
    trivalent_map, profile = job
    graph = trivalent_map.graph()
    wanted = sorted(j for j, c in profile.b_counts for _ in range(c))
    boundary_sets = [
        chosen
        for chosen in _admissible_boundaries(graph, profile.boundary_count)
        if sorted(len(graph.sigma2_cycles[k]) for k in chosen) == wanted
        and len(graph.sigma2_cycles) > len(chosen)
    ]
    return _decorations(trivalent_map, boundary_sets)


def _check_edges(edges: int, max_edges: Optional[int]) -> None:
    limit = settings.MAX_EDGES if max_edges is None else max_edges
    if edges > limit:
        raise BoundExceeded(f"E = {edges} exceeds the configured bound {limit}")


def generate_by_type(
    t: GraphType, jobs: int = 1, max_edges: Optional[int] = None
) -> List[MarkedGraphClass]:
    """All face-marked trivalent classes of a stable type, sorted by canonical code.

    Raises:
        UnstableType: t is unstable.
        BoundExceeded: E exceeds the configured bound.
    """
    check_stable(t)
    _check_edges(t.edges, max_edges)
    maps = trivalent_maps(t.vertices)
    batches = parallel_map(_classes_for_type, [(m, t) for m in maps], jobs)
    classes = sorted((c for batch in batches for c in batch), key=lambda c: c.code)
    logger.info(f"Enumerated {len(classes)} classes of type {t}")
    emit_event("classes_enumerated", {"type": t.label(), "classes": len(classes)})
    return classes


def generate_by_profile(
    profile: VertexProfile, jobs: int = 1, max_edges: Optional[int] = None
) -> List[MarkedGraphClass]:
    """All classes whose reduced graph has the given vertex profile.

    Odd |h| admits no pairing, so the result is empty.
    """
    if profile.half_edges % 2 or profile.is_zero():
        return []
    _check_edges(profile.reduced_edges, max_edges)
    maps = trivalent_maps(profile.reduced_vertices)
    batches = parallel_map(_classes_for_profile, [(m, profile) for m in maps], jobs)
    classes = sorted((c for batch in batches for c in batch), key=lambda c: c.code)
    logger.info(f"Enumerated {len(classes)} classes of profile {profile}")
    emit_event("classes_enumerated", {"profile": profile.label(), "classes": len(classes)})
    return classes
