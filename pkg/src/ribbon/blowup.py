"""Expansion of boundary vertices into boundary cycles."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from src.errors import InvalidProfile
from src.ribbon.graph import RibbonGraph, cycles, validate
from src.ribbon.types import VertexProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProfileGraph:
    """Unreduced graph: trivalent internal vertices plus boundary vertices of any degree.

    boundary_vertices holds the minimal half-edge of each sigma0-cycle that
    is a boundary vertex.
    """

    sigma0: Tuple[int, ...]
    sigma1: Tuple[int, ...]
    boundary_vertices: FrozenSet[int] = frozenset()

    def profile(self) -> VertexProfile:
        d = 0
        counts: Dict[int, int] = {}
        for vertex in cycles(self.sigma0):
            if vertex[0] in self.boundary_vertices:
                counts[len(vertex)] = counts.get(len(vertex), 0) + 1
            else:
                d += 1
        return VertexProfile.of(d, counts)


@dataclass(frozen=True)
class BlowUp:
    graph: RibbonGraph
    # leg a_k -> boundary half-edge r_k of the boundary edge inheriting its weight
    weight_transfer: Tuple[Tuple[int, int], ...]


def blow_up(profile_graph: ProfileGraph) -> BlowUp:
    """Replace every degree-j boundary vertex by a cycle of j boundary edges.

    A boundary vertex with legs a_0..a_(j-1) (sigma0(a_k) = a_(k+1)) becomes
    vertices (a_k, r_k, s_k) with r_k paired to s_(k+1); B = {r_k}. Original
    labels are kept and the new ones appended, so faces pass through the
    same legs in the same order.

    Raises:
        InvalidProfile: sigma1 is not a fixed-point-free involution or an
            internal vertex is not trivalent.
    """
    h = len(profile_graph.sigma0)
    sigma1 = profile_graph.sigma1
    if len(sigma1) != h or any(sigma1[x] == x or sigma1[sigma1[x]] != x for x in range(h)):
        raise InvalidProfile("pairing is not a fixed-point-free involution")

    sigma0: List[int] = list(profile_graph.sigma0)
    pairing: List[int] = list(sigma1)
    boundary: List[int] = []
    transfer: List[Tuple[int, int]] = []
    next_label = h

    for vertex in cycles(profile_graph.sigma0):
        if vertex[0] not in profile_graph.boundary_vertices:
            if len(vertex) != 3:
                raise InvalidProfile(f"internal vertex {vertex} is not trivalent")
            continue
        j = len(vertex)
        r = [next_label + 2 * k for k in range(j)]
        s = [next_label + 2 * k + 1 for k in range(j)]
        next_label += 2 * j
        sigma0.extend([0] * (2 * j))
        pairing.extend([0] * (2 * j))
        for k, leg in enumerate(vertex):
            sigma0[leg] = r[k]
            sigma0[r[k]] = s[k]
            sigma0[s[k]] = leg
            partner = s[(k + 1) % j]
            pairing[r[k]] = partner
            pairing[partner] = r[k]
            boundary.append(r[k])
            transfer.append((leg, r[k]))

    graph = validate(RibbonGraph(tuple(sigma0), tuple(pairing), frozenset(boundary)))
    logger.debug(f"Blew up {len(transfer)} boundary legs into {graph.h} half-edges")
    return BlowUp(graph, tuple(sorted(transfer)))


def standard_profile_graph(profile: VertexProfile, sigma1: Sequence[int]) -> ProfileGraph:
    """Profile graph with internal vertices first, then boundary vertices by degree."""
    sigma0: List[int] = []
    boundary_vertices = []
    start = 0
    blocks = [3] * profile.d
    for j, count in profile.b_counts:
        blocks.extend([j] * count)
    for index, size in enumerate(blocks):
        sigma0.extend(start + (k + 1) % size for k in range(size))
        if index >= profile.d:
            boundary_vertices.append(start)
        start += size
    return ProfileGraph(tuple(sigma0), tuple(sigma1), frozenset(boundary_vertices))
