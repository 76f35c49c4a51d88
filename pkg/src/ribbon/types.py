from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from src.errors import InvalidGraph, InvalidProfile, NonIntegralGenus, UnstableType
from src.ribbon.graph import RibbonGraph, is_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GraphType:
    """Topological type ((g, b), n)."""

    g: int
    b: int
    n: int

    @property
    def d(self) -> int:
        return 3 * self.g - 3 + self.n + self.b

    @property
    def alpha(self) -> int:
        return 2 * self.g - 2 + self.n + self.b

    @property
    def edges(self) -> int:
        """Edge count of a trivalent graph of this type."""
        return 6 * self.g - 6 + 3 * self.b + 3 * self.n

    @property
    def vertices(self) -> int:
        return 2 * self.edges // 3

    @property
    def hbar_degree(self) -> int:
        return 2 * self.g + self.b - 2

    def is_stable(self) -> bool:
        return self.g >= 0 and self.b >= 0 and self.n >= 1 and self.alpha > 0

    def label(self) -> str:
        return f"(({self.g},{self.b}),{self.n})"

    def __str__(self) -> str:
        return self.label()


def check_stable(t: GraphType) -> GraphType:
    """Reject ((0,0),1), ((0,0),2), ((0,1),1) and anything with n < 1."""
    if not t.is_stable():
        raise UnstableType(f"type {t} is not stable")
    return t


def stable_types(max_edges: int) -> List[GraphType]:
    """All stable types with 6g-6+3b+3n <= max_edges, sorted by (E, g, b, n)."""
    found = []
    for g in range(max_edges // 6 + 2):
        for b in range(max_edges // 3 + 3):
            for n in range(1, max_edges // 3 + 3):
                t = GraphType(g, b, n)
                if t.is_stable() and t.edges <= max_edges:
                    found.append(t)
    return sorted(found, key=lambda t: (t.edges, t.g, t.b, t.n))


def graph_type(graph: RibbonGraph) -> GraphType:
    """Type of a valid connected graph via 2g = 2 - b - V + E - n.

    Raises:
        NonIntegralGenus: the Euler count gives a negative or odd 2g.
    """
    if not is_connected(graph):
        raise InvalidGraph("graph_type needs a connected graph", invariant="connected")
    n = len(graph.face_cycles)
    b = len(graph.boundary_cycles)
    v = len(graph.vertices)
    e = graph.h // 2
    twice_genus = 2 - graph.euler_characteristic()
    if twice_genus < 0 or twice_genus % 2:
        raise NonIntegralGenus(f"2g = {twice_genus} for V={v}, E={e}, n={n}, b={b}")
    return GraphType(twice_genus // 2, b, n)


@dataclass(frozen=True, order=True)
class VertexProfile:
    """d internal trivalent vertices and b_j boundary vertices of degree j."""

    d: int
    b_counts: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def of(cls, d: int, b_counts: Dict[int, int]) -> VertexProfile:
        if d < 0 or any(j < 1 or c < 0 for j, c in b_counts.items()):
            raise InvalidProfile(f"invalid profile d={d}, b={b_counts}")
        return cls(d, tuple(sorted((j, c) for j, c in b_counts.items() if c)))

    @classmethod
    def from_sequence(cls, values: Sequence[int]) -> VertexProfile:
        """Parse [d, b1, b2, ...]."""
        if not values:
            raise InvalidProfile("empty profile")
        return cls.of(values[0], {j: c for j, c in enumerate(values[1:], start=1)})

    def counts(self) -> Dict[int, int]:
        return dict(self.b_counts)

    @property
    def half_edges(self) -> int:
        """|h| = 3d + sum j b_j before blow-up."""
        return 3 * self.d + sum(j * c for j, c in self.b_counts)

    @property
    def boundary_count(self) -> int:
        return sum(c for _, c in self.b_counts)

    @property
    def reduced_vertices(self) -> int:
        """Vertex count after each degree-j boundary vertex becomes j vertices."""
        return self.d + sum(j * c for j, c in self.b_counts)

    @property
    def reduced_edges(self) -> int:
        return 3 * self.reduced_vertices // 2

    def group_order(self) -> int:
        """|G| = d! 3^d prod_j b_j! j^(b_j)."""
        order = math.factorial(self.d) * 3 ** self.d
        for j, c in self.b_counts:
            order *= math.factorial(c) * j ** c
        return order

    def is_zero(self) -> bool:
        return self.d == 0 and not self.b_counts

    def as_sequence(self) -> Tuple[int, ...]:
        top = max((j for j, _ in self.b_counts), default=0)
        counts = self.counts()
        return (self.d,) + tuple(counts.get(j, 0) for j in range(1, top + 1))

    def __sub__(self, other: VertexProfile) -> VertexProfile:
        counts = self.counts()
        for j, c in other.b_counts:
            counts[j] = counts.get(j, 0) - c
        return VertexProfile.of(self.d - other.d, counts)

    def sub_profiles(self) -> Iterator[VertexProfile]:
        """All nonzero profiles P' <= P componentwise."""
        keys = [j for j, _ in self.b_counts]
        ranges = [range(c + 1) for _, c in self.b_counts]
        for d in range(self.d + 1):
            for combo in itertools.product(*ranges):
                candidate = VertexProfile.of(d, dict(zip(keys, combo)))
                if not candidate.is_zero():
                    yield candidate

    def label(self) -> str:
        inner = ",".join(str(v) for v in self.as_sequence())
        return f"[{inner}]"

    def __str__(self) -> str:
        return self.label()


def profiles_up_to(max_half_edges: int) -> List[VertexProfile]:
    """Nonzero profiles with an even |h| <= max_half_edges."""
    found = []
    for d in range(max_half_edges // 3 + 1):
        rest = max_half_edges - 3 * d
        for partition in _partitions_up_to(rest):
            profile = VertexProfile.of(d, Counter(partition))
            if not profile.is_zero() and profile.half_edges % 2 == 0:
                found.append(profile)
    return sorted(found, key=lambda p: (p.half_edges, p.as_sequence()))


def _partitions_up_to(total: int) -> Iterator[Tuple[int, ...]]:
    def parts(remaining: int, largest: int) -> Iterator[Tuple[int, ...]]:
        yield ()
        for k in range(min(remaining, largest), 0, -1):
            for tail in parts(remaining - k, k):
                yield (k,) + tail

    yield from parts(total, total)


def profile_of(graph: RibbonGraph) -> VertexProfile:
    """Profile of a reduced trivalent graph: d = V - |B|, b_j = boundary cycles of length j."""
    lengths = Counter(len(c) for c in graph.boundary_cycles)
    return VertexProfile.of(len(graph.vertices) - len(graph.boundary), dict(lengths))
