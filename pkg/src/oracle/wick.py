"""Brute-force Gaussian expectations by summing over all Wick pairings.

Nothing here looks at enumeration or amplitudes: pairings are iterated
naively, faces are traced from scratch and colorings are summed
explicitly.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Tuple

from src.algebra.laurent import LaurentPoly, reduce_to_laurent
from src.algebra.polynomial import COEFFICIENT_VARIABLES, MultiPoly, universe
from src.algebra.rational import LinForm, RationalExpr
from src.config import settings
from src.errors import BoundExceeded, InvariantViolation
from src.events import emit_event
from src.ribbon.types import VertexProfile, profiles_up_to
from src.series.tables import CoefficientTable, extract_t_coefficients
from src.utils.parallel import parallel_map

logger = logging.getLogger(__name__)

# (number of faces, sorted propagator face pairs, sorted boundary faces)
FaceSignature = Tuple[int, Tuple[Tuple[int, int], ...], Tuple[int, ...]]


@dataclass(frozen=True)
class PairingConfig:
    """Half-edges of one profile with their cyclic rotation.

    Internal vertices come first as 3-cycles, then boundary vertices grouped
    by degree. `boundary` holds the legs of boundary vertices.
    """

    profile: VertexProfile
    sigma0: Tuple[int, ...]
    boundary: FrozenSet[int]

    @classmethod
    def of(cls, profile: VertexProfile) -> PairingConfig:
        sigma0: List[int] = []
        boundary: List[int] = []
        sizes = [(3, False)] * profile.d + [
            (j, True) for j, count in profile.b_counts for _ in range(count)
        ]
        start = 0
        for size, is_boundary in sizes:
            sigma0.extend(start + (k + 1) % size for k in range(size))
            if is_boundary:
                boundary.extend(range(start, start + size))
            start += size
        return cls(profile, tuple(sigma0), frozenset(boundary))

    @property
    def h(self) -> int:
        return len(self.sigma0)


def pairings(h: int, first_partner: int = 0) -> Iterator[Tuple[int, ...]]:
    """Every fixed-point-free involution of range(h).

    With first_partner > 0 only those pairing 0 with it are produced.
    """
    if h % 2:
        return
    mate = [-1] * h

    def extend() -> Iterator[Tuple[int, ...]]:
        try:
            x = mate.index(-1)
        except ValueError:
            yield tuple(mate)
            return
        for y in range(x + 1, h):
            if mate[y] != -1:
                continue
            mate[x], mate[y] = y, x
            yield from extend()
            mate[x], mate[y] = -1, -1

    if first_partner:
        mate[0], mate[first_partner] = first_partner, 0
    yield from extend()


def propagator(i: int, j: int, colors: int) -> RationalExpr:
    """<X_ij X_ji> = 2 / (l_i + l_j)."""
    return RationalExpr.from_terms(colors, [(2, [LinForm.pair(i, j)])])


def face_signature(config: PairingConfig, sigma1: Tuple[int, ...]) -> FaceSignature:
    """Faces are the orbits of sigma0 after sigma1, numbered by first appearance."""
    face = [-1] * config.h
    count = 0
    for start in range(config.h):
        if face[start] != -1:
            continue
        x = start
        while face[x] == -1:
            face[x] = count
            x = config.sigma0[sigma1[x]]
        count += 1
    props = tuple(
        sorted(
            tuple(sorted((face[x], face[config.sigma0[x]])))
            for x in range(config.h)
            if x < sigma1[x]
        )
    )
    legs = tuple(sorted(face[x] for x in config.boundary))
    return count, props, legs


def is_connected_pairing(config: PairingConfig, sigma1: Tuple[int, ...]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (config.sigma0[x], sigma1[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == config.h


@lru_cache(maxsize=None)
def coloring_sum(signature: FaceSignature, colors: int) -> RationalExpr:
    """Sum over face colorings of the propagators and the boundary weights 1/l."""
    faces, props, legs = signature
    coeff = 2 ** len(props)
    terms = []
    for phi in itertools.product(range(1, colors + 1), repeat=faces):
        denominator = [LinForm.pair(phi[a], phi[b]) for a, b in props]
        denominator.extend(LinForm.single(phi[f]) for f in legs)
        terms.append((coeff, denominator))
    return RationalExpr.from_terms(colors, terms)


def _partial_correlator(job: Tuple[PairingConfig, int]) -> Tuple[Tuple[FaceSignature, int], ...]:
    config, first_partner = job
    counts: Dict[FaceSignature, int] = {}
    for sigma1 in pairings(config.h, first_partner):
        key = face_signature(config, sigma1)
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


def correlator(config: PairingConfig, colors: int, jobs: int = 1) -> RationalExpr:
    """Sum over all pairings and face colorings; zero when |h| is odd.

    The pairings are split by the partner of half-edge 0; per-signature
    counts are merged before any colorings are summed.
    """
    if config.h > settings.MAX_HALF_EDGES or colors > settings.MAX_COLORS:
        raise BoundExceeded(
            f"|h| = {config.h}, N = {colors} beyond {settings.MAX_HALF_EDGES}, {settings.MAX_COLORS}"
        )
    if config.h % 2:
        return RationalExpr.zero(colors)
    if config.h == 0:
        return RationalExpr.constant(colors, 1)
    jobs_list = [(config, partner) for partner in range(1, config.h)]
    counts: Dict[FaceSignature, int] = {}
    for batch in parallel_map(_partial_correlator, jobs_list, jobs):
        for key, count in batch:
            counts[key] = counts.get(key, 0) + count
    terms = []
    for key in sorted(counts):
        terms.extend((coeff * counts[key], d) for d, coeff in coloring_sum(key, colors).summands)
    total = RationalExpr.from_terms(colors, terms)
    logger.debug(f"Correlator of {config.profile}: {sum(counts.values())} pairings, {len(counts)} signatures")
    return total


@lru_cache(maxsize=None)
def profile_term(profile: VertexProfile, colors: int, jobs: int = 1) -> RationalExpr:
    """(-1)^(d + sum j b_j) Q^(sum b_j) / (|G| 2^d) times the correlator."""
    config = PairingConfig.of(profile)
    if config.h % 2:
        return RationalExpr.zero(colors)
    exponent = profile.d + sum(j * c for j, c in profile.b_counts)
    if exponent % 2:
        raise InvariantViolation("sign-free", f"profile {profile} carries sign -1")
    weight = MultiPoly.variable(universe(colors), "Q", profile.boundary_count).scale(
        Fraction(1, profile.group_order() * 2 ** profile.d)
    )
    term = correlator(config, colors, jobs).scale(weight)
    emit_event("profile_evaluated", {"profile": profile.label(), "colors": colors})
    return term


def oracle_degree_laurent(max_half_edges: int, colors: int, jobs: int = 1) -> Dict[int, LaurentPoly]:
    """tau at each lambda-degree D fully reachable, i.e. 2D <= max_half_edges.

    A profile contributes at degree |h|/2 + sum j b_j, its reduced edge count.
    """
    if max_half_edges > settings.MAX_HALF_EDGES:
        raise BoundExceeded(f"max_half_edges {max_half_edges} exceeds {settings.MAX_HALF_EDGES}")
    by_degree: Dict[int, RationalExpr] = {}
    for profile in profiles_up_to(max_half_edges):
        degree = profile.reduced_edges
        if 2 * degree > max_half_edges:
            continue
        term = profile_term(profile, colors, jobs)
        by_degree[degree] = by_degree[degree] + term if degree in by_degree else term
    return {degree: reduce_to_laurent(expr) for degree, expr in sorted(by_degree.items())}


def tau_coefficients_oracle(max_half_edges: int, colors: int, jobs: int = 1) -> CoefficientTable:
    """t-coefficients of tau from the pairing sums, at every degree D <= colors with 2D <= max_half_edges.

    Raises:
        InvariantViolation: a coefficient with a negative rational appears.
    """
    laurents = oracle_degree_laurent(max_half_edges, colors, jobs)
    return tau_table_from_laurent(laurents, colors, max_half_edges)


def tau_table_from_laurent(
    laurents: Dict[int, LaurentPoly], colors: int, max_half_edges: int
) -> CoefficientTable:
    one = MultiPoly.constant(COEFFICIENT_VARIABLES, 1)
    table = CoefficientTable.from_dict({(): one}, 0)
    for degree, laurent in laurents.items():
        if degree > colors:
            logger.info(f"Degree {degree} needs {degree} colors; kept as a Laurent comparison only")
            continue
        part = extract_t_coefficients(laurent, degree)
        for monomial, coeff in part.entries:
            if any(value < 0 for _, value in coeff.terms):
                raise InvariantViolation("sign-free", f"tau coefficient of {monomial} is {coeff.render()}")
        table = table.merge(CoefficientTable(part.entries, degree))
    return CoefficientTable(table.entries, min(max_half_edges // 2, colors))
