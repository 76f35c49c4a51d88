from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List

from src.algebra.laurent import LaurentPoly, reduce_to_laurent
from src.algebra.rational import RationalExpr
from src.amplitude.graph_sum import graph_amplitude
from src.config import settings
from src.enumeration.generate import generate_by_profile
from src.errors import NotLaurent
from src.events import emit_event
from src.oracle.wick import oracle_degree_laurent, profile_term, tau_table_from_laurent
from src.ribbon.types import VertexProfile, profiles_up_to
from src.series.free_energy import assemble_free_energy
from src.series.tables import CoefficientTable, render_t_monomial, specialize, t_degree, tau_truncation

logger = logging.getLogger(__name__)


@dataclass
class ProfileCheck:
    profile: str
    half_edges: int
    matches: bool


@dataclass
class DegreeCheck:
    degree: int
    matches: bool


@dataclass
class CoefficientDiff:
    monomial: str
    oracle: str
    graph: str


@dataclass
class ComparisonReport:
    max_half_edges: int
    colors: int
    profiles: List[ProfileCheck] = field(default_factory=list)
    degrees: List[DegreeCheck] = field(default_factory=list)
    oracle_table: CoefficientTable = field(default_factory=CoefficientTable)
    graph_table: CoefficientTable = field(default_factory=CoefficientTable)
    diff: List[CoefficientDiff] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.diff
            and all(p.matches for p in self.profiles)
            and all(d.matches for d in self.degrees)
        )


@lru_cache(maxsize=None)
def graph_side_profile_F(profile: VertexProfile, colors: int) -> RationalExpr:
    """Connected part at one profile: sum over classes of (1/n!) sum_phi amplitude(phi)."""
    terms = []
    for c in generate_by_profile(profile):
        n = c.marking.n
        amplitude = graph_amplitude(c)
        weight = Fraction(1, math.factorial(n))
        for phi in itertools.product(range(1, colors + 1), repeat=n):
            for d, coeff in amplitude.substitute(phi, colors).summands:
                terms.append((coeff.scale(weight), d))
    return RationalExpr.from_terms(colors, terms)


@lru_cache(maxsize=None)
def graph_side_profile_tau(profile: VertexProfile, colors: int) -> RationalExpr:
    """tau at one profile from connected classes.

    With w(P) = |h| the exponential unwinds one profile at a time:
    w(P) tau_P = sum over 0 < P' <= P of w(P') F_P' tau_(P - P').
    """
    if profile.is_zero():
        return RationalExpr.constant(colors, 1)
    if profile.half_edges % 2:
        return RationalExpr.zero(colors)
    terms = []
    for sub in profile.sub_profiles():
        if sub.half_edges % 2:
            continue
        rest = graph_side_profile_tau(profile - sub, colors)
        if rest.is_zero():
            continue
        for d, coeff in (graph_side_profile_F(sub, colors) * rest).summands:
            terms.append((coeff.scale(Fraction(sub.half_edges, profile.half_edges)), d))
    return RationalExpr.from_terms(colors, terms)


def _identical(a: RationalExpr, b: RationalExpr) -> bool:
    try:
        return reduce_to_laurent(a - b).is_zero()
    except NotLaurent:
        return False


def compare_profiles(max_half_edges: int, colors: int, jobs: int = 1) -> List[ProfileCheck]:
    """Pairing sum against the graph side for every profile small enough to enumerate."""
    checks = []
    for profile in profiles_up_to(max_half_edges):
        if profile.reduced_vertices > settings.ORACLE_MAX_VERTICES:
            continue
        matches = _identical(profile_term(profile, colors, jobs), graph_side_profile_tau(profile, colors))
        if not matches:
            logger.warning(f"Profile {profile} disagrees at N={colors}")
        emit_event("profile_compared", {"profile": profile.label(), "matches": matches})
        checks.append(ProfileCheck(profile.label(), profile.half_edges, matches))
    return checks


def compare_oracle(max_half_edges: int, colors: int, jobs: int = 1) -> ComparisonReport:
    """Check the pairing oracle against the graph sum three ways.

    Per profile as rational functions, per lambda-degree as Laurent
    polynomials and, where the colors suffice, per t-monomial.
    """
    report = ComparisonReport(max_half_edges, colors)
    report.profiles = compare_profiles(max_half_edges, colors, jobs)

    top = max_half_edges // 2
    oracle_laurent: Dict[int, LaurentPoly] = oracle_degree_laurent(max_half_edges, colors, jobs)
    tau = tau_truncation(assemble_free_energy(top, hbar=False, jobs=jobs), top)
    graph_laurent = specialize(tau, colors)
    for degree in sorted(set(oracle_laurent) | {d for d in graph_laurent if 0 < d <= top}):
        ours = oracle_laurent.get(degree, LaurentPoly.zero(colors))
        theirs = graph_laurent.get(degree, LaurentPoly.zero(colors))
        report.degrees.append(DegreeCheck(degree, ours == theirs))

    report.oracle_table = tau_table_from_laurent(oracle_laurent, colors, max_half_edges)
    reach = report.oracle_table.complete_through
    report.graph_table = CoefficientTable.from_dict(
        {k: v for k, v in tau.entries if t_degree(k) <= reach}, reach
    )
    oracle_entries = report.oracle_table.as_dict()
    graph_entries = report.graph_table.as_dict()
    zero = "0"
    for monomial in sorted(set(oracle_entries) | set(graph_entries), key=lambda k: (t_degree(k), k)):
        ours = oracle_entries.get(monomial)
        theirs = graph_entries.get(monomial)
        if ours != theirs:
            report.diff.append(
                CoefficientDiff(
                    render_t_monomial(monomial),
                    ours.render() if ours is not None else zero,
                    theirs.render() if theirs is not None else zero,
                )
            )
    logger.info(
        f"Oracle comparison |h| <= {max_half_edges}, N = {colors}: "
        f"{len(report.profiles)} profiles, {len(report.degrees)} degrees, {len(report.diff)} differences"
    )
    return report
