from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from src.algebra.laurent import LaurentPoly, reduce_to_laurent
from src.algebra.polynomial import MultiPoly, universe
from src.algebra.rational import LinForm, RationalExpr
from src.enumeration.generate import MarkedGraphClass, generate_by_type
from src.errors import InvariantViolation
from src.events import emit_event
from src.ribbon.graph import FaceMarking, RibbonGraph
from src.ribbon.types import GraphType

logger = logging.getLogger(__name__)

# l_c(e) on a boundary edge, l_c(e+) + l_c(e-) on an internal one
EdgeWeight = LinForm


@dataclass(frozen=True)
class WTable:
    type: GraphType
    laurent: LaurentPoly
    graph_count: int


def edge_weight(graph: RibbonGraph, marking: FaceMarking, edge: Tuple[int, int]) -> EdgeWeight:
    """Weight of one edge from the colors of the faces on its sides."""
    colors = marking.half_edge_colors(graph)
    x, y = edge
    if graph.is_boundary_edge(edge):
        inner = y if x in graph.boundary else x
        return LinForm.single(colors[inner])
    return LinForm.pair(colors[x], colors[y])


def graph_amplitude(c: MarkedGraphClass) -> RationalExpr:
    """2^(E-V) Q^b / |Aut| * prod_e 1/weight(e)."""
    graph = c.graph
    n = c.marking.n
    e = len(graph.edges)
    v = len(graph.vertices)
    coeff = MultiPoly.variable(universe(n), "Q", len(graph.boundary_cycles)).scale(
        Fraction(2 ** e, 2 ** v) / c.aut_order
    )
    denominator = [edge_weight(graph, c.marking, edge) for edge in graph.edges]
    return RationalExpr.from_terms(n, [(coeff, denominator)])


def sum_amplitudes(classes: List[MarkedGraphClass], n: int) -> RationalExpr:
    terms = []
    for c in classes:
        for denominator, coeff in graph_amplitude(c).summands:
            terms.append((coeff, denominator))
    return RationalExpr.from_terms(n, terms)


def check_w_invariants(t: GraphType, laurent: LaurentPoly) -> None:
    """Homogeneity, symmetry, positivity, exponents >= 1 and Q-degree b.

    Raises:
        InvariantViolation: naming the first property that fails.
    """
    if not laurent.is_homogeneous(t.edges):
        raise InvariantViolation("homogeneity", f"W{t} has degrees {laurent.degrees()}")
    for key, coeff in laurent.terms:
        if min(key) < 1:
            raise InvariantViolation("exponents-at-least-one", f"W{t} has monomial {key}")
        for (q_power, hbar_power), value in coeff.terms:
            if value <= 0:
                raise InvariantViolation("positivity", f"W{t} coefficient {value} at {key}")
            if q_power != t.b or hbar_power != 0:
                raise InvariantViolation("q-grading", f"W{t} has Q^{q_power} hbar^{hbar_power}")
    if not laurent.is_symmetric():
        raise InvariantViolation("symmetry", f"W{t} is not symmetric")


def compute_W(t: GraphType, jobs: int = 1, max_edges: Optional[int] = None) -> WTable:
    """Per-type graph sum, reduced to an exact Laurent polynomial.

    Raises:
        NotLaurent: the summed amplitudes do not cancel to a Laurent
            polynomial, which means the enumeration or an automorphism
            order is wrong.
    """
    classes = generate_by_type(t, jobs=jobs, max_edges=max_edges)
    total = sum_amplitudes(classes, t.n)
    logger.info(f"Reducing {len(total.summands)} denominators for {t}")
    laurent = reduce_to_laurent(total)
    check_w_invariants(t, laurent)
    emit_event("type_reduced", {"type": t.label(), "classes": len(classes), "terms": len(laurent.terms)})
    return WTable(type=t, laurent=laurent, graph_count=len(classes))
