from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Dict, Optional, Tuple

from src.algebra.polynomial import COEFFICIENT_VARIABLES, MultiPoly
from src.amplitude.graph_sum import WTable, compute_W
from src.config import settings
from src.errors import BoundExceeded, InvariantViolation, NonSymmetricTable
from src.events import emit_event
from src.ribbon.types import GraphType, stable_types
from src.series.tables import CoefficientTable, TMonomial
from src.utils.parallel import parallel_map

logger = logging.getLogger(__name__)


def check_grading(t: GraphType, table: CoefficientTable, hbar: bool) -> None:
    """Every contribution of ((g,b),n) sits at t-degree E, Q^b and hbar^(2g+b-2)."""
    expected = (t.b, t.hbar_degree if hbar else 0)
    for monomial, coeff in table.entries:
        if sum(monomial) != t.edges or len(monomial) != t.n:
            raise InvariantViolation("degree-bookkeeping", f"{t} contributes to t-monomial {monomial}")
        for exponents, _ in coeff.terms:
            if exponents != expected:
                raise InvariantViolation("q-grading", f"{t} contributes Q^{exponents[0]} hbar^{exponents[1]}")


def laurent_to_t(t: GraphType, W: WTable, hbar: bool = True) -> CoefficientTable:
    """Coefficients of F in the times t_k contributed by one type.

    With t_k = p_k / k, the monomial prod_i l_i^(-m_i) of W feeds the
    coefficient of prod_i t_(m_i) with weight prod_i m_i / n!.

    Raises:
        NonSymmetricTable: W is not symmetric in the face colors.
    """
    if not W.laurent.is_symmetric():
        raise NonSymmetricTable(f"W{t} is not symmetric")
    grading = MultiPoly.monomial(COEFFICIENT_VARIABLES, (0, t.hbar_degree if hbar else 0))
    acc: Dict[TMonomial, MultiPoly] = {}
    for key, coeff in W.laurent.terms:
        weight = Fraction(math.prod(key), math.factorial(t.n))
        monomial = tuple(sorted(key))
        term = (coeff * grading).scale(weight)
        acc[monomial] = acc[monomial] + term if monomial in acc else term
    table = CoefficientTable.from_dict(acc, t.edges)
    check_grading(t, table, hbar)
    return table


def _type_contribution(job: Tuple[GraphType, bool]) -> CoefficientTable:
    t, hbar = job
    return laurent_to_t(t, compute_W(t), hbar)


def assemble_free_energy(
    max_edges: int, hbar: Optional[bool] = None, jobs: int = 1
) -> CoefficientTable:
    """Sum the contributions of every stable type with E <= max_edges.

    Types are dispatched to workers and merged back in type order, so the
    table does not depend on `jobs`.

    Raises:
        BoundExceeded: max_edges above the configured bound.
    """
    if max_edges > settings.MAX_EDGES:
        raise BoundExceeded(f"max_edges {max_edges} exceeds bound {settings.MAX_EDGES}")
    hbar = settings.HBAR_GRADING if hbar is None else hbar
    types = stable_types(max_edges)
    logger.info(f"Assembling F over {len(types)} types with E <= {max_edges}")
    table = CoefficientTable((), max(max_edges, 0))
    for contribution in parallel_map(_type_contribution, [(t, hbar) for t in types], jobs):
        table = table.merge(CoefficientTable(contribution.entries, table.complete_through))
    emit_event("free_energy_assembled", {"max_edges": max_edges, "entries": len(table.entries)})
    return table
