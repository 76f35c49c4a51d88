import logging
from typing import Any, Dict, Optional, Tuple

from src.algebra.polynomial import lambda_variables, render_monomial
from src.amplitude.graph_sum import compute_W
from src.commands.output import error_payload
from src.commands.schemas import CoefficientRow
from src.commands.series.schemas import (
    AmplitudeRequest,
    CoefficientTableResponse,
    CoeffRequest,
    LaurentTerm,
    WTableResponse,
)
from src.series.free_energy import assemble_free_energy
from src.series.tables import tau_truncation

logger = logging.getLogger(__name__)


class SeriesService:
    """W tables and free-energy coefficients."""

    @staticmethod
    def amplitude(
        request: AmplitudeRequest, jobs: int = 1
    ) -> Tuple[Optional[WTableResponse], Optional[Dict[str, Any]]]:
        """Compute the reduced W table of one type.

        Returns:
            tuple: (table, errors)
                - table: terms in canonical key order if successful, None otherwise
                - errors: error payload naming the failed invariant
        """
        try:
            t = request.to_type()
            W = compute_W(t, jobs=jobs)
            names = lambda_variables(t.n)
            terms = [
                LaurentTerm(
                    exponents=list(key),
                    monomial=render_monomial(names, tuple(-m for m in key)) or "1",
                    coefficient=coeff.render(),
                )
                for key, coeff in W.laurent.terms
            ]
            logger.info(f"W{t}: {len(terms)} terms from {W.graph_count} classes")
            return WTableResponse(type=t.label(), graph_count=W.graph_count, monomials=terms), None
        except Exception as e:
            logger.error(f"Amplitude failed: {str(e)}")
            return None, error_payload(e)

    @staticmethod
    def coefficients(
        request: CoeffRequest, jobs: int = 1
    ) -> Tuple[Optional[CoefficientTableResponse], Optional[Dict[str, Any]]]:
        """Coefficients of F, or of tau = exp(F), through E <= max_edges.

        Returns:
            tuple: (table, errors)
        """
        try:
            table = assemble_free_energy(request.max_edges, hbar=request.hbar, jobs=jobs)
            if request.tau:
                table = tau_truncation(table, request.max_edges)
            rows = [CoefficientRow(monomial=m, coefficient=c) for m, c in table.rows()]
            logger.info(f"{'tau' if request.tau else 'F'} through E = {request.max_edges}: {len(rows)} rows")
            return (
                CoefficientTableResponse(
                    series="tau" if request.tau else "F",
                    max_edges=request.max_edges,
                    complete_through=table.complete_through,
                    hbar=request.hbar,
                    rows=rows,
                ),
                None,
            )
        except Exception as e:
            logger.error(f"Coefficient table failed: {str(e)}")
            return None, error_payload(e)
