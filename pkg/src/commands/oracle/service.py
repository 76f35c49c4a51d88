import logging
from typing import Any, Dict, List, Optional, Tuple

from src.commands.oracle.schemas import (
    AuditModel,
    CoefficientDiffModel,
    DegreeCheckModel,
    OracleRequest,
    OracleResponse,
    ProfileCheckModel,
)
from src.commands.output import error_payload
from src.commands.schemas import CoefficientRow
from src.config import settings
from src.errors import InvariantViolation
from src.oracle.audit import orbit_stabilizer_audit
from src.oracle.compare import compare_oracle
from src.oracle.wick import tau_coefficients_oracle
from src.ribbon.types import profiles_up_to
from src.series.tables import CoefficientTable

logger = logging.getLogger(__name__)


def _rows(table: CoefficientTable) -> List[CoefficientRow]:
    return [CoefficientRow(monomial=m, coefficient=c) for m, c in table.rows()]


class OracleService:
    """Brute-force pairing sums and their comparison with the graph side."""

    @staticmethod
    def run(request: OracleRequest, jobs: int = 1) -> Tuple[Optional[OracleResponse], Optional[Dict[str, Any]]]:
        """Evaluate the oracle and optionally compare and audit.

        A mismatch still returns the full report together with an error
        payload, so the caller can print the diff before exiting.

        Returns:
            tuple: (report, errors)
        """
        failed = None
        try:
            if request.compare:
                report = compare_oracle(request.max_half_edges, request.colors, jobs)
                if not report.ok:
                    failed = "oracle-equivalence"
                response = OracleResponse(
                    max_half_edges=request.max_half_edges,
                    colors=request.colors,
                    complete_through=report.oracle_table.complete_through,
                    oracle=_rows(report.oracle_table),
                    graph=_rows(report.graph_table),
                    profiles=[ProfileCheckModel.model_validate(p) for p in report.profiles],
                    degrees=[DegreeCheckModel.model_validate(d) for d in report.degrees],
                    diff=[CoefficientDiffModel.model_validate(d) for d in report.diff],
                    ok=report.ok,
                )
            else:
                table = tau_coefficients_oracle(request.max_half_edges, request.colors, jobs)
                response = OracleResponse(
                    max_half_edges=request.max_half_edges,
                    colors=request.colors,
                    complete_through=table.complete_through,
                    oracle=_rows(table),
                )
            if request.audit:
                response.audit = OracleService.audit(request.max_half_edges)
                if not all(a.matches for a in response.audit):
                    failed = failed or "orbit-stabilizer"
                    response.ok = False
        except Exception as e:
            logger.error(f"Oracle run failed: {str(e)}")
            return None, error_payload(e)

        if failed:
            logger.warning(f"Oracle run found a mismatch ({failed})")
            return response, error_payload(InvariantViolation(failed, "see the report for the differing entries"))
        return response, None

    @staticmethod
    def audit(max_half_edges: int) -> List[AuditModel]:
        results = []
        for profile in profiles_up_to(max_half_edges):
            if profile.reduced_vertices > settings.ORACLE_MAX_VERTICES:
                continue
            r = orbit_stabilizer_audit(profile)
            results.append(AuditModel(profile=r.profile, raw=r.raw, orbit_sum=str(r.orbit_sum), matches=r.matches))
        return results
