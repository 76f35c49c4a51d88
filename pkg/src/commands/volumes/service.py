import logging
from typing import Any, Dict, Optional, Tuple, Union

from src.commands.output import error_payload
from src.commands.volumes.schemas import (
    LaplaceIdentityResponse,
    LaplaceResponse,
    VolumeRequest,
    VolumeResponse,
)
from src.errors import InvariantViolation
from src.volumes.laplace import laplace_check
from src.volumes.total import laplace_exact, total_volume

logger = logging.getLogger(__name__)

VolumeResult = Union[VolumeResponse, LaplaceResponse, LaplaceIdentityResponse]


class VolumeService:
    """Exact volumes and their Laplace checks."""

    @staticmethod
    def run(request: VolumeRequest, jobs: int = 1, seed: int = 0) -> Tuple[Optional[VolumeResult], Optional[Dict[str, Any]]]:
        """Dispatch on the requested mode.

        A failed Laplace check returns its report together with the error.

        Returns:
            tuple: (result, errors)
        """
        try:
            if request.laplace:
                return VolumeService.laplace(request, seed)
            if request.exact:
                return VolumeService.identity(request)
            return VolumeService.volume(request, jobs), None
        except Exception as e:
            logger.error(f"Volume run failed: {str(e)}")
            return None, error_payload(e)

    @staticmethod
    def volume(request: VolumeRequest, jobs: int) -> VolumeResponse:
        t = request.to_type()
        result = total_volume(t, request.x, request.y, jobs=jobs)
        logger.info(f"Vol{t}({list(map(str, result.x))}; {list(map(str, result.y))}) = {result.value}")
        return VolumeResponse(
            type=t.label(),
            x=[str(v) for v in result.x],
            y=[str(v) for v in result.y],
            value=str(result.value),
            wall=result.wall,
            classes=result.classes,
        )

    @staticmethod
    def laplace(request: VolumeRequest, seed: int) -> Tuple[LaplaceResponse, Optional[Dict[str, Any]]]:
        t = request.to_type()
        report = laplace_check(t, request.lambdas, samples=request.samples, seed=seed, tolerance=request.tolerance)
        response = LaplaceResponse(
            type=t.label(),
            lambdas=[str(v) for v in report.lambdas],
            w_exact=report.w_exact,
            integral_estimate=report.integral_estimate,
            rel_error=report.rel_error,
            samples=report.samples,
            seed=report.seed,
            tolerance=report.tolerance,
            within_tolerance=report.within_tolerance,
        )
        if not report.within_tolerance:
            logger.warning(f"Laplace check of {t} off by {report.rel_error:.4%}")
            return response, error_payload(
                InvariantViolation("laplace-consistency", f"relative error {report.rel_error:.6f} > {report.tolerance}")
            )
        return response, None

    @staticmethod
    def identity(request: VolumeRequest) -> Tuple[LaplaceIdentityResponse, Optional[Dict[str, Any]]]:
        t = request.to_type()
        result = laplace_exact(t)
        response = LaplaceIdentityResponse(
            type=t.label(),
            coefficient=str(result.coefficient),
            transform=result.transform,
            w=result.w,
            matches=result.matches,
        )
        if not result.matches:
            return response, error_payload(
                InvariantViolation("laplace-identity", f"{result.transform} != {result.w}")
            )
        return response, None
