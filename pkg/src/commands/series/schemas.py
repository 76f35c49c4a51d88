from typing import List

from pydantic import Field, field_validator

from src.commands.schemas import CoefficientRow, CommandBase, TypeRequest
from src.config import settings


class AmplitudeRequest(TypeRequest):
    """Type whose W table is computed."""


class LaurentTerm(CommandBase):
    """One term c * prod_i l_i^(-exponents[i])."""
    exponents: List[int] = Field(..., description="Exponents of 1/l_i")
    monomial: str
    coefficient: str


class WTableResponse(CommandBase):
    type: str
    graph_count: int
    monomials: List[LaurentTerm]


class CoeffRequest(CommandBase):
    """Truncation of F (or tau = exp F) at total edge count max_edges."""
    max_edges: int = Field(..., ge=0, description="Largest E included")
    tau: bool = Field(False, description="Report tau = exp(F) instead of F")
    hbar: bool = Field(settings.HBAR_GRADING, description="Keep the hbar grading")

    @field_validator("max_edges")
    def max_edges_within_bound(cls, v):
        if v > settings.MAX_EDGES:
            raise ValueError(f"max edges {v} exceeds bound {settings.MAX_EDGES}")
        return v


class CoefficientTableResponse(CommandBase):
    series: str
    max_edges: int
    complete_through: int
    hbar: bool
    rows: List[CoefficientRow]
