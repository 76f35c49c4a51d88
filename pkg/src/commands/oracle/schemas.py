from typing import List, Optional

from pydantic import Field, field_validator

from src.commands.schemas import CoefficientRow, CommandBase
from src.config import settings


class OracleRequest(CommandBase):
    """Pairing-oracle run over every profile with |h| <= max_half_edges."""
    max_half_edges: int = Field(..., ge=0, description="Largest |h|")
    colors: int = Field(..., ge=1, description="Number of colors N")
    compare: bool = Field(False, description="Compare against the graph sum")
    audit: bool = Field(False, description="Run the orbit-stabilizer audit per profile")

    @field_validator("max_half_edges")
    def half_edges_within_bound(cls, v):
        if v > settings.MAX_HALF_EDGES:
            raise ValueError(f"max half-edges {v} exceeds bound {settings.MAX_HALF_EDGES}")
        return v

    @field_validator("colors")
    def colors_within_bound(cls, v):
        if v > settings.MAX_COLORS:
            raise ValueError(f"colors {v} exceeds bound {settings.MAX_COLORS}")
        return v


class ProfileCheckModel(CommandBase):
    profile: str
    half_edges: int
    matches: bool


class DegreeCheckModel(CommandBase):
    degree: int
    matches: bool


class CoefficientDiffModel(CommandBase):
    monomial: str
    oracle: str
    graph: str


class AuditModel(CommandBase):
    profile: str
    raw: int
    orbit_sum: str
    matches: bool


class OracleResponse(CommandBase):
    max_half_edges: int
    colors: int
    complete_through: int
    oracle: List[CoefficientRow]
    graph: Optional[List[CoefficientRow]] = None
    profiles: Optional[List[ProfileCheckModel]] = None
    degrees: Optional[List[DegreeCheckModel]] = None
    diff: Optional[List[CoefficientDiffModel]] = None
    audit: Optional[List[AuditModel]] = None
    ok: bool = True
