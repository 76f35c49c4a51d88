from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config import settings
from src.ribbon.types import GraphType


class CommandBase(BaseModel):
    """Base schema for command inputs and outputs."""
    class Config:
        """Pydantic configuration for plain-data models."""
        arbitrary_types_allowed = True
        populate_by_name = True
        from_attributes = True


class RunConfig(CommandBase):
    """Global options shared by every subcommand."""
    format: Literal["json", "csv", "dot"] = Field("json", description="Output format")
    out: Optional[str] = Field(None, description="Output path; stdout when absent")
    jobs: int = Field(settings.DEFAULT_JOBS, ge=1, description="Worker processes")
    seed: int = Field(settings.DEFAULT_SEED, ge=0, description="Random seed for sampling")
    log_level: str = Field(settings.LOG_LEVEL, description="Logging level")

    @field_validator("log_level")
    def log_level_must_be_known(cls, v):
        """Accept standard logging level names only."""
        v = v.upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {v}")
        return v


class TypeRequest(CommandBase):
    """A stable type ((g,b),n) within the edge bound."""
    genus: int = Field(..., ge=0, description="Genus g")
    boundaries: int = Field(0, ge=0, description="Boundary components b")
    faces: int = Field(..., ge=1, description="Faces n")

    @model_validator(mode="after")
    def type_must_be_stable_and_small(self):
        """Reject unstable types and types beyond the edge bound."""
        t = self.to_type()
        if not t.is_stable():
            raise ValueError(f"type {t} is not stable")
        if t.edges > settings.MAX_EDGES:
            raise ValueError(f"type {t} has {t.edges} edges, bound is {settings.MAX_EDGES}")
        return self

    def to_type(self) -> GraphType:
        return GraphType(self.genus, self.boundaries, self.faces)


class CoefficientRow(CommandBase):
    """One row of a coefficient table."""
    monomial: str
    coefficient: str


def parse_rational(value: str) -> Fraction:
    """Parse "p/q" or an integer; decimals are refused to keep inputs exact."""
    text = str(value).strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"{text!r} is not an exact rational")
    return Fraction(text)


def parse_rationals(values: List[str]) -> List[Fraction]:
    return [parse_rational(v) for v in values]
