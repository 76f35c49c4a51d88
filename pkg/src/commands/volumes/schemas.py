from fractions import Fraction
from typing import List, Optional

from pydantic import Field, field_validator, model_validator

from src.commands.schemas import CommandBase, TypeRequest, parse_rationals


class VolumeRequest(TypeRequest):
    """Exact volume at (x, y), a Laplace check at lambda, or the closed-form identity."""
    x: List[Fraction] = Field(default_factory=list, description="Face perimeters")
    y: List[Fraction] = Field(default_factory=list, description="Boundary perimeters")
    laplace: bool = Field(False, description="Monte Carlo Laplace check")
    exact: bool = Field(False, description="Symbolic Laplace identity for one-face types")
    lambdas: List[Fraction] = Field(default_factory=list, description="Laplace variables")
    samples: Optional[int] = Field(None, ge=1, description="Monte Carlo samples")
    tolerance: Optional[float] = Field(None, gt=0, description="Relative error accepted")

    @field_validator("x", "y", "lambdas", mode="before")
    def exact_rationals(cls, v):
        """Parse "p/q" strings; decimals are refused."""
        if isinstance(v, (list, tuple)):
            return parse_rationals([str(item) for item in v])
        return v

    @model_validator(mode="after")
    def mode_matches_arguments(self):
        """Each mode gets exactly the arguments it uses."""
        if self.laplace and self.exact:
            raise ValueError("--laplace and --exact are exclusive")
        t = self.to_type()
        if self.laplace:
            if len(self.lambdas) != t.n or any(v <= 0 for v in self.lambdas):
                raise ValueError(f"--laplace needs {t.n} positive --lambda values")
        elif self.exact:
            if t.n != 1:
                raise ValueError("--exact needs a one-face type")
        elif len(self.x) != t.n or len(self.y) != t.b:
            raise ValueError(f"type {t} needs {t.n} --x and {t.b} --y values")
        return self


class VolumeResponse(CommandBase):
    type: str
    x: List[str]
    y: List[str]
    value: str
    wall: bool
    classes: int


class LaplaceResponse(CommandBase):
    type: str
    lambdas: List[str]
    w_exact: float
    integral_estimate: float
    rel_error: float
    samples: int
    seed: int
    tolerance: float
    within_tolerance: bool


class LaplaceIdentityResponse(CommandBase):
    type: str
    coefficient: str
    transform: str
    w: str
    matches: bool
