from typing import List, Optional

from pydantic import Field, field_validator, model_validator

from src.commands.schemas import CommandBase, TypeRequest
from src.config import settings
from src.errors import InvalidProfile
from src.ribbon.types import GraphType, VertexProfile


class EnumerateRequest(CommandBase):
    """Either a type ((g,b),n) or a vertex profile [d, b1, b2, ...]."""
    genus: Optional[int] = Field(None, ge=0)
    boundaries: Optional[int] = Field(None, ge=0)
    faces: Optional[int] = Field(None, ge=1)
    profile: Optional[List[int]] = Field(None, description="[d, b1, b2, ...]")
    verify: bool = Field(False, description="Re-read emitted records and compare canonical codes")

    @field_validator("profile", mode="before")
    def split_profile(cls, v):
        """Accept "d,b1,b2,..." as well as a list."""
        if isinstance(v, str):
            try:
                return [int(part) for part in v.split(",") if part.strip()]
            except ValueError:
                raise ValueError(f"profile {v!r} is not a comma-separated list of integers")
        return v

    @field_validator("profile")
    def profile_must_be_valid(cls, v):
        """Non-negative counts within the half-edge and edge bounds."""
        if v is None:
            return v
        if not v or any(c < 0 for c in v):
            raise ValueError("profile entries must be non-negative and start with d")
        try:
            profile = VertexProfile.from_sequence(v)
        except InvalidProfile as e:
            raise ValueError(str(e))
        if profile.is_zero():
            raise ValueError("profile is empty")
        if profile.half_edges > settings.MAX_HALF_EDGES:
            raise ValueError(f"profile has {profile.half_edges} half-edges, bound is {settings.MAX_HALF_EDGES}")
        if profile.reduced_edges > settings.MAX_EDGES:
            raise ValueError(f"profile reduces to {profile.reduced_edges} edges, bound is {settings.MAX_EDGES}")
        return v

    @model_validator(mode="after")
    def type_or_profile(self):
        """Exactly one of a full type or a profile."""
        has_type = self.genus is not None and self.faces is not None
        if has_type == (self.profile is not None):
            raise ValueError("give --genus/--boundaries/--faces or --profile, not both or neither")
        if has_type:
            TypeRequest(genus=self.genus, boundaries=self.boundaries or 0, faces=self.faces)
        return self

    def to_type(self) -> Optional[GraphType]:
        if self.profile is not None:
            return None
        return GraphType(self.genus, self.boundaries or 0, self.faces)

    def to_profile(self) -> Optional[VertexProfile]:
        return VertexProfile.from_sequence(self.profile) if self.profile is not None else None


class AtlasRequest(TypeRequest):
    """Directory that receives one DOT file per class."""
    directory: str = Field(..., description="Output directory")


class AtlasEntry(CommandBase):
    path: str
    aut_order: int
