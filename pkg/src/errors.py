"""Exception hierarchy shared by every layer.

Each exception names the invariant it guards; the command layer prints that
name when it exits with status 1.
"""
from typing import Any, Optional


class RibbonError(Exception):
    """Base class for all domain errors."""

    invariant: str = "ribbon"

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        if invariant is not None:
            self.invariant = invariant


# Graph validation

class InvalidGraph(RibbonError):
    invariant = "valid-graph"


class InvalidPermutation(InvalidGraph):
    invariant = "permutation"


class FixedPointInvolution(InvalidGraph):
    invariant = "sigma1-fixed-point-free"


class NotInvolution(InvalidGraph):
    invariant = "sigma1-involution"


class PartnerInBoundary(InvalidGraph):
    invariant = "boundary-partner"


class BoundaryNotClosed(InvalidGraph):
    invariant = "boundary-sigma2-closed"


class LowDegreeVertex(InvalidGraph):
    invariant = "vertex-degree"


class InvalidMarking(InvalidGraph):
    invariant = "face-marking"


# Type arithmetic

class NonIntegralGenus(RibbonError):
    invariant = "integral-genus"


class UnstableType(RibbonError):
    invariant = "stable-type"


class InvalidProfile(RibbonError):
    invariant = "vertex-profile"


class BoundExceeded(RibbonError):
    invariant = "desk-scale-bounds"


# Algebra

class VariableMismatch(RibbonError):
    invariant = "variable-universe"


class ZeroDenominator(RibbonError):
    invariant = "nonzero-denominator"


class NotLaurent(RibbonError):
    """The cleared numerator is not divisible by a pair-form factor."""

    invariant = "laurent-cancellation"

    def __init__(self, message: str, numerator: Any = None):
        super().__init__(message)
        self.numerator = numerator


# Series

class NonSymmetricTable(RibbonError):
    invariant = "symmetric-w"


class IncompleteTable(RibbonError):
    invariant = "complete-free-energy"


# Volumes

class DegenerateFiber(RibbonError):
    invariant = "surjective-perimeter-map"


class InvariantViolation(RibbonError):
    """A runtime check of a structural property failed."""

    def __init__(self, invariant: str, detail: str):
        super().__init__(f"{invariant}: {detail}", invariant=invariant)
        self.detail = detail
