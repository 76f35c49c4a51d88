from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from src.enumeration.generate import generate_by_profile
from src.errors import InvariantViolation
from src.oracle.wick import PairingConfig, face_signature, is_connected_pairing, pairings
from src.ribbon.types import VertexProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AuditResult:
    profile: str
    raw: int
    orbit_sum: Fraction

    @property
    def matches(self) -> bool:
        return self.raw == self.orbit_sum


def orbit_stabilizer_audit(profile: VertexProfile, strict: bool = False) -> AuditResult:
    """Count labeled connected (pairing, face-marking) pairs two ways.

    Directly, every connected pairing with n faces carries n! markings. Via
    enumeration, each class is an orbit of |G| / |Aut| labeled pairs.

    Raises:
        InvariantViolation: the counts differ and strict is set.
    """
    config = PairingConfig.of(profile)
    raw = 0
    for sigma1 in pairings(config.h):
        if is_connected_pairing(config, sigma1):
            raw += math.factorial(face_signature(config, sigma1)[0])
    order = profile.group_order()
    orbit_sum = sum((Fraction(order, c.aut_order) for c in generate_by_profile(profile)), Fraction(0))
    result = AuditResult(profile.label(), raw, orbit_sum)
    logger.info(f"Audit {profile}: raw {raw}, orbit sum {orbit_sum}")
    if strict and not result.matches:
        raise InvariantViolation("orbit-stabilizer", f"profile {profile}: {raw} != {orbit_sum}")
    return result
