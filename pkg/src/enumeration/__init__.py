from src.enumeration.canonical import (
    CanonicalCode,
    CanonicalForm,
    automorphism_order,
    automorphisms,
    brute_force_automorphism_order,
    canonical_code,
    canonical_form,
    traversal_order,
)
from src.enumeration.generate import (
    MarkedGraphClass,
    TrivalentMap,
    generate_by_profile,
    generate_by_type,
    rooted_pairings,
    trivalent_maps,
)

__all__ = [
    "CanonicalCode",
    "CanonicalForm",
    "MarkedGraphClass",
    "TrivalentMap",
    "automorphism_order",
    "automorphisms",
    "brute_force_automorphism_order",
    "canonical_code",
    "canonical_form",
    "generate_by_profile",
    "generate_by_type",
    "rooted_pairings",
    "traversal_order",
    "trivalent_maps",
]
