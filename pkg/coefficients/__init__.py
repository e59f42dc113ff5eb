"""Exact coefficient rings."""

from coefficients.models import Ring, RingElement, RingKind
from coefficients.rings import SpecializationError, can_specialize, is_unit, mu2_elements, parse_ring, specialize

__all__ = [
    "Ring",
    "RingElement",
    "RingKind",
    "SpecializationError",
    "can_specialize",
    "is_unit",
    "mu2_elements",
    "parse_ring",
    "specialize",
]
