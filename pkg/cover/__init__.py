"""The central extension of a lattice by mu2 and its orthogonal transformations."""

from cover.automorphisms import (
    CoverGroup,
    apply_to_twisted,
    compose,
    cover_group,
    identity,
    inverse,
    kernel_element,
    lift_orthogonal,
    uncorrected_lift,
)
from cover.cocycle import build_cocycle, commutator_sign, twisted_multiply
from cover.models import Cocycle, CoverAutomorphism, TwistedGroupElement

__all__ = [
    "Cocycle",
    "CoverAutomorphism",
    "CoverGroup",
    "TwistedGroupElement",
    "apply_to_twisted",
    "build_cocycle",
    "commutator_sign",
    "compose",
    "cover_group",
    "identity",
    "inverse",
    "kernel_element",
    "lift_orthogonal",
    "uncorrected_lift",
]
