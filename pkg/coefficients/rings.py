"""Ring parsing, units, square roots of unity and specialisation of rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from coefficients.models import Ring, RingElement, RingKind


class SpecializationError(ValueError):
    """A rational number has no image in the target ring."""


def parse_ring(token: str) -> Ring:
    normalized = token.strip()
    if normalized == "Q":
        return Ring.rationals()
    if normalized == "Z":
        return Ring.integers()
    prefix, _, modulus_text = normalized.partition(":")
    if prefix in {"Fp", "Zn"} and modulus_text:
        try:
            modulus = int(modulus_text)
        except ValueError as error:
            raise ValueError(f"Ring modulus must be an integer: {token}") from error
        if prefix == "Fp":
            return Ring.prime_field(modulus)
        return Ring.modular(modulus)
    raise ValueError(f"Unsupported ring token: {token} (expected Q, Z, Fp:<p> or Zn:<n>)")


def mu2_elements(ring: Ring) -> tuple[RingElement, ...]:
    """All x with x^2 = 1."""
    if ring.embeds_in_rationals:
        return (ring.one(), ring.from_int(-1))
    return tuple(x for x in ring.residues() if x * x == ring.one())


def is_unit(ring: Ring, x: RingElement) -> bool:
    if x.ring != ring:
        raise ValueError(f"{x} does not belong to {ring}")
    return x.is_unit


def specialize(ring: Ring, value: Fraction | int) -> RingElement:
    """Image of a rational in `ring`; the denominator has to be a unit there."""
    value = Fraction(value)
    kind = ring.kind
    if kind is RingKind.RATIONALS:
        return RingElement(ring, value)
    if kind is RingKind.INTEGERS:
        if value.denominator != 1:
            raise SpecializationError(f"{value} is not an integer")
        return RingElement(ring, value.numerator)
    if gcd(value.denominator, ring.modulus) != 1:
        raise SpecializationError(f"Denominator of {value} is not invertible in {ring}")
    inverse = pow(value.denominator, -1, ring.modulus)
    return RingElement(ring, value.numerator * inverse % ring.modulus)


def can_specialize(ring: Ring, value: Fraction | int) -> bool:
    try:
        specialize(ring, value)
    except SpecializationError:
        return False
    return True


__all__ = ["SpecializationError", "can_specialize", "is_unit", "mu2_elements", "parse_ring", "specialize"]
