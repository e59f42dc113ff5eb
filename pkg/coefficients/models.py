"""Coefficient ring models."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from sympy import isprime


class RingKind(str, Enum):
    RATIONALS = "Q"
    INTEGERS = "Z"
    PRIME_FIELD = "Fp"
    MODULAR = "Zn"


@dataclass(frozen=True, slots=True)
class Ring:
    """One of the four supported exact rings; `modulus` is set for residue rings."""

    kind: RingKind
    modulus: int = 0

    def __post_init__(self) -> None:
        if self.kind is RingKind.PRIME_FIELD and not isprime(self.modulus):
            raise ValueError(f"PrimeField modulus must be prime, got {self.modulus}")
        if self.kind is RingKind.MODULAR and self.modulus < 2:
            raise ValueError(f"ModularRing modulus must be at least 2, got {self.modulus}")
        if self.kind in {RingKind.RATIONALS, RingKind.INTEGERS} and self.modulus:
            raise ValueError(f"{self.kind.value} does not take a modulus")

    @classmethod
    def rationals(cls) -> Ring:
        return cls(RingKind.RATIONALS)

    @classmethod
    def integers(cls) -> Ring:
        return cls(RingKind.INTEGERS)

    @classmethod
    def prime_field(cls, p: int) -> Ring:
        return cls(RingKind.PRIME_FIELD, p)

    @classmethod
    def modular(cls, n: int) -> Ring:
        return cls(RingKind.MODULAR, n)

    @property
    def is_residue_ring(self) -> bool:
        return self.kind in {RingKind.PRIME_FIELD, RingKind.MODULAR}

    @property
    def embeds_in_rationals(self) -> bool:
        return self.kind in {RingKind.RATIONALS, RingKind.INTEGERS}

    @property
    def token(self) -> str:
        if self.is_residue_ring:
            return f"{self.kind.value}:{self.modulus}"
        return self.kind.value

    def zero(self) -> RingElement:
        return self.from_int(0)

    def one(self) -> RingElement:
        return self.from_int(1)

    def from_int(self, value: int) -> RingElement:
        if self.is_residue_ring:
            return RingElement(self, value % self.modulus)
        if self.kind is RingKind.RATIONALS:
            return RingElement(self, Fraction(value))
        return RingElement(self, int(value))

    def residues(self) -> tuple[RingElement, ...]:
        if not self.is_residue_ring:
            raise ValueError(f"{self.token} is infinite and has no residue list")
        return tuple(RingElement(self, value) for value in range(self.modulus))

    def __str__(self) -> str:
        return self.token


@dataclass(frozen=True, slots=True)
class RingElement:
    """Immutable element; rationals are Fractions (lowest terms), residues sit in [0, n)."""

    ring: Ring
    value: int | Fraction

    def _coerce(self, other: RingElement | int) -> RingElement:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError(f"Cannot combine elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        raise TypeError(f"Cannot combine {self.ring} element with {type(other).__name__}")

    def _wrap(self, value: int | Fraction) -> RingElement:
        if self.ring.is_residue_ring:
            return RingElement(self.ring, int(value) % self.ring.modulus)
        return RingElement(self.ring, value)

    def __add__(self, other: RingElement | int) -> RingElement:
        other = self._coerce(other)
        return self._wrap(self.value + other.value)

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        return self._wrap(-self.value)

    def __sub__(self, other: RingElement | int) -> RingElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> RingElement:
        return self._coerce(other) - self

    def __mul__(self, other: RingElement | int) -> RingElement:
        other = self._coerce(other)
        return self._wrap(self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RingElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other: RingElement | int) -> RingElement:
        return self * self._coerce(other).inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    @property
    def is_unit(self) -> bool:
        kind = self.ring.kind
        if kind is RingKind.RATIONALS:
            return self.value != 0
        if kind is RingKind.INTEGERS:
            return self.value in (1, -1)
        return gcd(int(self.value), self.ring.modulus) == 1

    def inverse(self) -> RingElement:
        if not self.is_unit:
            raise ZeroDivisionError(f"{self} is not a unit in {self.ring}")
        if self.ring.kind is RingKind.RATIONALS:
            return RingElement(self.ring, 1 / self.value)
        if self.ring.kind is RingKind.INTEGERS:
            return self
        return RingElement(self.ring, pow(int(self.value), -1, self.ring.modulus))

    def to_fraction(self) -> Fraction:
        """Exact rational value; residues are returned as their representative in [0, n)."""
        return Fraction(self.value)

    def signed_value(self) -> int | Fraction:
        """Value with residues mapped to the symmetric range, so that -1 prints as -1."""
        if self.ring.is_residue_ring and self.value > self.ring.modulus // 2:
            return self.value - self.ring.modulus
        return self.value

    def __str__(self) -> str:
        return str(self.signed_value())


__all__ = ["Ring", "RingElement", "RingKind"]
