"""Cocycle, twisted group ring and cover automorphism models."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from coefficients import Ring, RingElement
from lattices import Lattice, LatticeVector


@dataclass(frozen=True, slots=True)
class Cocycle:
    """Bimultiplicative eps: L x L -> {+1, -1}, fixed by its values on basis pairs."""

    lattice: Lattice
    eps_on_basis: tuple[tuple[int, ...], ...]

    @property
    def basis_order(self) -> tuple[int, ...]:
        return tuple(range(self.lattice.rank))

    def exponent(self, a: LatticeVector, b: LatticeVector) -> int:
        rank = self.lattice.rank
        total = 0
        for i in range(rank):
            if not a[i]:
                continue
            for j in range(rank):
                if b[j] and self.eps_on_basis[i][j] == -1:
                    total += a[i] * b[j]
        return total % 2

    def __call__(self, a: LatticeVector, b: LatticeVector) -> int:
        return -1 if self.exponent(a, b) else 1


@dataclass(slots=True)
class TwistedGroupElement:
    """Finite sum of c_a iota(e_a) in R{L}; zero coefficients are never stored."""

    ring: Ring
    terms: dict[LatticeVector, RingElement] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {point: value for point, value in self.terms.items() if value}

    @classmethod
    def basis(cls, ring: Ring, point: LatticeVector, coefficient: RingElement | int = 1) -> TwistedGroupElement:
        value = coefficient if isinstance(coefficient, RingElement) else ring.from_int(coefficient)
        return cls(ring, {tuple(point): value})

    def __add__(self, other: TwistedGroupElement) -> TwistedGroupElement:
        terms = dict(self.terms)
        for point, value in other.terms.items():
            terms[point] = terms.get(point, self.ring.zero()) + value
        return TwistedGroupElement(self.ring, terms)

    def scale(self, scalar: RingElement | int) -> TwistedGroupElement:
        return TwistedGroupElement(self.ring, {point: value * scalar for point, value in self.terms.items()})

    def __neg__(self) -> TwistedGroupElement:
        return self.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistedGroupElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms


@dataclass(frozen=True, slots=True)
class CoverAutomorphism:
    """(h, eta): iota(e_a) -> eta(a) iota(e_{h a}), with eta stored on the basis only.

    With `corrected=False` eta is the plain character on the basis values, without the
    delta(a, b) signs; that map is a cover automorphism only when delta is trivial.
    """

    ring: Ring
    cocycle: Cocycle
    h: tuple[tuple[int, ...], ...]
    eta_on_basis: tuple[RingElement, ...]
    corrected: bool = True

    @property
    def lattice(self) -> Lattice:
        return self.cocycle.lattice

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.h, dtype=np.int64)

    def transform(self, a: LatticeVector) -> LatticeVector:
        rank = len(a)
        return tuple(sum(self.h[i][j] * a[j] for j in range(rank)) for i in range(rank))

    def correction(self, a: LatticeVector, b: LatticeVector) -> int:
        """delta(a, b) = eps(h a, h b) eps(a, b)."""
        return self.cocycle(self.transform(a), self.transform(b)) * self.cocycle(a, b)

    def eta(self, a: LatticeVector) -> RingElement:
        """eta(a) built coordinate by coordinate from eta(a+b) = eta(a) eta(b) delta(a, b)."""
        rank = len(a)
        value = self.ring.one()
        for i in range(rank):
            if a[i] % 2:
                value = value * self.eta_on_basis[i]
        if not self.corrected:
            return value
        sign_exponent = 0
        for i in range(rank):
            basis_i = self.lattice.basis_vector(i)
            if self.correction(basis_i, basis_i) == -1:
                sign_exponent += a[i] * (a[i] - 1) // 2
            for j in range(i + 1, rank):
                if a[i] and a[j] and self.correction(basis_i, self.lattice.basis_vector(j)) == -1:
                    sign_exponent += a[i] * a[j]
        if sign_exponent % 2:
            value = -value
        return value

    @property
    def has_trivial_correction(self) -> bool:
        rank = self.lattice.rank
        return all(
            self.correction(self.lattice.basis_vector(i), self.lattice.basis_vector(j)) == 1
            for i in range(rank)
            for j in range(rank)
        )

    @property
    def is_kernel_element(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.lattice.rank, dtype=np.int64)))

    @property
    def is_identity(self) -> bool:
        return self.is_kernel_element and all(value == self.ring.one() for value in self.eta_on_basis)

    @property
    def key(self) -> tuple:
        return (self.h, tuple(value.value for value in self.eta_on_basis))


__all__ = ["Cocycle", "CoverAutomorphism", "TwistedGroupElement"]
