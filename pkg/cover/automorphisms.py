"""Lifts of orthogonal transformations to the cover and the group they form."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, replace

import numpy as np
from sympy import Matrix

from coefficients import Ring, RingElement, mu2_elements
from cover.cocycle import build_cocycle
from cover.models import Cocycle, CoverAutomorphism, TwistedGroupElement
from lattices import IntegerMatrixGroup, Lattice, LatticeVector, ResourceCapExceeded, orthogonal_group
from lattices.groups import group_cap_from_env, preserves_gram

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class CoverGroup:
    """All (h, eta) over a ring, split into the kernel Hom(L, mu2) and the image in O(L)."""

    ring: Ring
    lattice: Lattice
    elements: tuple[CoverAutomorphism, ...]
    orthogonal: IntegerMatrixGroup
    mu2_size: int

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def kernel(self) -> tuple[CoverAutomorphism, ...]:
        return tuple(element for element in self.elements if element.is_kernel_element)

    @property
    def image_order(self) -> int:
        return len({element.h for element in self.elements})

    @property
    def is_exact(self) -> bool:
        """1 -> Hom(L, mu2) -> cover group -> O(L) -> 1 has the expected sizes."""
        kernel_order = len(self.kernel)
        return (
            kernel_order == self.mu2_size**self.lattice.rank
            and self.image_order == self.orthogonal.order
            and self.order == kernel_order * self.image_order
        )


def lift_orthogonal(
    ring: Ring,
    eps: Cocycle,
    h: np.ndarray | Sequence[Sequence[int]],
    eta_basis: Sequence[RingElement | int],
) -> CoverAutomorphism:
    lattice = eps.lattice
    matrix = np.array(h, dtype=np.int64)
    if matrix.shape != (lattice.rank, lattice.rank):
        raise ValueError(f"Matrix shape {matrix.shape} does not match rank {lattice.rank}")
    if not preserves_gram(lattice, matrix):
        raise ValueError(f"Matrix {matrix.tolist()} does not preserve the Gram matrix of {lattice.name}")
    if len(eta_basis) != lattice.rank:
        raise ValueError(f"Expected {lattice.rank} eta values, got {len(eta_basis)}")
    values = tuple(value if isinstance(value, RingElement) else ring.from_int(value) for value in eta_basis)
    for value in values:
        if value * value != ring.one():
            raise ValueError(f"eta value {value} is not a square root of unity in {ring}")
    automorphism = CoverAutomorphism(
        ring=ring,
        cocycle=eps,
        h=tuple(tuple(int(entry) for entry in row) for row in matrix),
        eta_on_basis=values,
    )
    _check_extension(automorphism)
    return automorphism


def uncorrected_lift(
    ring: Ring,
    eps: Cocycle,
    h: np.ndarray | Sequence[Sequence[int]],
    eta_basis: Sequence[RingElement | int],
) -> CoverAutomorphism:
    """(h, eta) with eta extended as a plain character, dropping the delta(a, b) signs."""
    return replace(lift_orthogonal(ring, eps, h, eta_basis), corrected=False)


def _check_extension(automorphism: CoverAutomorphism) -> None:
    """eta(a+b) = eta(a) eta(b) delta(a, b) on basis pairs and their negatives."""
    lattice = automorphism.lattice
    for i in range(lattice.rank):
        for j in range(lattice.rank):
            a = lattice.basis_vector(i)
            if automorphism.correction(a, lattice.basis_vector(j)) != automorphism.correction(lattice.basis_vector(j), a):
                raise ValueError(f"Inconsistent extension of eta: delta is not symmetric on basis pair ({i}, {j})")
            for sign in (1, -1):
                b = tuple(sign * entry for entry in lattice.basis_vector(j))
                total = tuple(x + y for x, y in zip(a, b))
                expected = automorphism.eta(a) * automorphism.eta(b) * automorphism.correction(a, b)
                if automorphism.eta(total) != expected:
                    raise ValueError(f"Inconsistent extension of eta at {a} + {b}")


def compose(ring: Ring, f: CoverAutomorphism, g: CoverAutomorphism) -> CoverAutomorphism:
    if f.lattice != g.lattice or f.ring != g.ring or f.ring != ring:
        raise ValueError("Cover automorphisms live over different lattices or rings")
    lattice = f.lattice
    eta = tuple(
        f.eta(g.transform(lattice.basis_vector(i))) * g.eta_on_basis[i]
        for i in range(lattice.rank)
    )
    product = f.matrix @ g.matrix
    return CoverAutomorphism(
        ring=ring,
        cocycle=f.cocycle,
        h=tuple(tuple(int(entry) for entry in row) for row in product),
        eta_on_basis=eta,
    )


def inverse(ring: Ring, f: CoverAutomorphism) -> CoverAutomorphism:
    inverse_matrix = Matrix(f.h).inv()
    h = tuple(tuple(int(entry) for entry in inverse_matrix.row(i)) for i in range(f.lattice.rank))
    candidate = CoverAutomorphism(ring=ring, cocycle=f.cocycle, h=h, eta_on_basis=f.eta_on_basis)
    eta = tuple(f.eta(candidate.transform(f.lattice.basis_vector(i))) for i in range(f.lattice.rank))
    return CoverAutomorphism(ring=ring, cocycle=f.cocycle, h=h, eta_on_basis=eta)


def identity(ring: Ring, eps: Cocycle) -> CoverAutomorphism:
    return kernel_element(ring, eps, [1] * eps.lattice.rank)


def kernel_element(ring: Ring, eps: Cocycle, values: Sequence[RingElement | int]) -> CoverAutomorphism:
    """The homomorphism a -> prod values_i^{a_i}, acting as iota(e_a) -> lambda(a) iota(e_a)."""
    return lift_orthogonal(ring, eps, np.eye(eps.lattice.rank, dtype=np.int64), values)


def apply_to_twisted(f: CoverAutomorphism, x: TwistedGroupElement) -> TwistedGroupElement:
    terms: dict[LatticeVector, RingElement] = {}
    for point, value in x.terms.items():
        image = f.transform(point)
        terms[image] = terms.get(image, f.ring.zero()) + value * f.eta(point)
    return TwistedGroupElement(f.ring, terms)


def cover_group(
    ring: Ring,
    lattice: Lattice,
    *,
    eps: Cocycle | None = None,
    orthogonal: IntegerMatrixGroup | None = None,
    cap: int | None = None,
) -> CoverGroup:
    limit = cap if cap is not None else group_cap_from_env()
    group = orthogonal if orthogonal is not None else orthogonal_group(lattice, cap=limit)
    cocycle = eps if eps is not None else build_cocycle(lattice)
    signs = mu2_elements(ring)
    expected = len(signs) ** lattice.rank * group.order
    if expected > limit:
        raise ResourceCapExceeded(f"Cover group of {lattice.name} over {ring} has {expected} elements, cap is {limit}")
    elements = tuple(
        lift_orthogonal(ring, cocycle, matrix, values)
        for matrix in group.elements
        for values in itertools.product(signs, repeat=lattice.rank)
    )
    logger.info("Cover group of %s over %s has %s elements", lattice.name, ring, len(elements))
    return CoverGroup(ring=ring, lattice=lattice, elements=elements, orthogonal=group, mu2_size=len(signs))


__all__ = [
    "CoverGroup",
    "apply_to_twisted",
    "compose",
    "cover_group",
    "identity",
    "inverse",
    "kernel_element",
    "lift_orthogonal",
    "uncorrected_lift",
]
