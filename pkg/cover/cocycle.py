"""The cocycle eps and multiplication in the twisted group ring."""

from __future__ import annotations

from coefficients import Ring
from cover.models import Cocycle, TwistedGroupElement
from lattices import Lattice, LatticeVector


def build_cocycle(lattice: Lattice) -> Cocycle:
    """eps(a_i, a_j) = (-1)^{<a_i, a_j>} for i > j and 1 for i <= j, extended bimultiplicatively."""
    rank = lattice.rank
    table = tuple(
        tuple(-1 if i > j and lattice.gram[i][j] % 2 else 1 for j in range(rank))
        for i in range(rank)
    )
    return Cocycle(lattice=lattice, eps_on_basis=table)


def commutator_sign(cocycle: Cocycle, a: LatticeVector, b: LatticeVector) -> int:
    """c(a, b) = eps(a, b) eps(b, a), which equals (-1)^{<a, b>}."""
    return cocycle(a, b) * cocycle(b, a)


def twisted_multiply(
    ring: Ring,
    cocycle: Cocycle,
    x: TwistedGroupElement,
    y: TwistedGroupElement,
) -> TwistedGroupElement:
    terms = {}
    for a, left in x.terms.items():
        for b, right in y.terms.items():
            point = tuple(p + q for p, q in zip(a, b))
            value = left * right * cocycle(a, b)
            terms[point] = terms.get(point, ring.zero()) + value
    return TwistedGroupElement(ring, terms)


__all__ = ["build_cocycle", "commutator_sign", "twisted_multiply"]
