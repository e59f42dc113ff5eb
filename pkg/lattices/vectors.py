"""Inner products, exact dual data and short-vector enumeration."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import ceil, floor, isqrt

from sympy import Matrix

from lattices.models import Lattice, LatticeVector

logger = logging.getLogger(__name__)


def inner(lattice: Lattice, x: LatticeVector, y: LatticeVector) -> int:
    return lattice.inner(x, y)


def determinant(lattice: Lattice) -> int:
    return int(Matrix(lattice.gram).det())


def gram_inverse(lattice: Lattice) -> tuple[tuple[Fraction, ...], ...]:
    inverse = Matrix(lattice.gram).inv()
    return tuple(
        tuple(Fraction(int(entry.p), int(entry.q)) for entry in inverse.row(i))
        for i in range(lattice.rank)
    )


def dual_pairing(lattice: Lattice, x: LatticeVector, root: LatticeVector) -> int:
    """<x, a^vee> for a root a; a^vee is a itself seen in the dual lattice (coordinates G a)."""
    coroot = coroot_coordinates(lattice, root)
    return sum(x_i * c_i for x_i, c_i in zip(x, coroot))


def coroot_coordinates(lattice: Lattice, root: LatticeVector) -> LatticeVector:
    """Coordinates of a^vee in the basis of L^vee dual to the lattice basis."""
    return tuple(sum(lattice.gram[i][j] * root[j] for j in range(lattice.rank)) for i in range(lattice.rank))


def short_vectors(lattice: Lattice, bound: int) -> list[LatticeVector]:
    """All v with 0 < <v,v> <= bound, sorted lexicographically.

    Fincke-Pohst style search over the exact rational LDL^T decomposition of the Gram matrix,
    fixing coordinates from the last one down.
    """
    if bound < 0:
        raise ValueError(f"Short vector bound must be non-negative, got {bound}")
    rank = lattice.rank
    q = _quadratic_form_coefficients(lattice)
    coordinates = [0] * rank
    found: list[LatticeVector] = []

    def search(index: int, remaining: Fraction) -> None:
        center = -sum((q[index][j] * coordinates[j] for j in range(index + 1, rank)), Fraction(0))
        spread = isqrt(floor(remaining / q[index][index])) + 1
        for value in range(floor(center) - spread, ceil(center) + spread + 1):
            contribution = q[index][index] * (value - center) ** 2
            if contribution > remaining:
                continue
            coordinates[index] = value
            if index == 0:
                found.append(tuple(coordinates))
            else:
                search(index - 1, remaining - contribution)
        coordinates[index] = 0

    search(rank - 1, Fraction(bound))
    vectors = sorted(vector for vector in found if any(vector))
    logger.debug("Enumerated %s vectors of norm <= %s in %s", len(vectors), bound, lattice.name)
    return vectors


def roots(lattice: Lattice) -> list[LatticeVector]:
    """The norm 2 vectors of the lattice."""
    return [vector for vector in short_vectors(lattice, 2) if lattice.norm(vector) == 2]


def _quadratic_form_coefficients(lattice: Lattice) -> list[list[Fraction]]:
    """q with x^T G x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    rank = lattice.rank
    q = [[Fraction(entry) for entry in row] for row in lattice.gram]
    for i in range(rank):
        for j in range(i + 1, rank):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, rank):
            for m in range(k, rank):
                q[k][m] -= q[k][i] * q[i][m]
    return q


def positive_roots(lattice: Lattice) -> list[LatticeVector]:
    """Roots whose first nonzero coordinate is positive (lexicographic functional)."""
    return [root for root in roots(lattice) if _first_nonzero(root) > 0]


def simple_roots(lattice: Lattice) -> list[LatticeVector]:
    """Positive roots that are not a sum of two positive roots."""
    positive = positive_roots(lattice)
    positive_set = set(positive)
    decomposable = {
        tuple(x + y for x, y in zip(first, second))
        for first in positive
        for second in positive
    } & positive_set
    return [root for root in positive if root not in decomposable]


def _first_nonzero(vector: LatticeVector) -> int:
    for entry in vector:
        if entry:
            return entry
    return 0


__all__ = [
    "coroot_coordinates",
    "determinant",
    "dual_pairing",
    "gram_inverse",
    "inner",
    "positive_roots",
    "roots",
    "short_vectors",
    "simple_roots",
]
