"""Graded pieces of the Fock space, the truncation basis and the dimension oracle."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache

from sympy.utilities.iterables import partitions

from coefficients import Ring, RingElement, specialize
from fock.models import FockState, FockVector, GradedPieceBasis, Mode
from lattices import Lattice, LatticeVector, short_vectors

logger = logging.getLogger(__name__)


def vacuum(lattice: Lattice) -> FockVector:
    return lattice_vector_state(lattice, (0,) * lattice.rank)


def lattice_vector_state(lattice: Lattice, point: LatticeVector) -> FockVector:
    """iota(e_lambda) as a Fock vector."""
    if len(point) != lattice.rank:
        raise ValueError(f"Lattice point {tuple(point)} does not match rank {lattice.rank}")
    return FockVector.from_state(FockState(tuple(point)))


def heisenberg_state(
    lattice: Lattice,
    modes: Iterable[Mode],
    *,
    point: LatticeVector | None = None,
    coefficient: Fraction | int = 1,
) -> FockVector:
    lattice_point = tuple(point) if point is not None else (0,) * lattice.rank
    return FockVector.from_state(FockState(lattice_point, tuple(modes)), coefficient)


@lru_cache(maxsize=None)
def graded_piece_basis(lattice: Lattice, lattice_point: LatticeVector, weight: int) -> GradedPieceBasis:
    point = tuple(lattice_point)
    depth = weight - lattice.norm(point) // 2
    if depth < 0:
        return GradedPieceBasis(point, weight, ())
    states = []
    for multiplicities in partitions(depth):
        multiplicities = dict(multiplicities)
        colourings = [
            [tuple((part, index) for index in indices) for indices in itertools.combinations_with_replacement(range(lattice.rank), count)]
            for part, count in sorted(multiplicities.items())
        ]
        for choice in itertools.product(*colourings):
            states.append(FockState(point, tuple(mode for group in choice for mode in group)))
    states.sort(key=lambda state: state.modes)
    return GradedPieceBasis(point, weight, tuple(states))


def lattice_points(lattice: Lattice, max_weight: int) -> list[LatticeVector]:
    """All lambda with <lambda, lambda>/2 <= max_weight, ordered by norm then lexicographically."""
    zero = (0,) * lattice.rank
    points = [zero, *short_vectors(lattice, 2 * max_weight)] if max_weight >= 0 else []
    return sorted(points, key=lambda point: (lattice.norm(point), point))


def truncation_basis(lattice: Lattice, max_weight: int) -> list[FockState]:
    """Every state of weight <= max_weight: by weight, then lattice point, then canonical order."""
    points = lattice_points(lattice, max_weight)
    basis = []
    for weight in range(max_weight + 1):
        for point in points:
            if lattice.norm(point) // 2 <= weight:
                basis.extend(graded_piece_basis(lattice, point, weight).states)
    logger.debug("Truncation of %s at weight %s has %s states", lattice.name, max_weight, len(basis))
    return basis


def colored_partition_counts(colors: int, limit: int) -> list[int]:
    """p_r(n) for n <= limit: coefficients of prod_k (1 - q^k)^{-r}."""
    counts = [1] + [0] * limit
    for _ in range(colors):
        for part in range(1, limit + 1):
            for n in range(part, limit + 1):
                counts[n] += counts[n - part]
    return counts


def theta_counts(lattice: Lattice, limit: int) -> list[int]:
    """Number of lambda with <lambda, lambda>/2 = k for k <= limit."""
    counts = [1] + [0] * limit
    for vector in short_vectors(lattice, 2 * limit):
        counts[lattice.norm(vector) // 2] += 1
    return counts


def graded_dimension(lattice: Lattice, weight: int) -> int:
    if weight < 0:
        raise ValueError(f"Weight must be non-negative, got {weight}")
    theta = theta_counts(lattice, weight)
    colored = colored_partition_counts(lattice.rank, weight)
    return sum(theta[k] * colored[weight - k] for k in range(weight + 1))


def specialize_vector(v: FockVector, ring: Ring) -> dict[FockState, RingElement]:
    """Coefficients of v mapped into ring; raises SpecializationError on a bad denominator."""
    images = {state: specialize(ring, value) for state, value in v.items()}
    return {state: value for state, value in images.items() if value}


__all__ = [
    "colored_partition_counts",
    "graded_dimension",
    "graded_piece_basis",
    "heisenberg_state",
    "lattice_points",
    "lattice_vector_state",
    "specialize_vector",
    "theta_counts",
    "truncation_basis",
    "vacuum",
]
