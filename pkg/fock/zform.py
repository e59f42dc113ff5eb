"""Integral form: spanning composites of s_{a,n} and exact membership by Hermite normal form."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form
from sympy.utilities.iterables import partitions

from fock.heisenberg import apply_s
from fock.models import FockVector
from fock.spaces import graded_piece_basis, lattice_vector_state
from lattices import Lattice, LatticeVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ZFormPiece:
    lattice_point: LatticeVector
    weight: int
    dimension: int
    spanning_size: int
    rank: int

    @property
    def saturated(self) -> bool:
        return self.rank == self.dimension


def spanning_generators(lattice: Lattice, lattice_point: LatticeVector) -> list[LatticeVector]:
    """+-alpha_i together with lambda itself."""
    generators: list[LatticeVector] = []
    for index in range(lattice.rank):
        basis = lattice.basis_vector(index)
        generators.append(basis)
        generators.append(tuple(-entry for entry in basis))
    point = tuple(lattice_point)
    if any(point) and point not in generators:
        generators.append(point)
    return generators


@lru_cache(maxsize=None)
def _spanning_set(lattice: Lattice, lattice_point: LatticeVector, weight: int, depth_bound: int) -> tuple[FockVector, ...]:
    depth = weight - lattice.norm(lattice_point) // 2
    if depth < 0:
        return ()
    generators = spanning_generators(lattice, lattice_point)
    seed = lattice_vector_state(lattice, lattice_point)
    found: dict[FockVector, None] = {}
    for multiplicities in partitions(depth):
        multiplicities = dict(multiplicities)
        if sum(multiplicities.values()) > depth_bound:
            continue
        choices = [
            [tuple((part, generator) for generator in picked) for picked in itertools.combinations_with_replacement(range(len(generators)), count)]
            for part, count in sorted(multiplicities.items())
        ]
        for choice in itertools.product(*choices):
            vector = seed
            for part, generator in (item for group in choice for item in group):
                vector = apply_s(lattice, generators[generator], part, vector)
            if vector:
                found.setdefault(vector, None)
    logger.debug("Z-form spanning set at (%s, %s) has %s vectors", lattice_point, weight, len(found))
    return tuple(found)


def zform_spanning_set(
    lattice: Lattice,
    lattice_point: LatticeVector,
    weight: int,
    *,
    depth_bound: int | None = None,
) -> list[FockVector]:
    """Composites s_{a^1,n_1} ... s_{a^k,n_k} iota(e_lambda) in bidegree (lambda, weight), k <= depth_bound."""
    bound = depth_bound if depth_bound is not None else 2 * weight
    return list(_spanning_set(lattice, tuple(lattice_point), weight, bound))


def _integer_columns(columns: list[list[Fraction]]) -> tuple[Matrix, int]:
    denominator = lcm(1, *(value.denominator for column in columns for value in column))
    rows = len(columns[0])
    return Matrix(rows, len(columns), lambda i, j: int(columns[j][i] * denominator)), denominator


def integral_membership(
    lattice: Lattice,
    v: FockVector,
    lattice_point: LatticeVector,
    weight: int,
    *,
    depth_bound: int | None = None,
) -> bool:
    """True iff v lies in the Z-span of the spanning composites; False means not proven integral."""
    basis = graded_piece_basis(lattice, tuple(lattice_point), weight)
    target = basis.coordinates(v)
    if basis.dimension == 0 or not any(target):
        return True
    spanning = zform_spanning_set(lattice, lattice_point, weight, depth_bound=depth_bound)
    if not spanning:
        return False
    columns = [basis.coordinates(vector) for vector in spanning]
    matrix, denominator = _integer_columns(columns + [target])
    lattice_hnf = hermite_normal_form(matrix[:, :-1])
    extended_hnf = hermite_normal_form(lattice_hnf.row_join(matrix[:, -1]))
    return extended_hnf == lattice_hnf


def zform_piece(lattice: Lattice, lattice_point: LatticeVector, weight: int, *, depth_bound: int | None = None) -> ZFormPiece:
    """Rank of the spanning set against the dimension of the graded piece."""
    basis = graded_piece_basis(lattice, tuple(lattice_point), weight)
    spanning = zform_spanning_set(lattice, lattice_point, weight, depth_bound=depth_bound)
    rank = Matrix([basis.coordinates(vector) for vector in spanning]).rank() if spanning else 0
    return ZFormPiece(
        lattice_point=tuple(lattice_point),
        weight=weight,
        dimension=basis.dimension,
        spanning_size=len(spanning),
        rank=rank,
    )


__all__ = ["ZFormPiece", "integral_membership", "spanning_generators", "zform_piece", "zform_spanning_set"]
