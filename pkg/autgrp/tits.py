"""Tits elements n_a = exp(e_0) exp(-f_0) exp(e_0) and the Tits group on a truncation."""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction

from autgrp.actions import identity_matrix, matrix_on_truncation
from autgrp.models import AutAction, RootGroupElement, TorusCharacter, TruncatedMatrixGroup, fraction_key
from coefficients import Ring
from fock import lattice_vector_state, truncation_basis
from lattices import LatticeVector, close_under_products, roots
from vertex import VertexAlgebra

logger = logging.getLogger(__name__)


def dual_root_scalar(algebra: VertexAlgebra, root: LatticeVector) -> Fraction:
    """c with (e_a)_1 (c e_{-a}) = 1."""
    lattice = algebra.lattice
    negative = tuple(-entry for entry in root)
    image = algebra.mode(lattice_vector_state(lattice, root), 1, lattice_vector_state(lattice, negative))
    one = algebra.vacuum()
    (vacuum_state,) = one.states
    scalar = image.coefficient(vacuum_state)
    if not scalar or image != one.scale(scalar):
        raise RuntimeError(f"Normalization failure: (e_a)_1 e_-a = {image.describe()} for a = {root}")
    return 1 / scalar


def tits_element(algebra: VertexAlgebra, root: LatticeVector) -> AutAction:
    c = dual_root_scalar(algebra, root)
    negative = tuple(-entry for entry in root)
    raising = AutAction.from_root_exp(RootGroupElement(root, 1))
    lowering = AutAction.from_root_exp(RootGroupElement(negative, -c))
    return AutAction.composite(raising, lowering, raising, label=f"n{tuple(root)}")


def sign_character(algebra: VertexAlgebra, root: LatticeVector) -> TorusCharacter:
    """lambda -> (-1)^{<a, lambda>}, the torus element a^vee(-1)."""
    lattice = algebra.lattice
    values = [(-1) ** (lattice.inner(root, lattice.basis_vector(index)) % 2) for index in range(lattice.rank)]
    return TorusCharacter.from_values(Ring.rationals(), values)


def two_torsion_characters(algebra: VertexAlgebra) -> list[TorusCharacter]:
    return [
        TorusCharacter.from_values(Ring.rationals(), signs)
        for signs in itertools.product((1, -1), repeat=algebra.lattice.rank)
    ]


def tits_group(algebra: VertexAlgebra, truncation: int, *, cap: int | None = None) -> TruncatedMatrixGroup:
    """Closure of the n_a matrices and the Hom(L, +-1) torus matrices; order 2^rank |W|."""
    lattice = algebra.lattice
    basis = truncation_basis(lattice, truncation)
    generators = [
        matrix_on_truncation(tits_element(algebra, root), truncation, algebra=algebra, basis=basis)
        for root in roots(lattice)
    ]
    generators.extend(
        matrix_on_truncation(AutAction.from_torus(character), truncation, algebra=algebra, basis=basis)
        for character in two_torsion_characters(algebra)
    )
    elements = close_under_products(
        generators,
        identity=identity_matrix(len(basis)),
        multiply=lambda left, right: left.dot(right),
        key=fraction_key,
        cap=cap,
        label=f"Tits group of {lattice.name}",
    )
    return TruncatedMatrixGroup(truncation_weight=truncation, basis=tuple(basis), elements=tuple(elements))


__all__ = ["dual_root_scalar", "sign_character", "tits_element", "tits_group", "two_torsion_characters"]
