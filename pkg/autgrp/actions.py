"""Torus, root-group and cover actions on Fock vectors and their truncated matrices."""

from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np
from sympy import prime

from autgrp.models import ActionKind, AutAction, RootGroupElement, TorusCharacter
from coefficients import Ring
from cover import CoverAutomorphism
from fock import FockState, FockVector, lattice_vector_state, truncation_basis
from lattices import Lattice
from vertex import VertexAlgebra

logger = logging.getLogger(__name__)


def apply_torus(g: TorusCharacter, v: FockVector) -> FockVector:
    """Scales each pi_lambda component by g(lambda)."""
    if not g.ring.embeds_in_rationals:
        raise ValueError(f"Torus actions on rational Fock vectors need a ring inside Q, got {g.ring}")
    return FockVector({state: value * g.value(state.lattice_point).to_fraction() for state, value in v.items()})


def apply_root_exp(e: RootGroupElement, v: FockVector, *, algebra: VertexAlgebra) -> FockVector:
    """sum_n r^n (x_0)^n v / n! with x = iota(e_alpha); stops at the first vanishing power."""
    if algebra.lattice.norm(e.root) != 2:
        raise ValueError(f"{e.root} is not a root of {algebra.lattice.name}")
    if not e.param:
        return v
    generator = lattice_vector_state(algebra.lattice, e.root)
    pieces = [(v, Fraction(1))]
    term = v
    power = 0
    while True:
        power += 1
        term = algebra.mode(generator, 0, term).scale(Fraction(1, power))
        if not term:
            break
        pieces.append((term, e.param**power))
    return FockVector.combine(pieces)


def apply_cover(phi: CoverAutomorphism, v: FockVector) -> FockVector:
    """e_lambda -> eta(lambda) e_{h lambda} and alpha_i(-n) -> (h alpha_i)(-n), re-expanded in the basis."""
    signs = {}
    for value in phi.eta_on_basis:
        signed = value.signed_value()
        if signed not in (1, -1):
            raise ValueError(f"Cover action on rational Fock vectors needs eta = +-1, got {value} in {phi.ring}")
    terms: dict[FockState, Fraction] = {}
    for state, value in v.items():
        point = state.lattice_point
        if point not in signs:
            signs[point] = int(phi.eta(point).signed_value())
        image_point = phi.transform(point)
        for modes, factor in _transform_modes(phi, state.modes).items():
            image = FockState(image_point, modes)
            terms[image] = terms.get(image, Fraction(0)) + value * factor * signs[point]
    return FockVector(terms)


def _transform_modes(phi: CoverAutomorphism, modes: tuple[tuple[int, int], ...]) -> dict[tuple[tuple[int, int], ...], int]:
    expanded: dict[tuple[tuple[int, int], ...], int] = {(): 1}
    rank = phi.lattice.rank
    for depth, index in modes:
        column = [phi.h[row][index] for row in range(rank)]
        grown: dict[tuple[tuple[int, int], ...], int] = {}
        for partial, factor in expanded.items():
            for row, entry in enumerate(column):
                if entry:
                    key = tuple(sorted(partial + ((depth, row),)))
                    grown[key] = grown.get(key, 0) + factor * entry
        expanded = {key: factor for key, factor in grown.items() if factor}
    return expanded


def apply_sector_flip(phi: CoverAutomorphism, sector: tuple[int, ...], v: FockVector) -> FockVector:
    image = apply_cover(phi, v)
    flipped = phi.transform(sector)
    return FockVector({state: -value if state.lattice_point == flipped else value for state, value in image.items()})


def apply_action(action: AutAction, v: FockVector, *, algebra: VertexAlgebra) -> FockVector:
    kind = action.kind
    if kind is ActionKind.TORUS:
        return apply_torus(action.torus, v)
    if kind is ActionKind.ROOT_EXP:
        return apply_root_exp(action.root_element, v, algebra=algebra)
    if kind is ActionKind.COVER:
        return apply_cover(action.cover, v)
    if kind is ActionKind.SECTOR_FLIP:
        return apply_sector_flip(action.cover, action.sector, v)
    if kind is ActionKind.COMPOSITE:
        for part in reversed(action.parts):
            v = apply_action(part, v, algebra=algebra)
        return v
    raise ValueError(f"Unsupported action kind: {kind}")


def identity_matrix(size: int) -> np.ndarray:
    matrix = np.full((size, size), Fraction(0), dtype=object)
    for index in range(size):
        matrix[index, index] = Fraction(1)
    return matrix


def matrix_on_truncation(
    action: AutAction,
    truncation: int,
    *,
    algebra: VertexAlgebra,
    basis: list[FockState] | None = None,
) -> np.ndarray:
    """Columns are the images of the basis states of weight <= truncation."""
    if truncation < 1:
        raise ValueError(f"Truncation weight must be at least 1, got {truncation}")
    states = basis if basis is not None else truncation_basis(algebra.lattice, truncation)
    positions = {state: index for index, state in enumerate(states)}
    matrix = np.full((len(states), len(states)), Fraction(0), dtype=object)
    for column, state in enumerate(states):
        image = apply_action(action, FockVector.from_state(state), algebra=algebra)
        for target, value in image.items():
            if target not in positions:
                raise ValueError(f"{action.label} maps {state.describe()} outside the truncation: {target.describe()}")
            matrix[positions[target], column] = value
    return matrix


def generic_torus(lattice: Lattice, *, offset: int = 0) -> TorusCharacter:
    """Character with g(alpha_i) the (offset + i)-th prime, separating every lattice point."""
    values = [prime(offset + index + 1) for index in range(lattice.rank)]
    return TorusCharacter.from_values(Ring.rationals(), values)


__all__ = [
    "apply_action",
    "apply_cover",
    "apply_root_exp",
    "apply_sector_flip",
    "apply_torus",
    "generic_torus",
    "identity_matrix",
    "matrix_on_truncation",
]
