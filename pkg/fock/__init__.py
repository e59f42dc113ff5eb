"""Graded Fock space of a lattice, Heisenberg operators and the integral form."""

from fock.heisenberg import apply_e_plus, apply_heisenberg, apply_mode, apply_s, exponential_terms, s_op
from fock.models import FockState, FockVector, GradedPieceBasis
from fock.spaces import (
    colored_partition_counts,
    graded_dimension,
    graded_piece_basis,
    heisenberg_state,
    lattice_points,
    lattice_vector_state,
    specialize_vector,
    theta_counts,
    truncation_basis,
    vacuum,
)
from fock.zform import ZFormPiece, integral_membership, zform_piece, zform_spanning_set

__all__ = [
    "FockState",
    "FockVector",
    "GradedPieceBasis",
    "ZFormPiece",
    "apply_e_plus",
    "apply_heisenberg",
    "apply_mode",
    "apply_s",
    "colored_partition_counts",
    "exponential_terms",
    "graded_dimension",
    "graded_piece_basis",
    "heisenberg_state",
    "integral_membership",
    "lattice_points",
    "lattice_vector_state",
    "s_op",
    "specialize_vector",
    "theta_counts",
    "truncation_basis",
    "vacuum",
    "zform_piece",
    "zform_spanning_set",
]
