"""Vertex operators of a lattice vertex algebra and checks of its axioms."""

from vertex.conformal import conformal_vector, omega_vector, virasoro_check, virasoro_mode, zero_mode_check
from vertex.engine import VertexAlgebra, algebra_for, binomial, mode_product
from vertex.identities import (
    associativity_check,
    auxiliary_identity_checks,
    borcherds_check,
    borcherds_sides,
    commutator_check,
    creation_check,
    grading_check,
    skew_symmetry_check,
    translation_check,
)
from vertex.models import CheckSummary, ConformalData, ConformalRefusal, IdentityOutcome, ModeProductRequest
from vertex.suite import SamplingPolicy, run_check, verify_axioms, zform_closure_check

__all__ = [
    "CheckSummary",
    "ConformalData",
    "ConformalRefusal",
    "IdentityOutcome",
    "ModeProductRequest",
    "SamplingPolicy",
    "VertexAlgebra",
    "algebra_for",
    "associativity_check",
    "auxiliary_identity_checks",
    "binomial",
    "borcherds_check",
    "borcherds_sides",
    "commutator_check",
    "conformal_vector",
    "creation_check",
    "grading_check",
    "mode_product",
    "omega_vector",
    "run_check",
    "skew_symmetry_check",
    "translation_check",
    "verify_axioms",
    "virasoro_check",
    "virasoro_mode",
    "zero_mode_check",
    "zform_closure_check",
]
