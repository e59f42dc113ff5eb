"""Automorphisms of the lattice vertex algebra: torus, root groups, cover lifts and the Tits group."""

from autgrp.actions import (
    apply_action,
    apply_cover,
    apply_root_exp,
    apply_sector_flip,
    apply_torus,
    generic_torus,
    identity_matrix,
    matrix_on_truncation,
)
from autgrp.checks import DIVIDED_POWERS, divided_power_check, is_vertex_automorphism, uncorrected_cover_action
from autgrp.models import (
    ActionKind,
    AutAction,
    AutomorphismVerdict,
    RootGroupElement,
    TheoremReport,
    TorusCharacter,
    TruncatedMatrixGroup,
    fraction_key,
)
from autgrp.theorem import ANCHORS, main_theorem_orders, main_theorem_report
from autgrp.tits import dual_root_scalar, sign_character, tits_element, tits_group, two_torsion_characters

__all__ = [
    "ANCHORS",
    "DIVIDED_POWERS",
    "ActionKind",
    "AutAction",
    "AutomorphismVerdict",
    "RootGroupElement",
    "TheoremReport",
    "TorusCharacter",
    "TruncatedMatrixGroup",
    "apply_action",
    "apply_cover",
    "apply_root_exp",
    "apply_sector_flip",
    "apply_torus",
    "divided_power_check",
    "dual_root_scalar",
    "fraction_key",
    "generic_torus",
    "identity_matrix",
    "is_vertex_automorphism",
    "main_theorem_orders",
    "main_theorem_report",
    "matrix_on_truncation",
    "sign_character",
    "tits_element",
    "tits_group",
    "two_torsion_characters",
    "uncorrected_cover_action",
]
