"""Finite-group verification of the decomposition of Aut V_L on truncations."""

from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np

from autgrp.actions import generic_torus, identity_matrix, matrix_on_truncation
from autgrp.checks import is_vertex_automorphism, uncorrected_cover_action
from autgrp.models import AutAction, RootGroupElement, TheoremReport, fraction_key
from autgrp.tits import sign_character, tits_element, tits_group
from coefficients import Ring, RingKind, mu2_elements
from cover import CoverGroup, build_cocycle, cover_group, inverse
from fock import FockState, FockVector, truncation_basis
from lattices import (
    IntegerMatrixGroup,
    Lattice,
    cartan_type,
    determinant,
    orthogonal_group,
    outer_classes,
    reflection,
    roots,
    weyl_group,
)
from lattices.roots import format_cartan_type, positive_roots
from vertex import CheckSummary, IdentityOutcome, SamplingPolicy, VertexAlgebra

logger = logging.getLogger(__name__)

EXACTNESS = "1 -> Hom(L, mu2) -> O(L~) -> O(L) -> 1 is exact"
FAITHFUL = "O(L~) acts faithfully on the truncation"
NORMALIZES = "O(L~) normalizes the torus: phi g phi^-1 = g o h^-1"
TITS_SQUARE = "Tits relation n_a^2 = a^vee(-1)"
TITS_ORDER = "n_a has order dividing 4"
TITS_CONJUGATION = "n_a g n_a^-1 = g o s_a"
TITS_SECTORS = "n_a maps pi_lambda to pi_(s_a lambda)"
ONE_PARAMETER = "exp(r x_0) exp(s x_0) = exp((r+s) x_0)"
TITS_ORDER_FORMULA = "|Tits group| = 2^rank |W|"
INTERSECTION = "Tits group = preimage of W in O(L~)"
OUTER = "O(L~) / Tits group has order |O(L)| / |W|"
CENTRALIZER = "cover elements centralizing the torus are kernel elements"
AUTOMORPHISM = "phi(u_n v) = phi(u)_n phi(v)"
NEGATIVE_CONTROL = "cover lift without the eps correction is rejected"
KERNEL_COLLAPSE = "kernel of O(L~)(F2) -> O(L) is trivial"
STABILITY = "group orders stable at truncation N+1"

_COVER = "Extension 1 -> Hom(L, mu2) -> O(L~) -> O(L) -> 1 of the cover"
_TITS = "Tits group: n_a^2 = a^vee(-1) and n_a acts on the torus as s_a"
_DECOMPOSITION = "Decomposition Aut V_L = G_L . O(L~) with G_L cap O(L~) = Tits group"

ANCHORS = {
    EXACTNESS: _COVER,
    FAITHFUL: "O(L~) acts on V_L by e_a -> eta(a) e_(h a)",
    NORMALIZES: "O(L~) normalizes the torus of G_L",
    TITS_SQUARE: _TITS,
    TITS_ORDER: _TITS,
    TITS_CONJUGATION: _TITS,
    TITS_SECTORS: _TITS,
    ONE_PARAMETER: "Root groups x_a(r) = exp(r (e_a)_0) are one-parameter subgroups",
    TITS_ORDER_FORMULA: "Tits group is an extension of W by Hom(L, mu2)",
    INTERSECTION: _DECOMPOSITION,
    OUTER: _DECOMPOSITION,
    CENTRALIZER: "Centralizer of the torus in O(L~) is Hom(L, mu2)",
    AUTOMORPHISM: "Torus, root groups and O(L~) act by vertex algebra automorphisms",
    NEGATIVE_CONTROL: "A lift of h in O(L) needs eta(a+b) = eta(a) eta(b) eps(ha, hb) eps(a, b)",
    KERNEL_COLLAPSE: _COVER,
    STABILITY: _DECOMPOSITION,
}


def _single(name: str, holds: bool, instance: str, *, instances: int = 1) -> CheckSummary:
    summary = CheckSummary(name=name, anchor=ANCHORS[name])
    summary.instances = instances
    if not holds:
        summary.failures = 1
        summary.counterexample = instance
    return summary


def _cover_matrices(algebra: VertexAlgebra, group: CoverGroup, truncation: int, basis: list[FockState]) -> list[np.ndarray]:
    return [
        matrix_on_truncation(AutAction.from_cover(element), truncation, algebra=algebra, basis=basis)
        for element in group.elements
    ]


def main_theorem_report(
    algebra: VertexAlgebra,
    *,
    truncation: int = 1,
    policy: SamplingPolicy | None = None,
    cap: int | None = None,
    stability: bool = True,
    automorphism_weight: int = 2,
    ring: Ring | None = None,
) -> TheoremReport:
    """Group orders, relation checks and the homomorphism test for one lattice.

    The cover enters through mu2(R) only, so `ring` has to satisfy mu2(R) = {1, -1} with 1 != -1;
    the matrices themselves are exact over Q.
    """
    lattice = algebra.lattice
    rank = lattice.rank
    target = ring if ring is not None else Ring.rationals()
    signs = mu2_elements(target)
    if len(signs) != 2:
        listed = ", ".join(str(value) for value in signs)
        raise ValueError(f"aut-report needs mu2(R) = {{1, -1}} with 1 != -1, got {{{listed}}} in {target}")
    if automorphism_weight < 1:
        raise ValueError(f"automorphism_weight must be at least 1, got {automorphism_weight}")
    resolved = policy if policy is not None else SamplingPolicy.from_env()
    report = TheoremReport()
    rationals = Ring.rationals()
    cocycle = build_cocycle(lattice)

    weyl = weyl_group(lattice, cap=cap)
    orthogonal = orthogonal_group(lattice, cap=cap)
    covers = cover_group(rationals, lattice, eps=cocycle, orthogonal=orthogonal, cap=cap)
    ring_covers = covers
    if target.kind is not RingKind.RATIONALS:
        ring_covers = cover_group(target, lattice, eps=cocycle, orthogonal=orthogonal, cap=cap)
    report.data.update(
        {
            "lattice": lattice.name,
            "ring": str(target),
            "rank": rank,
            "determinant": determinant(lattice),
            "cartan_type": format_cartan_type(cartan_type(lattice)),
            "roots": len(roots(lattice)),
            "weyl_order": weyl.order,
            "orthogonal_order": orthogonal.order,
            "outer_order": len(outer_classes(weyl, orthogonal)),
            "cover_order": ring_covers.order,
            "cover_kernel_order": len(ring_covers.kernel),
            "truncation": truncation,
            "automorphism_weight": automorphism_weight,
        }
    )
    report.checks.append(
        _single(
            EXACTNESS,
            ring_covers.is_exact and ring_covers.order == covers.order == 2**rank * orthogonal.order,
            f"order {ring_covers.order} over {target}, {covers.order} over Q, kernel {len(ring_covers.kernel)}, image {ring_covers.image_order}",
        )
    )

    basis = truncation_basis(lattice, truncation)
    cover_matrices = _cover_matrices(algebra, covers, truncation, basis)
    cover_keys = {fraction_key(matrix) for matrix in cover_matrices}
    report.data["cover_matrix_order"] = len(cover_keys)
    report.checks.append(
        _single(FAITHFUL, len(cover_keys) == covers.order, f"{len(cover_keys)} distinct matrices for {covers.order} elements")
    )

    report.checks.append(_normalization_check(algebra, covers, cover_matrices, truncation, basis))
    report.checks.extend(_tits_relation_checks(algebra, truncation, basis))

    tits = tits_group(algebra, truncation, cap=cap)
    report.data["tits_order"] = tits.order
    report.checks.append(
        _single(TITS_ORDER_FORMULA, tits.order == 2**rank * weyl.order, f"|Tits| = {tits.order}, 2^rank |W| = {2**rank * weyl.order}")
    )

    preimage = {
        fraction_key(matrix)
        for element, matrix in zip(covers.elements, cover_matrices)
        if weyl.contains(element.matrix)
    }
    missing = tits.keys - preimage
    extra = preimage - tits.keys
    report.checks.append(
        _single(INTERSECTION, not missing and not extra, f"{len(missing)} Tits matrices outside the preimage, {len(extra)} preimage matrices outside the Tits group")
    )

    quotient = Fraction(len(cover_keys), tits.order)
    report.data["quotient_order"] = str(quotient)
    report.checks.append(
        _single(
            OUTER,
            tits.keys <= cover_keys and quotient == Fraction(orthogonal.order, weyl.order) == report.data["outer_order"],
            f"|O(L~)| / |Tits| = {quotient}, |O(L)| / |W| = {Fraction(orthogonal.order, weyl.order)}",
        )
    )

    report.checks.append(_centralizer_check(algebra, covers, cover_matrices, truncation, basis))
    report.checks.extend(_automorphism_checks(algebra, covers, orthogonal, automorphism_weight, resolved))
    report.checks.append(_kernel_collapse_check(lattice, orthogonal, report, cap=cap))

    if stability:
        larger = main_theorem_orders(algebra, truncation=truncation + 1, cap=cap)
        current = {"cover_matrix_order": len(cover_keys), "tits_order": tits.order}
        report.data["orders_at_next_truncation"] = larger
        report.checks.append(_single(STABILITY, larger == current, f"N={truncation}: {current}, N={truncation + 1}: {larger}"))
    return report


def main_theorem_orders(algebra: VertexAlgebra, *, truncation: int, cap: int | None = None) -> dict[str, int]:
    lattice = algebra.lattice
    covers = cover_group(Ring.rationals(), lattice, cap=cap)
    basis = truncation_basis(lattice, truncation)
    cover_keys = {fraction_key(matrix) for matrix in _cover_matrices(algebra, covers, truncation, basis)}
    return {"cover_matrix_order": len(cover_keys), "tits_order": tits_group(algebra, truncation, cap=cap).order}


def _normalization_check(
    algebra: VertexAlgebra,
    covers: CoverGroup,
    cover_matrices: list[np.ndarray],
    truncation: int,
    basis: list[FockState],
) -> CheckSummary:
    summary = CheckSummary(name=NORMALIZES, anchor=ANCHORS[NORMALIZES])
    rationals = Ring.rationals()
    torus = generic_torus(algebra.lattice)
    torus_matrix = matrix_on_truncation(AutAction.from_torus(torus), truncation, algebra=algebra, basis=basis)
    for element, matrix in zip(covers.elements, cover_matrices):
        back = inverse(rationals, element)
        back_matrix = matrix_on_truncation(AutAction.from_cover(back), truncation, algebra=algebra, basis=basis)
        conjugated = matrix.dot(torus_matrix).dot(back_matrix)
        expected = matrix_on_truncation(
            AutAction.from_torus(torus.precompose(back.h)), truncation, algebra=algebra, basis=basis
        )
        summary.record(_matrix_outcome(NORMALIZES, conjugated, expected, f"h={list(map(list, element.h))}"))
    return summary


def _tits_relation_checks(algebra: VertexAlgebra, truncation: int, basis: list[FockState]) -> list[CheckSummary]:
    lattice = algebra.lattice
    names = (TITS_SQUARE, TITS_ORDER, TITS_CONJUGATION, TITS_SECTORS, ONE_PARAMETER)
    summaries = {name: CheckSummary(name=name, anchor=ANCHORS[name]) for name in names}
    identity = identity_matrix(len(basis))
    torus = generic_torus(lattice)
    torus_matrix = matrix_on_truncation(AutAction.from_torus(torus), truncation, algebra=algebra, basis=basis)
    for root in roots(lattice):
        label = f"a={root}"
        n = matrix_on_truncation(tits_element(algebra, root), truncation, algebra=algebra, basis=basis)
        square = n.dot(n)
        signs = matrix_on_truncation(AutAction.from_torus(sign_character(algebra, root)), truncation, algebra=algebra, basis=basis)
        summaries[TITS_SQUARE].record(_matrix_outcome(TITS_SQUARE, square, signs, label))
        summaries[TITS_ORDER].record(_matrix_outcome(TITS_ORDER, square.dot(square), identity, label))
        s_alpha = tuple(tuple(int(entry) for entry in row) for row in reflection(lattice, root))
        expected = matrix_on_truncation(AutAction.from_torus(torus.precompose(s_alpha)), truncation, algebra=algebra, basis=basis)
        conjugated = n.dot(torus_matrix).dot(square.dot(n))
        summaries[TITS_CONJUGATION].record(_matrix_outcome(TITS_CONJUGATION, conjugated, expected, label))
        summaries[TITS_SECTORS].record(_sector_outcome(algebra, root, s_alpha, basis, n))
    for root in positive_roots(lattice):
        for r, s in ((1, -1), (1, 2), (2, -1)):
            product = matrix_on_truncation(
                AutAction.composite(
                    AutAction.from_root_exp(RootGroupElement(root, r)),
                    AutAction.from_root_exp(RootGroupElement(root, s)),
                ),
                truncation,
                algebra=algebra,
                basis=basis,
            )
            combined = matrix_on_truncation(AutAction.from_root_exp(RootGroupElement(root, r + s)), truncation, algebra=algebra, basis=basis)
            summaries[ONE_PARAMETER].record(_matrix_outcome(ONE_PARAMETER, product, combined, f"a={root} r={r} s={s}"))
    return list(summaries.values())


def _sector_outcome(
    algebra: VertexAlgebra,
    root: tuple[int, ...],
    s_alpha: tuple[tuple[int, ...], ...],
    basis: list[FockState],
    n: np.ndarray,
) -> IdentityOutcome:
    lattice = algebra.lattice
    for column, state in enumerate(basis):
        point = state.lattice_point
        target = tuple(sum(s_alpha[i][j] * point[j] for j in range(lattice.rank)) for i in range(lattice.rank))
        for row, image in enumerate(basis):
            if n[row, column] and image.lattice_point != target:
                instance = f"a={root}: {state.describe()} reaches {image.describe()}"
                return IdentityOutcome(TITS_SECTORS, ANCHORS[TITS_SECTORS], False, FockVector.zero(), instance)
    return IdentityOutcome(TITS_SECTORS, ANCHORS[TITS_SECTORS], True, FockVector.zero(), f"a={root}")


def _centralizer_check(
    algebra: VertexAlgebra,
    covers: CoverGroup,
    cover_matrices: list[np.ndarray],
    truncation: int,
    basis: list[FockState],
) -> CheckSummary:
    tori = [
        matrix_on_truncation(AutAction.from_torus(generic_torus(algebra.lattice, offset=offset)), truncation, algebra=algebra, basis=basis)
        for offset in (0, algebra.lattice.rank)
    ]
    centralizing = [
        element
        for element, matrix in zip(covers.elements, cover_matrices)
        if all(fraction_key(matrix.dot(torus)) == fraction_key(torus.dot(matrix)) for torus in tori)
    ]
    stray = [element for element in centralizing if not element.is_kernel_element]
    return _single(
        CENTRALIZER,
        not stray and len(centralizing) == len(covers.kernel),
        f"{len(centralizing)} centralizing elements, {len(stray)} outside the kernel",
        instances=covers.order,
    )


def _automorphism_checks(
    algebra: VertexAlgebra,
    covers: CoverGroup,
    orthogonal: IntegerMatrixGroup,
    max_weight: int,
    policy: SamplingPolicy,
) -> list[CheckSummary]:
    lattice = algebra.lattice
    actions = [AutAction.from_torus(generic_torus(lattice))]
    actions.extend(
        AutAction.from_root_exp(RootGroupElement(root, r)) for root in roots(lattice) for r in (1, -1, 2)
    )
    actions.extend(AutAction.from_cover(element) for element in covers.elements)
    actions.extend(tits_element(algebra, root) for root in positive_roots(lattice))
    summary = CheckSummary(name=AUTOMORPHISM, anchor=ANCHORS[AUTOMORPHISM])
    for action in actions:
        verdict = is_vertex_automorphism(action, algebra=algebra, max_weight=max_weight, policy=policy)
        summary.instances += verdict.instances
        if not verdict.holds:
            summary.failures += 1
            summary.counterexample = summary.counterexample or f"{action.label}: {verdict.counterexample}"
    summary.details["actions"] = len(actions)
    summary.details["max_weight"] = max_weight

    control = uncorrected_cover_action(algebra, orthogonal=orthogonal)
    verdict = is_vertex_automorphism(control, algebra=algebra, max_weight=max_weight, policy=policy)
    control_summary = _single(NEGATIVE_CONTROL, not verdict.holds, f"{control.label} passed {verdict.instances} instances", instances=verdict.instances)
    control_summary.details["control"] = control.label
    control_summary.details["witness"] = verdict.counterexample
    return [summary, control_summary]


def _kernel_collapse_check(
    lattice: Lattice,
    orthogonal: IntegerMatrixGroup,
    report: TheoremReport,
    *,
    cap: int | None,
) -> CheckSummary:
    field_two = cover_group(Ring.prime_field(2), lattice, orthogonal=orthogonal, cap=cap)
    kernel_two = len(field_two.kernel)
    report.data["cover_kernel_order_f2"] = kernel_two
    return _single(
        KERNEL_COLLAPSE,
        kernel_two == 1 and report.data["cover_kernel_order"] == 2**lattice.rank,
        f"kernel over F2 = {kernel_two}, over {report.data['ring']} = {report.data['cover_kernel_order']}",
    )


def _matrix_outcome(name: str, lhs: np.ndarray, rhs: np.ndarray, instance: str) -> IdentityOutcome:
    holds = fraction_key(lhs) == fraction_key(rhs)
    return IdentityOutcome(name=name, anchor=ANCHORS[name], holds=holds, residual=FockVector.zero(), instance=instance)


__all__ = ["ANCHORS", "main_theorem_orders", "main_theorem_report"]
