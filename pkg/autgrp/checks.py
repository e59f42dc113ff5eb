"""Homomorphism test phi(u_n v) = phi(u)_n phi(v) for realised actions."""

from __future__ import annotations

import logging
from fractions import Fraction

import numpy as np

from autgrp.actions import apply_action
from autgrp.models import AutAction, AutomorphismVerdict
from coefficients import Ring
from cover import lift_orthogonal, uncorrected_lift
from fock import FockVector, integral_membership, lattice_points, lattice_vector_state, truncation_basis, zform_spanning_set
from lattices import IntegerMatrixGroup, orthogonal_group, roots
from vertex import CheckSummary, IdentityOutcome, SamplingPolicy, VertexAlgebra, run_check
from vertex.suite import ProductInstances

logger = logging.getLogger(__name__)


def is_vertex_automorphism(
    action: AutAction,
    *,
    algebra: VertexAlgebra,
    max_weight: int = 2,
    policy: SamplingPolicy | None = None,
) -> AutomorphismVerdict:
    """phi(1) = 1, weights preserved on the basis, and the homomorphism property on (u, n, v)."""
    resolved = policy if policy is not None else SamplingPolicy.from_env()
    lattice = algebra.lattice
    one = algebra.vacuum()
    image_of_one = apply_action(action, one, algebra=algebra)
    if image_of_one != one:
        return AutomorphismVerdict(action.label, False, 1, f"phi(1) = {image_of_one.describe()}")
    basis = [FockVector.from_state(state) for state in truncation_basis(lattice, max_weight)]
    images = {}
    for vector in basis:
        image = apply_action(action, vector, algebra=algebra)
        if image.weights(lattice) != vector.weights(lattice):
            return AutomorphismVerdict(
                action.label, False, 1, f"weight not preserved: {vector.describe()} -> {image.describe()}"
            )
        images[vector] = image
    instances, exhaustive = resolved.select(
        ProductInstances(basis, range(-2, 2 * max_weight), basis),
        stream=7,
    )
    checked = 0
    for u, n, v in instances:
        checked += 1
        lhs = apply_action(action, algebra.mode(u, n, v), algebra=algebra)
        rhs = algebra.mode(images[u], n, images[v])
        if lhs != rhs:
            counterexample = f"u={u.describe()} n={n} v={v.describe()}: phi(u_n v) - phi(u)_n phi(v) = {(lhs - rhs).describe()}"
            logger.info("%s is not a vertex algebra automorphism: %s", action.label, counterexample)
            return AutomorphismVerdict(action.label, False, checked, counterexample)
    logger.debug("%s passed %s homomorphism instances (exhaustive=%s)", action.label, checked, exhaustive)
    return AutomorphismVerdict(action.label, True, checked)


def uncorrected_cover_action(algebra: VertexAlgebra, *, orthogonal: IntegerMatrixGroup | None = None) -> AutAction:
    """The lift of the first h in O(L) with delta(alpha_i, alpha_j) = -1 for some i != j, with eta left uncorrected.

    Its eta differs in sign from every genuine lift on the sectors where the correction is -1.
    When delta is trivial for all of O(L), every uncorrected lift is genuine and the identity
    lift with the e_(alpha_1) sector negated is returned instead.
    """
    lattice = algebra.lattice
    rationals = Ring.rationals()
    group = orthogonal if orthogonal is not None else orthogonal_group(lattice)
    ones = [1] * lattice.rank
    for matrix in group:
        candidate = uncorrected_lift(rationals, algebra.cocycle, matrix, ones)
        if any(
            candidate.correction(lattice.basis_vector(i), lattice.basis_vector(j)) == -1
            for i in range(lattice.rank)
            for j in range(lattice.rank)
            if i != j
        ):
            return AutAction.from_cover(candidate, label=f"uncorrected_lift(h={matrix.tolist()})")
    logger.debug("delta is trivial on O(%s); negating one sector instead", lattice.name)
    identity_lift = lift_orthogonal(rationals, algebra.cocycle, np.eye(lattice.rank, dtype=np.int64), ones)
    return AutAction.sector_flip(identity_lift, lattice.basis_vector(0))


DIVIDED_POWERS = "divided powers x_0^n / n! preserve the Z-form"
DIVIDED_POWERS_ANCHOR = "Root group exponentials exp(r x_0) preserve the integral form"


def divided_power_check(
    algebra: VertexAlgebra,
    *,
    max_weight: int = 3,
    max_power: int = 3,
    policy: SamplingPolicy | None = None,
) -> CheckSummary:
    """(iota(e_a))_0^n v / n! lies in the Z-form for v among the spanning composites."""
    resolved = policy if policy is not None else SamplingPolicy.from_env()
    lattice = algebra.lattice
    spanning = [
        (vector, weight)
        for point in lattice_points(lattice, max_weight)
        for weight in range(lattice.norm(point) // 2, max_weight + 1)
        for vector in zform_spanning_set(lattice, point, weight)
    ]
    instances = [(root, vector, weight) for root in roots(lattice) for vector, weight in spanning]

    def evaluate(case: tuple[tuple[int, ...], FockVector, int]) -> IdentityOutcome:
        root, vector, weight = case
        generator = lattice_vector_state(lattice, root)
        term = vector
        for power in range(1, max_power + 1):
            term = algebra.mode(generator, 0, term).scale(Fraction(1, power))
            if not term:
                break
            (point,) = term.lattice_degrees()
            if not integral_membership(lattice, term, point, weight):
                return IdentityOutcome(DIVIDED_POWERS, DIVIDED_POWERS_ANCHOR, False, term, f"a={root} n={power} v={vector.describe()}")
        return IdentityOutcome(DIVIDED_POWERS, DIVIDED_POWERS_ANCHOR, True, FockVector.zero(), f"a={root} v={vector.describe()}")

    return run_check(DIVIDED_POWERS, instances, evaluate, resolved, stream=9, anchor=DIVIDED_POWERS_ANCHOR)


__all__ = [
    "DIVIDED_POWERS",
    "DIVIDED_POWERS_ANCHOR",
    "divided_power_check",
    "is_vertex_automorphism",
    "uncorrected_cover_action",
]
