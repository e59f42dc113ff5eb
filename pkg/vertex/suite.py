"""Exhaustive-or-sampled runs of the axiom checks over a truncation basis."""

from __future__ import annotations

import itertools
import logging
import os
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, replace
from typing import TypeVar

import numpy as np
from tqdm import tqdm

from coefficients import Ring, RingKind, SpecializationError
from fock import (
    FockVector,
    integral_membership,
    lattice_points,
    specialize_vector,
    truncation_basis,
    zform_spanning_set,
)
from lattices.groups import progress_enabled
from vertex.engine import VertexAlgebra
from vertex.identities import (
    ANCHORS,
    ASSOCIATIVITY,
    BORCHERDS,
    COMMUTATOR,
    CREATION,
    GRADING,
    SKEW_SYMMETRY,
    TRANSLATION,
    associativity_check,
    borcherds_check,
    commutator_check,
    creation_check,
    grading_check,
    skew_symmetry_check,
    translation_check,
)
from vertex.models import CheckSummary, IdentityOutcome

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_LIMIT = 500_000
DEFAULT_SAMPLE_SIZE = 500

Instance = TypeVar("Instance")


class ProductInstances(Sequence):
    """Cartesian product of factor sequences indexed in mixed radix, never materialised."""

    def __init__(self, *factors: Sequence) -> None:
        self._factors = [list(factor) for factor in factors]

    def __len__(self) -> int:
        total = 1
        for factor in self._factors:
            total *= len(factor)
        return total

    def __getitem__(self, index: int) -> tuple:
        if not 0 <= index < len(self):
            raise IndexError(index)
        picked = []
        for factor in reversed(self._factors):
            index, position = divmod(index, len(factor))
            picked.append(factor[position])
        return tuple(reversed(picked))

    def __iter__(self) -> Iterator[tuple]:
        return itertools.product(*self._factors)


@dataclass(frozen=True, slots=True)
class SamplingPolicy:
    """samples == 0 means exhaustive up to exhaustive_limit instances, otherwise that many seeded draws."""

    samples: int = 0
    seed: int = 0
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT
    fallback_samples: int = DEFAULT_SAMPLE_SIZE

    @classmethod
    def from_env(cls, *, samples: int = 0, seed: int | None = None, env: dict[str, str] | None = None) -> SamplingPolicy:
        resolved_env = env if env is not None else os.environ
        return cls(
            samples=samples,
            seed=seed if seed is not None else int(resolved_env.get("LATTICE_VOA_SEED", "0")),
            exhaustive_limit=int(resolved_env.get("LATTICE_VOA_EXHAUSTIVE_LIMIT", str(DEFAULT_EXHAUSTIVE_LIMIT))),
        )

    def select(self, instances: Sequence[Instance], *, stream: int = 0) -> tuple[Sequence[Instance], bool]:
        """The instances to run and whether the run is exhaustive."""
        total = len(instances)
        if self.samples == 0 and total <= self.exhaustive_limit:
            return instances, True
        size = self.samples if self.samples > 0 else self.fallback_samples
        if size >= total:
            return instances, True
        rng = np.random.default_rng([self.seed, stream])
        chosen = np.sort(rng.choice(total, size=size, replace=False))
        return [instances[int(index)] for index in chosen], False


def run_check(
    name: str,
    instances: Sequence[Instance],
    evaluate: Callable[[Instance], IdentityOutcome],
    policy: SamplingPolicy,
    *,
    stream: int = 0,
    anchor: str | None = None,
) -> CheckSummary:
    selected, exhaustive = policy.select(instances, stream=stream)
    summary = CheckSummary(name=name, anchor=anchor or name, details={"population": len(instances), "exhaustive": exhaustive})
    for instance in tqdm(selected, desc=name, unit="case", disable=not progress_enabled()):
        summary.record(evaluate(instance))
    logger.info("%s: %s of %s instances, %s failures", name, summary.instances, len(instances), summary.failures)
    if summary.counterexample:
        logger.warning("First counterexample for %s: %s", name, summary.counterexample)
    return summary


def _in_ring(evaluate: Callable[[Instance], IdentityOutcome], ring: Ring) -> Callable[[Instance], IdentityOutcome]:
    """An outcome over Q re-judged in `ring`: the residual only has to vanish after specialization."""

    def evaluate_in_ring(case: Instance) -> IdentityOutcome:
        outcome = evaluate(case)
        if outcome.holds or specialize_vector(outcome.residual, ring):
            return outcome
        return replace(outcome, holds=True)

    return evaluate_in_ring


def _specializing_grading(algebra: VertexAlgebra, ring: Ring) -> Callable[[tuple[FockVector, FockVector, int]], IdentityOutcome]:
    def evaluate(case: tuple[FockVector, FockVector, int]) -> IdentityOutcome:
        u, v, n = case
        product = algebra.mode(u, n, v)
        try:
            specialize_vector(product, ring)
        except SpecializationError as error:
            raise SpecializationError(
                f"{u.describe()}_({n}) {v.describe()} = {product.describe()} has no image in {ring}: {error}"
            ) from error
        return grading_check(algebra, u, v, n)

    return evaluate


def verify_axioms(
    algebra: VertexAlgebra,
    *,
    max_weight: int = 3,
    max_mode: int = 2,
    policy: SamplingPolicy | None = None,
    ring: Ring | None = None,
) -> list[CheckSummary]:
    """Creation, grading, Borcherds and its equivalent forms on basis vectors of weight <= max_weight.

    Over a ring other than Q every basis product u_n v of the grading check has to specialize into the
    ring, otherwise SpecializationError is raised, and residuals are compared after specialization.
    """
    resolved = policy if policy is not None else SamplingPolicy.from_env()
    target = ring if ring is not None else Ring.rationals()
    basis = [FockVector.from_state(state) for state in truncation_basis(algebra.lattice, max_weight)]
    modes = range(-max_mode, max_mode + 1)

    def judged(evaluate: Callable[[Instance], IdentityOutcome]) -> Callable[[Instance], IdentityOutcome]:
        return evaluate if target.kind is RingKind.RATIONALS else _in_ring(evaluate, target)

    grading = _specializing_grading(algebra, target)
    return [
        run_check(CREATION, basis, judged(lambda u: creation_check(algebra, u)), resolved, stream=0, anchor=ANCHORS[CREATION]),
        run_check(GRADING, ProductInstances(basis, basis, modes), grading, resolved, stream=1, anchor=ANCHORS[GRADING]),
        run_check(
            BORCHERDS,
            ProductInstances(basis, basis, basis, modes, modes, modes),
            judged(lambda case: borcherds_check(algebra, *case)),
            resolved,
            stream=2,
            anchor=ANCHORS[BORCHERDS],
        ),
        run_check(
            COMMUTATOR,
            ProductInstances(basis, basis, basis, modes, modes),
            judged(lambda case: commutator_check(algebra, *case)),
            resolved,
            stream=3,
            anchor=ANCHORS[COMMUTATOR],
        ),
        run_check(
            SKEW_SYMMETRY,
            ProductInstances(basis, basis, modes),
            judged(lambda case: skew_symmetry_check(algebra, *case)),
            resolved,
            stream=4,
            anchor=ANCHORS[SKEW_SYMMETRY],
        ),
        run_check(
            ASSOCIATIVITY,
            ProductInstances(basis, basis, basis, modes, modes),
            judged(lambda case: associativity_check(algebra, *case)),
            resolved,
            stream=5,
            anchor=ANCHORS[ASSOCIATIVITY],
        ),
        run_check(
            TRANSLATION,
            ProductInstances(basis, basis, modes, range(1, max_mode + 1)),
            judged(lambda case: translation_check(algebra, *case)),
            resolved,
            stream=6,
            anchor=ANCHORS[TRANSLATION],
        ),
    ]


ZFORM_CLOSURE = "Z-form closed under u_n v"
ZFORM_CLOSURE_ANCHOR = "Integral form: V_L,Z is closed under all mode products"


def zform_closure_check(algebra: VertexAlgebra, *, max_weight: int = 3, policy: SamplingPolicy | None = None) -> CheckSummary:
    """u_n v stays in the Z-form for u, v among the spanning composites, whenever wt(u_n v) <= max_weight."""
    resolved = policy if policy is not None else SamplingPolicy.from_env()
    lattice = algebra.lattice
    generators = []
    for point in lattice_points(lattice, max_weight):
        for weight in range(lattice.norm(point) // 2, max_weight + 1):
            generators.extend((vector, point, weight) for vector in zform_spanning_set(lattice, point, weight))
    instances = [
        (u, v, wt_u + wt_v - 1 - target)
        for (u, _, wt_u) in generators
        for (v, _, wt_v) in generators
        for target in range(max_weight + 1)
    ]

    def evaluate(case: tuple[FockVector, FockVector, int]) -> IdentityOutcome:
        u, v, n = case
        product = algebra.mode(u, n, v)
        holds = True
        if product:
            (point,) = product.lattice_degrees()
            (weight,) = product.weights(lattice)
            holds = integral_membership(lattice, product, point, weight)
        return IdentityOutcome(ZFORM_CLOSURE, ZFORM_CLOSURE_ANCHOR, holds, product, f"[{u.describe()}, {v.describe()}] n={n}")

    summary = run_check(ZFORM_CLOSURE, instances, evaluate, resolved, stream=8, anchor=ZFORM_CLOSURE_ANCHOR)
    summary.details["note"] = "a failure means not proven integral against the truncated spanning set"
    return summary


__all__ = [
    "DEFAULT_EXHAUSTIVE_LIMIT",
    "ZFORM_CLOSURE",
    "ZFORM_CLOSURE_ANCHOR",
    "ProductInstances",
    "SamplingPolicy",
    "run_check",
    "verify_axioms",
    "zform_closure_check",
]
