"""Dispatches a RunConfig to the module suites and assembles the report."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable

import numpy as np

from autgrp import divided_power_check, main_theorem_report
from cli.config import RunConfig
from cli.report import CheckRecord, Report
from cover import build_cocycle, commutator_sign, cover_group
from fock import graded_dimension, graded_piece_basis, lattice_points, zform_piece
from lattices import (
    Lattice,
    ResourceCapExceeded,
    cartan_type,
    determinant,
    load_lattice,
    orthogonal_group,
    orthogonal_group_bruteforce,
    outer_classes,
    root_datum,
    roots,
    weyl_group,
)
from lattices.roots import format_cartan_type
from vertex import (
    ConformalRefusal,
    SamplingPolicy,
    VertexAlgebra,
    conformal_vector,
    verify_axioms,
    virasoro_check,
    zero_mode_check,
    zform_closure_check,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3

ROOT_DATUM = "root datum (L, Phi, L^vee, Phi^vee)"
ORTHOGONAL_CROSS_CHECK = "O(L) closure agrees with coordinate-box enumeration"
COCYCLE = "eps bimultiplicative with eps(a,b) eps(b,a) = (-1)^<a,b>"
COVER_EXACTNESS = "1 -> Hom(L, mu_2) -> O(L~) -> O(L) -> 1 exact"
GRADED_DIMENSIONS = "graded dimension equals theta series times colored partitions"
ZFORM_SATURATION = "Z-form spanning set has full rank in every graded piece"
CONFORMAL_VECTOR = "conformal vector exists iff det L is invertible"
RESOURCE_CAP = "resource cap"

ANCHORS = {
    ROOT_DATUM: "Root datum (L, Phi, L^vee, Phi^vee) of an even lattice",
    ORTHOGONAL_CROSS_CHECK: "O(L) is finite for positive definite L",
    COCYCLE: "Cocycle of the mu2 cover: eps(a, b) eps(b, a) = (-1)^<a,b>",
    COVER_EXACTNESS: "Extension 1 -> Hom(L, mu2) -> O(L~) -> O(L) -> 1 of the cover",
    GRADED_DIMENSIONS: "V_L = S(h^-) tensor R[L] as a graded space",
    ZFORM_SATURATION: "Integral form: products of s_(a,n) span V_L,Z",
    CONFORMAL_VECTOR: "Conformal vector criterion: det L invertible in R",
    RESOURCE_CAP: "Group closures stay below LATTICE_VOA_GROUP_CAP",
}

COCYCLE_SAMPLES = 200
COCYCLE_BOX = 3
COCYCLE_STREAM = 10
SATURATION_MAX_WEIGHT = 3


def _holds(name: str, holds: bool, *, instances: int = 1, counterexample: str | None = None, **details: object) -> CheckRecord:
    return CheckRecord(
        name=name,
        anchor=ANCHORS[name],
        instances=instances,
        verdict="pass" if holds else "fail",
        details=dict(details),
        counterexample=None if holds else counterexample,
    )


def _policy(config: RunConfig) -> SamplingPolicy:
    return SamplingPolicy(samples=config.samples, seed=config.seed, exhaustive_limit=config.exhaustive_limit)


def _analyze(config: RunConfig, lattice: Lattice, report: Report) -> None:
    report.data.update(
        {
            "lattice": lattice.name,
            "rank": lattice.rank,
            "gram": [list(row) for row in lattice.gram],
            "determinant": determinant(lattice),
            "roots": len(roots(lattice)),
            "cartan_type": format_cartan_type(cartan_type(lattice)),
        }
    )
    try:
        datum = root_datum(lattice)
    except RuntimeError as error:
        report.add(_holds(ROOT_DATUM, False, counterexample=str(error)))
    else:
        report.add(_holds(ROOT_DATUM, True, instances=len(datum.roots), semisimple=datum.is_semisimple))

    report.add(_cocycle_record(config, lattice))

    weyl = weyl_group(lattice, cap=config.group_cap)
    report.data["weyl_order"] = weyl.order
    orthogonal = orthogonal_group(lattice, cap=config.group_cap)
    report.data["orthogonal_order"] = orthogonal.order
    report.data["outer_order"] = len(outer_classes(weyl, orthogonal))
    if lattice.rank <= 2:
        brute = orthogonal_group_bruteforce(lattice)
        missing = sum(1 for matrix in brute if not orthogonal.contains(matrix))
        report.add(
            _holds(
                ORTHOGONAL_CROSS_CHECK,
                brute.order == orthogonal.order and missing == 0,
                instances=brute.order,
                counterexample=f"closure {orthogonal.order}, enumeration {brute.order}, {missing} missing",
            )
        )

    covers = cover_group(config.ring, lattice, orthogonal=orthogonal, cap=config.group_cap)
    report.data["cover_order"] = covers.order
    report.data["cover_kernel_order"] = len(covers.kernel)
    report.add(
        _holds(
            COVER_EXACTNESS,
            covers.is_exact and covers.order == covers.mu2_size**lattice.rank * orthogonal.order,
            instances=covers.order,
            counterexample=f"order {covers.order}, kernel {len(covers.kernel)}, image {covers.image_order}",
        )
    )


def _cocycle_record(config: RunConfig, lattice: Lattice) -> CheckRecord:
    cocycle = build_cocycle(lattice)
    rng = np.random.default_rng([config.seed, COCYCLE_STREAM])
    draws = rng.integers(-COCYCLE_BOX, COCYCLE_BOX + 1, size=(COCYCLE_SAMPLES, 3, lattice.rank))
    failures = 0
    first = None
    for a, b, c in draws.tolist():
        a, b, c = tuple(a), tuple(b), tuple(c)
        ab = tuple(x + y for x, y in zip(a, b))
        alternation = commutator_sign(cocycle, a, b) == (-1) ** (lattice.inner(a, b) % 2)
        bimultiplicative = cocycle(ab, c) == cocycle(a, c) * cocycle(b, c) and cocycle(c, ab) == cocycle(c, a) * cocycle(c, b)
        if not (alternation and bimultiplicative):
            failures += 1
            first = first or f"a={a} b={b} c={c}"
    return _holds(COCYCLE, failures == 0, instances=COCYCLE_SAMPLES, counterexample=first, failures=failures)


def _graded_dims(config: RunConfig, lattice: Lattice, report: Report) -> None:
    points = lattice_points(lattice, config.max_weight)
    oracle = []
    enumerated = []
    for weight in range(config.max_weight + 1):
        oracle.append(graded_dimension(lattice, weight))
        enumerated.append(
            sum(
                graded_piece_basis(lattice, point, weight).dimension
                for point in points
                if lattice.norm(point) // 2 <= weight
            )
        )
    report.data["lattice"] = lattice.name
    report.data["graded_dimensions"] = oracle
    mismatch = next((weight for weight, (x, y) in enumerate(zip(oracle, enumerated)) if x != y), None)
    report.add(
        _holds(
            GRADED_DIMENSIONS,
            mismatch is None,
            instances=len(oracle),
            counterexample=None if mismatch is None else f"weight {mismatch}: oracle {oracle[mismatch]}, basis {enumerated[mismatch]}",
            enumerated=enumerated,
        )
    )

    saturation_weight = min(config.max_weight, SATURATION_MAX_WEIGHT)
    pieces = [
        zform_piece(lattice, point, weight)
        for point in lattice_points(lattice, saturation_weight)
        for weight in range(lattice.norm(point) // 2, saturation_weight + 1)
    ]
    unsaturated = [piece for piece in pieces if not piece.saturated]
    report.add(
        _holds(
            ZFORM_SATURATION,
            not unsaturated,
            instances=len(pieces),
            counterexample=(
                f"({unsaturated[0].lattice_point}, {unsaturated[0].weight}): rank {unsaturated[0].rank} of {unsaturated[0].dimension}"
                if unsaturated
                else None
            ),
            max_weight=saturation_weight,
        )
    )


def _verify_axioms(config: RunConfig, lattice: Lattice, report: Report) -> None:
    algebra = VertexAlgebra(lattice)
    policy = _policy(config)
    ring = config.ring
    report.data.update({"lattice": lattice.name, "ring": str(ring)})
    summaries = verify_axioms(algebra, max_weight=config.max_weight, max_mode=config.max_mode, policy=policy, ring=ring)
    for summary in summaries:
        report.add(summary)
    report.add(zform_closure_check(algebra, max_weight=config.max_weight, policy=policy))
    report.add(divided_power_check(algebra, max_weight=config.max_weight, policy=policy))
    report.data["cached_products"] = algebra.cache_size
    report.data["cache_stats"] = algebra.cache_stats()
    algebra.clear_caches()


def _conformal(config: RunConfig, lattice: Lattice, report: Report) -> None:
    ring = config.ring
    data = conformal_vector(lattice, ring)
    report.data.update({"lattice": lattice.name, "ring": str(ring), "determinant": determinant(lattice)})
    if isinstance(data, ConformalRefusal):
        report.add(
            CheckRecord(
                name=CONFORMAL_VECTOR,
                anchor=ANCHORS[CONFORMAL_VECTOR],
                instances=1,
                verdict="refused",
                details={"reason": data.reason, "failures": list(data.failures)},
            )
        )
        return
    report.data["omega"] = data.omega.describe()
    report.data["central_charge"] = str(2 * data.half_charge_rational)
    report.data["omega_in_ring"] = data.omega_in_ring
    report.add(CheckRecord.info(CONFORMAL_VECTOR, ANCHORS[CONFORMAL_VECTOR], half_charge=str(data.half_charge)))
    algebra = VertexAlgebra(lattice)
    report.add(zero_mode_check(algebra, data.omega))
    for summary in virasoro_check(algebra, ring, max_mode=config.max_mode, max_weight=config.max_weight):
        report.add(summary)


def _aut_report(config: RunConfig, lattice: Lattice, report: Report) -> None:
    theorem = main_theorem_report(
        VertexAlgebra(lattice),
        truncation=config.truncation,
        policy=_policy(config),
        cap=config.group_cap,
        ring=config.ring,
    )
    report.data.update(theorem.data)
    for summary in theorem.checks:
        report.add(summary)


_HANDLERS: dict[str, Callable[[RunConfig, Lattice, Report], None]] = {
    "analyze": _analyze,
    "graded-dims": _graded_dims,
    "verify-axioms": _verify_axioms,
    "conformal": _conformal,
    "aut-report": _aut_report,
}


def run(config: RunConfig) -> tuple[Report, int]:
    """Runs one command; ValueError and FileNotFoundError propagate as input errors."""
    handler = _HANDLERS.get(config.command)
    if handler is None:
        raise ValueError(f"Unsupported command: {config.command}")
    lattice = load_lattice(config.lattice_source)
    logger.info("Running %s on %s (rank %s)", config.command, lattice.name, lattice.rank)
    report = Report(command=config.command, config=config.echo())
    started = time.perf_counter()
    exit_code = EXIT_OK
    try:
        handler(config, lattice, report)
    except ResourceCapExceeded as error:
        logger.error("Resource cap exceeded: %s", error)
        report.add(
            CheckRecord(
                name=RESOURCE_CAP,
                anchor=ANCHORS[RESOURCE_CAP],
                instances=0,
                verdict="refused",
                details={"reason": str(error), "group_cap": config.group_cap},
            )
        )
        exit_code = EXIT_RESOURCE_CAP
    if config.report_timing:
        report.wall_time_seconds = time.perf_counter() - started
    if exit_code == EXIT_OK and report.failed:
        exit_code = EXIT_CHECK_FAILED
    logger.info("%s finished: %s passed, %s failed", config.command, report.passed, report.failed)
    return report, exit_code


__all__ = [
    "ANCHORS",
    "EXIT_CHECK_FAILED",
    "EXIT_INPUT_ERROR",
    "EXIT_OK",
    "EXIT_RESOURCE_CAP",
    "run",
]
