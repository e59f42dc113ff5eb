"""Conformal vector, Virasoro modes L_n = omega_{n+1} and their relations."""

from __future__ import annotations

import logging
from fractions import Fraction

from tqdm import tqdm

from coefficients import Ring, SpecializationError, can_specialize, specialize
from fock import FockState, FockVector, heisenberg_state, truncation_basis
from lattices import Lattice, determinant, gram_inverse
from lattices.groups import progress_enabled
from vertex.engine import VertexAlgebra, binomial
from vertex.models import CheckSummary, ConformalData, ConformalRefusal, IdentityOutcome

logger = logging.getLogger(__name__)

VIRASORO_BRACKET = "Virasoro relation [L_m, L_n] = (m-n)L_(m+n) + C(m+1,3) c"
L0_GRADING = "L_0 v = wt(v) v"
L_MINUS_ONE = "L_(-1) u = u_(-2) 1"
HEISENBERG_VIRASORO = "[h_m, L_n] = m h_(m+n)"
ZERO_MODE = "h_0 omega = 0"

ANCHORS = {
    VIRASORO_BRACKET: "Definition: vertex operator algebra, Virasoro relations of omega",
    L0_GRADING: "Definition: vertex operator algebra, L_0 acts by the weight",
    L_MINUS_ONE: "Definition: vertex operator algebra, L_(-1) is the translation operator",
    HEISENBERG_VIRASORO: "Weight-one fields commute with L_n up to m h_(m+n)",
    ZERO_MODE: "Conformal vector of V_L is fixed by the torus",
}


def omega_vector(lattice: Lattice) -> FockVector:
    inverse = gram_inverse(lattice)
    zero = (0,) * lattice.rank
    terms: dict[FockState, Fraction] = {}
    for i in range(lattice.rank):
        terms[FockState(zero, ((1, i), (1, i)))] = inverse[i][i] / 2
        for j in range(i + 1, lattice.rank):
            terms[FockState(zero, ((1, i), (1, j)))] = inverse[i][j]
    return FockVector(terms, lattice_degree=zero)


def criterion_failures(lattice: Lattice, ring: Ring) -> tuple[str, ...]:
    """Entries violating (G^-1)_{ii} in 2R or (G^-1)_{ij} in R."""
    inverse = gram_inverse(lattice)
    failures = []
    for i in range(lattice.rank):
        if not can_specialize(ring, inverse[i][i] / 2):
            failures.append(f"(G^-1)_({i + 1},{i + 1}) = {inverse[i][i]} is not in 2{ring}")
        for j in range(i + 1, lattice.rank):
            if not can_specialize(ring, inverse[i][j]):
                failures.append(f"(G^-1)_({i + 1},{j + 1}) = {inverse[i][j]} is not in {ring}")
    return tuple(failures)


def conformal_vector(lattice: Lattice, ring: Ring) -> ConformalData | ConformalRefusal:
    det = determinant(lattice)
    failures = criterion_failures(lattice, ring)
    if not specialize(ring, det).is_unit:
        logger.info("No conformal vector for %s over %s: det %s is not a unit", lattice.name, ring, det)
        return ConformalRefusal(
            lattice=lattice,
            ring=ring,
            determinant=det,
            reason=f"det {lattice.name} = {det} is not invertible in {ring}",
            failures=failures,
        )
    half = Fraction(lattice.rank, 2)
    try:
        half_charge = specialize(ring, half)
    except SpecializationError:
        half_charge = None
    return ConformalData(
        lattice=lattice,
        ring=ring,
        omega=omega_vector(lattice),
        half_charge=half_charge,
        half_charge_rational=half,
        omega_in_ring=not failures,
    )


def virasoro_mode(algebra: VertexAlgebra, omega: FockVector, n: int, v: FockVector) -> FockVector:
    return algebra.mode(omega, n + 1, v)


def zero_mode_check(algebra: VertexAlgebra, omega: FockVector) -> CheckSummary:
    summary = CheckSummary(name=ZERO_MODE, anchor=ANCHORS[ZERO_MODE])
    for index in range(algebra.lattice.rank):
        h = heisenberg_state(algebra.lattice, [(1, index)])
        image = algebra.mode(h, 0, omega)
        summary.record(IdentityOutcome(ZERO_MODE, ANCHORS[ZERO_MODE], not image, image, f"h = alpha_{index + 1}"))
    return summary


def virasoro_check(
    algebra: VertexAlgebra,
    ring: Ring,
    *,
    max_mode: int = 2,
    max_weight: int = 3,
) -> list[CheckSummary]:
    lattice = algebra.lattice
    names = (VIRASORO_BRACKET, L0_GRADING, L_MINUS_ONE, HEISENBERG_VIRASORO)
    summaries = {name: CheckSummary(name=name, anchor=ANCHORS[name]) for name in names}
    data = conformal_vector(lattice, ring)
    if isinstance(data, ConformalRefusal) or not data.omega_in_ring:
        reason = data.reason if isinstance(data, ConformalRefusal) else "omega does not specialize to the ring"
        for summary in summaries.values():
            summary.refused = reason
        return list(summaries.values())
    omega = data.omega
    charge = data.half_charge_rational
    modes = range(-max_mode, max_mode + 1)
    heisenberg = [heisenberg_state(lattice, [(1, index)]) for index in range(lattice.rank)]
    basis = [FockVector.from_state(state) for state in truncation_basis(lattice, max_weight)]
    for v in tqdm(basis, desc="virasoro", unit="vec", disable=not progress_enabled()):
        label = v.describe()
        for m in modes:
            for n in modes:
                lhs = virasoro_mode(algebra, omega, m, virasoro_mode(algebra, omega, n, v)) - virasoro_mode(
                    algebra, omega, n, virasoro_mode(algebra, omega, m, v)
                )
                rhs = virasoro_mode(algebra, omega, m + n, v).scale(m - n)
                if m + n == 0:
                    rhs = rhs + v.scale(binomial(m + 1, 3) * charge)
                summaries[VIRASORO_BRACKET].record(_compare(VIRASORO_BRACKET, lhs, rhs, f"{label} m={m} n={n}"))
                for index, h in enumerate(heisenberg):
                    lhs = algebra.mode(h, m, virasoro_mode(algebra, omega, n, v)) - virasoro_mode(
                        algebra, omega, n, algebra.mode(h, m, v)
                    )
                    rhs = algebra.mode(h, m + n, v).scale(m)
                    summaries[HEISENBERG_VIRASORO].record(
                        _compare(HEISENBERG_VIRASORO, lhs, rhs, f"{label} h=alpha_{index + 1} m={m} n={n}")
                    )
        summaries[L0_GRADING].record(
            _compare(L0_GRADING, virasoro_mode(algebra, omega, 0, v), v.scale(algebra.weight(v)), label)
        )
        summaries[L_MINUS_ONE].record(
            _compare(L_MINUS_ONE, virasoro_mode(algebra, omega, -1, v), algebra.mode(v, -2, algebra.vacuum()), label)
        )
    for summary in summaries.values():
        logger.info("%s: %s instances, %s failures", summary.name, summary.instances, summary.failures)
    return list(summaries.values())


def _compare(name: str, lhs: FockVector, rhs: FockVector, instance: str) -> IdentityOutcome:
    residual = lhs - rhs
    return IdentityOutcome(name=name, anchor=ANCHORS[name], holds=not residual, residual=residual, instance=instance)


__all__ = [
    "ANCHORS",
    "conformal_vector",
    "criterion_failures",
    "omega_vector",
    "virasoro_check",
    "virasoro_mode",
    "zero_mode_check",
]
