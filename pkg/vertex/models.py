"""Requests, conformal data and check outcomes for the vertex engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from coefficients import Ring, RingElement
from fock import FockVector
from lattices import Lattice


@dataclass(frozen=True, slots=True)
class ModeProductRequest:
    lattice: Lattice
    u: FockVector
    n: int
    v: FockVector
    ring: Ring


@dataclass(frozen=True, slots=True)
class ConformalData:
    """omega = sum_{i,j} (G^-1)_{ij}/2 alpha_i(-1) alpha_j(-1) 1 with half charge rank/2."""

    lattice: Lattice
    ring: Ring
    omega: FockVector
    half_charge: RingElement | None
    half_charge_rational: Fraction
    omega_in_ring: bool


@dataclass(frozen=True, slots=True)
class ConformalRefusal:
    """det L is not a unit in the ring; `failures` lists the entries of G^-1 that do not specialize."""

    lattice: Lattice
    ring: Ring
    determinant: int
    reason: str
    failures: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class IdentityOutcome:
    name: str
    anchor: str
    holds: bool
    residual: FockVector
    instance: str


@dataclass(slots=True)
class CheckSummary:
    """Aggregate of many IdentityOutcomes for one named statement."""

    name: str
    anchor: str
    instances: int = 0
    failures: int = 0
    counterexample: str | None = None
    refused: str | None = None
    details: dict[str, object] = field(default_factory=dict)

    def record(self, outcome: IdentityOutcome) -> None:
        self.instances += 1
        if outcome.holds:
            return
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = f"{outcome.instance}: residual {outcome.residual.describe()}"

    @property
    def verdict(self) -> str:
        if self.refused is not None:
            return "refused"
        return "pass" if self.failures == 0 else "fail"


__all__ = [
    "CheckSummary",
    "ConformalData",
    "ConformalRefusal",
    "IdentityOutcome",
    "ModeProductRequest",
]
