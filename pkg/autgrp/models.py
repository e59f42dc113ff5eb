"""Torus characters, root group elements, automorphism actions and truncated matrix groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from coefficients import Ring, RingElement, specialize
from cover import CoverAutomorphism
from fock import FockState
from lattices import LatticeVector
from vertex import CheckSummary


@dataclass(frozen=True, slots=True)
class TorusCharacter:
    """g in Hom(L, R^x), fixed by its values on the basis."""

    ring: Ring
    values_on_basis: tuple[RingElement, ...]

    def __post_init__(self) -> None:
        for value in self.values_on_basis:
            if value.ring != self.ring:
                raise ValueError(f"Torus value {value} does not belong to {self.ring}")
            if not value.is_unit:
                raise ValueError(f"Torus value {value} is not a unit in {self.ring}")

    @classmethod
    def from_values(cls, ring: Ring, values: tuple[int | Fraction, ...] | list[int | Fraction]) -> TorusCharacter:
        return cls(ring, tuple(specialize(ring, value) for value in values))

    def value(self, point: LatticeVector) -> RingElement:
        result = self.ring.one()
        for base, exponent in zip(self.values_on_basis, point):
            if exponent:
                result = result * base**exponent
        return result

    def precompose(self, matrix: tuple[tuple[int, ...], ...]) -> TorusCharacter:
        """lambda -> g(M lambda)."""
        rank = len(self.values_on_basis)
        columns = [tuple(matrix[i][j] for i in range(rank)) for j in range(rank)]
        return TorusCharacter(self.ring, tuple(self.value(column) for column in columns))


@dataclass(frozen=True, slots=True)
class RootGroupElement:
    """exp(r (iota(e_alpha))_0)."""

    root: LatticeVector
    param: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "root", tuple(self.root))
        object.__setattr__(self, "param", Fraction(self.param))


class ActionKind(str, Enum):
    TORUS = "torus"
    ROOT_EXP = "root_exp"
    COVER = "cover"
    SECTOR_FLIP = "sector_flip"
    COMPOSITE = "composite"


@dataclass(frozen=True, slots=True)
class AutAction:
    """One realised automorphism, or a product of them applied right to left.

    SECTOR_FLIP is a cover map followed by negating a single lattice sector; it is not
    an automorphism and exists as a negative control.
    """

    kind: ActionKind
    label: str
    torus: TorusCharacter | None = None
    root_element: RootGroupElement | None = None
    cover: CoverAutomorphism | None = None
    sector: LatticeVector | None = None
    parts: tuple[AutAction, ...] = ()

    @classmethod
    def from_torus(cls, character: TorusCharacter, *, label: str | None = None) -> AutAction:
        values = ",".join(str(value) for value in character.values_on_basis)
        return cls(ActionKind.TORUS, label or f"torus({values})", torus=character)

    @classmethod
    def from_root_exp(cls, element: RootGroupElement, *, label: str | None = None) -> AutAction:
        return cls(ActionKind.ROOT_EXP, label or f"exp({element.param} e{element.root})", root_element=element)

    @classmethod
    def from_cover(cls, automorphism: CoverAutomorphism, *, label: str | None = None) -> AutAction:
        eta = ",".join(str(value) for value in automorphism.eta_on_basis)
        return cls(ActionKind.COVER, label or f"cover(h={list(map(list, automorphism.h))}, eta=({eta}))", cover=automorphism)

    @classmethod
    def sector_flip(cls, automorphism: CoverAutomorphism, sector: LatticeVector, *, label: str | None = None) -> AutAction:
        return cls(
            ActionKind.SECTOR_FLIP,
            label or f"sector_flip({tuple(sector)})",
            cover=automorphism,
            sector=tuple(sector),
        )

    @classmethod
    def composite(cls, *parts: AutAction, label: str | None = None) -> AutAction:
        return cls(ActionKind.COMPOSITE, label or " * ".join(part.label for part in parts), parts=tuple(parts))


@dataclass(slots=True)
class TruncatedMatrixGroup:
    """Exact matrices on the states of weight <= truncation_weight."""

    truncation_weight: int
    basis: tuple[FockState, ...]
    elements: tuple[np.ndarray, ...]
    labels: tuple[str, ...] = ()
    _keys: frozenset[tuple] = field(default=frozenset(), repr=False)

    def __post_init__(self) -> None:
        self._keys = frozenset(fraction_key(element) for element in self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def keys(self) -> frozenset[tuple]:
        return self._keys

    def contains(self, matrix: np.ndarray) -> bool:
        return fraction_key(matrix) in self._keys


@dataclass(slots=True)
class AutomorphismVerdict:
    action: str
    holds: bool
    instances: int
    counterexample: str | None = None


@dataclass(slots=True)
class TheoremReport:
    checks: list[CheckSummary] = field(default_factory=list)
    data: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.verdict in {"pass", "info"} for check in self.checks)


def fraction_key(matrix: np.ndarray) -> tuple:
    return (matrix.shape, tuple(Fraction(entry) for entry in matrix.ravel().tolist()))


__all__ = [
    "ActionKind",
    "AutAction",
    "AutomorphismVerdict",
    "RootGroupElement",
    "TheoremReport",
    "TorusCharacter",
    "TruncatedMatrixGroup",
    "fraction_key",
]
