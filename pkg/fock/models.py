"""Fock space states, sparse vectors and graded piece bases."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from lattices import Lattice, LatticeVector

Mode = tuple[int, int]


@dataclass(frozen=True, slots=True)
class FockState:
    """prod alpha_i(-n) e_lambda; modes are (depth n, basis index i) pairs, kept sorted."""

    lattice_point: LatticeVector
    modes: tuple[Mode, ...] = ()

    def __post_init__(self) -> None:
        for depth, index in self.modes:
            if depth < 1 or index < 0 or index >= len(self.lattice_point):
                raise ValueError(f"Invalid creation mode (depth={depth}, index={index}) for rank {len(self.lattice_point)}")
        object.__setattr__(self, "lattice_point", tuple(self.lattice_point))
        object.__setattr__(self, "modes", tuple(sorted(self.modes)))

    @property
    def depth(self) -> int:
        return sum(depth for depth, _ in self.modes)

    def weight(self, lattice: Lattice) -> int:
        return lattice.norm(self.lattice_point) // 2 + self.depth

    def with_mode(self, depth: int, index: int) -> FockState:
        return FockState(self.lattice_point, self.modes + ((depth, index),))

    def without_position(self, position: int) -> FockState:
        return FockState(self.lattice_point, self.modes[:position] + self.modes[position + 1 :])

    def shifted(self, point: LatticeVector) -> FockState:
        return FockState(point, self.modes)

    def describe(self) -> str:
        operators = "".join(f"a{index + 1}(-{depth})" for depth, index in self.modes)
        point = ",".join(str(entry) for entry in self.lattice_point)
        return f"{operators}e({point})"


@dataclass(frozen=True, slots=True, eq=False)
class FockVector:
    """Finite rational combination of FockStates; zero coefficients are dropped on construction.

    `lattice_degree`, when given, asserts that every state sits in that sector.
    """

    terms: Mapping[FockState, Fraction] = field(default_factory=dict)
    lattice_degree: LatticeVector | None = None
    _hash: int | None = field(default=None, init=False, repr=False)

    def __post_init__(self) -> None:
        cleaned = {state: Fraction(value) for state, value in self.terms.items() if value}
        object.__setattr__(self, "terms", cleaned)
        if self.lattice_degree is not None:
            degree = tuple(self.lattice_degree)
            for state in cleaned:
                if state.lattice_point != degree:
                    raise ValueError(f"State {state.describe()} is outside lattice degree {degree}")
            object.__setattr__(self, "lattice_degree", degree)

    @classmethod
    def zero(cls) -> FockVector:
        return cls({})

    @classmethod
    def from_state(cls, state: FockState, coefficient: Fraction | int = 1) -> FockVector:
        return cls({state: Fraction(coefficient)})

    @classmethod
    def combine(cls, parts: Iterable[tuple[FockVector, Fraction | int]]) -> FockVector:
        """sum of coefficient * vector."""
        terms: dict[FockState, Fraction] = {}
        for vector, coefficient in parts:
            if not coefficient:
                continue
            for state, value in vector.terms.items():
                terms[state] = terms.get(state, Fraction(0)) + value * coefficient
        return cls(terms)

    def items(self) -> Iterator[tuple[FockState, Fraction]]:
        return iter(self.terms.items())

    @property
    def states(self) -> tuple[FockState, ...]:
        return tuple(sorted(self.terms, key=lambda state: (state.lattice_point, state.modes)))

    def coefficient(self, state: FockState) -> Fraction:
        return self.terms.get(state, Fraction(0))

    def __add__(self, other: FockVector) -> FockVector:
        return FockVector.combine(((self, 1), (other, 1)))

    def __sub__(self, other: FockVector) -> FockVector:
        return FockVector.combine(((self, 1), (other, -1)))

    def __neg__(self) -> FockVector:
        return self.scale(-1)

    def scale(self, scalar: Fraction | int) -> FockVector:
        return FockVector({state: value * scalar for state, value in self.terms.items()})

    def __mul__(self, scalar: Fraction | int) -> FockVector:
        return self.scale(scalar)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def lattice_degrees(self) -> set[LatticeVector]:
        return {state.lattice_point for state in self.terms}

    def weights(self, lattice: Lattice) -> set[int]:
        return {state.weight(lattice) for state in self.terms}

    def max_weight(self, lattice: Lattice) -> int:
        return max(self.weights(lattice), default=0)

    def is_homogeneous(self, lattice: Lattice) -> bool:
        return len(self.lattice_degrees()) <= 1 and len(self.weights(lattice)) <= 1

    def describe(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[state]}){state.describe()}" for state in self.states)


@dataclass(frozen=True, slots=True)
class GradedPieceBasis:
    """States of pi_lambda at one weight, in canonical order."""

    lattice_point: LatticeVector
    weight: int
    states: tuple[FockState, ...]

    @property
    def dimension(self) -> int:
        return len(self.states)

    def coordinates(self, vector: FockVector) -> list[Fraction]:
        positions = {state: index for index, state in enumerate(self.states)}
        coordinates = [Fraction(0)] * len(self.states)
        for state, value in vector.items():
            if state not in positions:
                raise ValueError(
                    f"{state.describe()} is not in the graded piece ({self.lattice_point}, weight {self.weight})"
                )
            coordinates[positions[state]] = value
        return coordinates


__all__ = ["FockState", "FockVector", "GradedPieceBasis", "Mode"]
