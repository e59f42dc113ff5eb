"""Lattice, root datum and matrix group models."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np
from sympy import Matrix

LatticeVector = tuple[int, ...]


def validate_gram(gram: list[list[int]] | tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Normalises a Gram matrix, raising ValueError naming the first violated condition."""
    rows = [list(row) for row in gram]
    rank = len(rows)
    if rank == 0:
        raise ValueError("Gram matrix is empty")
    for index, row in enumerate(rows):
        if len(row) != rank:
            raise ValueError(f"Gram row {index + 1} has {len(row)} entries, expected {rank}")
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise ValueError(f"Gram row {index + 1} contains a non-integer entry: {entry!r}")
    for i in range(rank):
        for j in range(i + 1, rank):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"Gram matrix is not symmetric at ({i + 1}, {j + 1}): {rows[i][j]} != {rows[j][i]}")
    for i in range(rank):
        if rows[i][i] % 2:
            raise ValueError(f"Lattice is not even: diagonal entry {i + 1} is {rows[i][i]}")
    matrix = Matrix(rows)
    for size in range(1, rank + 1):
        minor = matrix[:size, :size].det()
        if minor <= 0:
            raise ValueError(f"Gram matrix is not positive definite: leading minor {size} is {minor}")
    return tuple(tuple(row) for row in rows)


@lru_cache(maxsize=65536)
def _pairing(gram: tuple[tuple[int, ...], ...], x: LatticeVector, y: LatticeVector) -> int:
    rank = len(gram)
    return sum(x[i] * gram[i][j] * y[j] for i in range(rank) for j in range(rank) if x[i] and y[j])


@dataclass(frozen=True, slots=True)
class Lattice:
    """Even positive-definite lattice given by its Gram matrix in a fixed basis."""

    name: str
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gram", validate_gram(self.gram))

    @classmethod
    def from_gram(cls, name: str, gram: list[list[int]]) -> Lattice:
        return cls(name=name, gram=tuple(tuple(row) for row in gram))

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def gram_array(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    def basis_vector(self, index: int) -> LatticeVector:
        return tuple(1 if position == index else 0 for position in range(self.rank))

    def inner(self, x: LatticeVector, y: LatticeVector) -> int:
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError(f"Vector dimensions {len(x)}, {len(y)} do not match rank {self.rank}")
        return _pairing(self.gram, tuple(x), tuple(y))

    def rational_inner(self, x: tuple[Fraction | int, ...], y: tuple[Fraction | int, ...]) -> Fraction:
        """Bilinear form extended to L ⊗ Q."""
        return sum(
            (Fraction(x[i]) * self.gram[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j]),
            Fraction(0),
        )

    def norm(self, x: LatticeVector) -> int:
        return self.inner(x, x)

    def direct_sum(self, other: Lattice, *, name: str | None = None) -> Lattice:
        rank = self.rank + other.rank
        rows = [[0] * rank for _ in range(rank)]
        for i, row in enumerate(self.gram):
            rows[i][: self.rank] = row
        for i, row in enumerate(other.gram):
            rows[self.rank + i][self.rank :] = row
        return Lattice.from_gram(name or f"{self.name}{other.name}", rows)


@dataclass(slots=True)
class RootDatum:
    character_lattice: Lattice
    roots: tuple[LatticeVector, ...]
    cocharacter_gram_inverse: tuple[tuple[Fraction, ...], ...]
    coroots: tuple[LatticeVector, ...]
    root_span_rank: int

    @property
    def is_semisimple(self) -> bool:
        return self.root_span_rank == self.character_lattice.rank


@dataclass(slots=True)
class IntegerMatrixGroup:
    """Finite group of integer matrices acting on lattice coordinates (x -> M x)."""

    elements: tuple[np.ndarray, ...]
    generators: tuple[np.ndarray, ...] = ()
    _keys: frozenset[bytes] = field(default=frozenset(), repr=False)

    def __post_init__(self) -> None:
        self._keys = frozenset(matrix_key(element) for element in self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, matrix: np.ndarray) -> bool:
        return matrix_key(matrix) in self._keys

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def matrix_key(matrix: np.ndarray) -> bytes:
    return np.ascontiguousarray(matrix, dtype=np.int64).tobytes() + bytes([matrix.shape[0]])


__all__ = ["IntegerMatrixGroup", "Lattice", "LatticeVector", "RootDatum", "matrix_key", "validate_gram"]
