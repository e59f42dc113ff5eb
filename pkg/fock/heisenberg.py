"""Heisenberg modes b(n) and the coefficient operators of E-(-a, z) and E+(-a, z)."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from fractions import Fraction
from functools import lru_cache, partial
from math import factorial

from sympy.utilities.iterables import partitions

from fock.models import FockState, FockVector
from lattices import Lattice

RationalVector = Sequence[Fraction | int]


def mode_on_state(lattice: Lattice, index: int, n: int, state: FockState) -> list[tuple[FockState, Fraction]]:
    """alpha_index(n) applied to one state, using [b(m), a(-m)] = m <a, b>."""
    if n < 0:
        return [(state.with_mode(-n, index), Fraction(1))]
    gram_row = lattice.gram[index]
    if n == 0:
        pairing = sum(gram_row[j] * entry for j, entry in enumerate(state.lattice_point) if entry)
        return [(state, Fraction(pairing))] if pairing else []
    results = []
    for position, (depth, other) in enumerate(state.modes):
        if depth == n and gram_row[other]:
            results.append((state.without_position(position), Fraction(n * gram_row[other])))
    return results


def apply_mode(lattice: Lattice, index: int, n: int, v: FockVector) -> FockVector:
    terms: dict[FockState, Fraction] = {}
    for state, value in v.items():
        for image, factor in mode_on_state(lattice, index, n, state):
            terms[image] = terms.get(image, Fraction(0)) + value * factor
    return FockVector(terms)


def apply_heisenberg(lattice: Lattice, b: RationalVector, n: int, v: FockVector) -> FockVector:
    """b(n) v for b = sum b_i alpha_i in L (x) Q."""
    if len(b) != lattice.rank:
        raise ValueError(f"Vector {tuple(b)} does not match rank {lattice.rank}")
    return FockVector.combine(
        (apply_mode(lattice, index, n, v), Fraction(component))
        for index, component in enumerate(b)
        if component
    )


@lru_cache(maxsize=None)
def exponential_terms(n: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """Partitions mu of n with weight prod_k 1 / (m_k! k^{m_k}); the z^n coefficient of exp(sum x_k z^k / k)."""
    if n < 0:
        raise ValueError(f"Exponential coefficient index must be non-negative, got {n}")
    terms = []
    for multiplicities in partitions(n):
        multiplicities = dict(multiplicities)
        weight = Fraction(1)
        parts: list[int] = []
        for part, count in sorted(multiplicities.items()):
            weight /= factorial(count) * part**count
            parts.extend([part] * count)
        terms.append((tuple(parts), weight))
    return tuple(terms)


def apply_s(lattice: Lattice, a: RationalVector, n: int, v: FockVector) -> FockVector:
    """s_{a,n} v: the z^n coefficient of E-(-a, z) = exp(sum_k a(-k) z^k / k)."""
    pieces = []
    for parts, weight in exponential_terms(n):
        image = v
        for part in parts:
            image = apply_heisenberg(lattice, a, -part, image)
        pieces.append((image, weight))
    return FockVector.combine(pieces)


def apply_e_plus(lattice: Lattice, a: RationalVector, n: int, v: FockVector) -> FockVector:
    """The z^{-n} coefficient of E+(-a, z) = exp(-sum_k a(k) z^{-k} / k) applied to v."""
    pieces = []
    for parts, weight in exponential_terms(n):
        image = v
        for part in parts:
            image = apply_heisenberg(lattice, a, part, image)
            if not image:
                break
        if image:
            pieces.append((image, -weight if len(parts) % 2 else weight))
    return FockVector.combine(pieces)


def s_op(lattice: Lattice, a: RationalVector, n: int) -> Callable[[FockVector], FockVector]:
    if n < 0:
        raise ValueError(f"s_(a,n) needs n >= 0, got {n}")
    return partial(apply_s, lattice, tuple(a), n)


__all__ = [
    "apply_e_plus",
    "apply_heisenberg",
    "apply_mode",
    "apply_s",
    "exponential_terms",
    "mode_on_state",
    "s_op",
]
