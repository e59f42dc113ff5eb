"""Mode products u_n v on the lattice vertex algebra by normally ordered reconstruction."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from functools import lru_cache
from math import comb

from coefficients import RingKind
from cover import Cocycle, build_cocycle
from fock import FockState, FockVector, apply_e_plus, apply_mode, apply_s, specialize_vector, vacuum
from lattices import Lattice
from vertex.models import ModeProductRequest

logger = logging.getLogger(__name__)


def binomial(n: int, k: int) -> int:
    """C(n, k) for any integer n, with C(n, k) = (-1)^k C(k - n - 1, k) when n < 0."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


DEFAULT_CACHE_LIMIT = 200_000


class VertexAlgebra:
    """V_L over Q for one lattice and cocycle.

    Y(u, z) for u = prod alpha_{i_j}(-n_j) e_a is the normally ordered product of the
    divided derivatives d^{(n_j - 1)} alpha_{i_j}(z) with E-(-a, z) e_a z^a E+(-a, z):
    modes alpha(m), m >= 0, and E+ act on v first, then e_a z^a, then E- and the creation modes.

    Basis products, annihilation stages and iterated products are memoized in LRU caches
    holding at most `cache_limit` entries each.
    """

    def __init__(self, lattice: Lattice, *, cocycle: Cocycle | None = None, cache_limit: int = DEFAULT_CACHE_LIMIT) -> None:
        if cache_limit < 1:
            raise ValueError(f"cache_limit must be positive, got {cache_limit}")
        self.lattice = lattice
        self.cocycle = cocycle if cocycle is not None else build_cocycle(lattice)
        self.cache_limit = cache_limit
        self._state_products = lru_cache(maxsize=cache_limit)(self._compute_state_mode)
        self._right_stage = lru_cache(maxsize=cache_limit)(self._compute_right_stage)
        self._inner_first = lru_cache(maxsize=cache_limit)(self._compute_inner_first)
        self._outer_first = lru_cache(maxsize=cache_limit)(self._compute_outer_first)

    @property
    def cache_size(self) -> int:
        return self._state_products.cache_info().currsize

    def cache_stats(self) -> dict[str, int]:
        """Hits and misses of the basis product and iterated product caches."""
        products = self._state_products.cache_info()
        iterated = [self._inner_first.cache_info(), self._outer_first.cache_info()]
        return {
            "product_hits": products.hits,
            "product_misses": products.misses,
            "iterated_hits": sum(info.hits for info in iterated),
            "iterated_misses": sum(info.misses for info in iterated),
        }

    def clear_caches(self) -> None:
        for cached in (self._state_products, self._right_stage, self._inner_first, self._outer_first):
            cached.cache_clear()

    def vacuum(self) -> FockVector:
        return vacuum(self.lattice)

    def weight(self, vector: FockVector) -> int:
        return vector.max_weight(self.lattice)

    def mode(self, u: FockVector, n: int, v: FockVector) -> FockVector:
        """u_n v, extended bilinearly over the states of u and v."""
        return FockVector.combine(
            (self.state_mode(u_state, n, v_state), u_value * v_value)
            for u_state, u_value in u.items()
            for v_state, v_value in v.items()
        )

    def iterated(self, u: FockVector, k: int, v: FockVector, j: int, w: FockVector) -> FockVector:
        """u_k (v_j w)."""
        return self._inner_first(u, k, v, j, w)

    def product_of_product(self, u: FockVector, k: int, v: FockVector, j: int, w: FockVector) -> FockVector:
        """(u_k v)_j w."""
        return self._outer_first(u, k, v, j, w)

    def _compute_inner_first(self, u: FockVector, k: int, v: FockVector, j: int, w: FockVector) -> FockVector:
        return self.mode(u, k, self.mode(v, j, w))

    def _compute_outer_first(self, u: FockVector, k: int, v: FockVector, j: int, w: FockVector) -> FockVector:
        return self.mode(self.mode(u, k, v), j, w)

    def translate(self, u: FockVector, m: int) -> FockVector:
        """T^{(m)} u = u_{-m-1} 1."""
        return self.mode(u, -m - 1, self.vacuum())

    def state_mode(self, u: FockState, n: int, v: FockState) -> FockVector:
        if u.weight(self.lattice) + v.weight(self.lattice) - n - 1 < 0:
            return FockVector.zero()
        return self._state_products(u, n, v)

    def _compute_state_mode(self, u: FockState, n: int, v: FockState) -> FockVector:
        pieces = []
        positions = range(len(u.modes))
        for size in range(len(u.modes) + 1):
            for left in itertools.combinations(positions, size):
                right = tuple(position for position in positions if position not in left)
                for power, vector in self._right_stage(u, right, v).items():
                    remaining = -n - 1 - power
                    if remaining >= 0:
                        pieces.append((self._left_stage(u, left, remaining, vector), 1))
        return FockVector.combine(pieces)

    def _compute_right_stage(self, u: FockState, right: tuple[int, ...], v: FockState) -> dict[int, FockVector]:
        """Annihilation part: z-power -> vector after the right modes, E+, and e_a z^a."""
        a = u.lattice_point
        stage: dict[int, FockVector] = {0: FockVector.from_state(v)}
        for position in right:
            depth, index = u.modes[position]
            order = depth - 1
            collected: dict[int, list[tuple[FockVector, int]]] = {}
            for power, vector in stage.items():
                for m in range(_max_depth(vector) + 1):
                    image = apply_mode(self.lattice, index, m, vector)
                    if image:
                        collected.setdefault(power - m - 1 - order, []).append((image, binomial(-m - 1, order)))
            stage = {power: FockVector.combine(parts) for power, parts in collected.items()}
        collected = {}
        for power, vector in stage.items():
            for exponent in range(_max_depth(vector) + 1):
                image = apply_e_plus(self.lattice, a, exponent, vector)
                if image:
                    collected.setdefault(power - exponent, []).append((image, 1))
        stage = {power: FockVector.combine(parts) for power, parts in collected.items()}
        b = v.lattice_point
        target = tuple(x + y for x, y in zip(a, b))
        shift = self.lattice.inner(a, b)
        sign = self.cocycle(a, b)
        result = {}
        for power, vector in stage.items():
            if vector:
                result[power + shift] = FockVector({state.shifted(target): value * sign for state, value in vector.items()})
        return result

    def _left_stage(self, u: FockState, left: tuple[int, ...], total: int, vector: FockVector) -> FockVector:
        """Creation part at z^total: s_{a,N} and alpha(-(n_j + e_j)) with sum e_j + N = total."""
        a = u.lattice_point
        pieces = []
        for split in _compositions(total, len(left) + 1):
            image = apply_s(self.lattice, a, split[-1], vector)
            coefficient = 1
            for position, extra in zip(left, split[:-1]):
                depth, index = u.modes[position]
                coefficient *= binomial(depth + extra - 1, depth - 1)
                image = apply_mode(self.lattice, index, -(depth + extra), image)
            if image:
                pieces.append((image, coefficient))
        return FockVector.combine(pieces)


def _max_depth(vector: FockVector) -> int:
    return max((state.depth for state in vector.terms), default=0)


@lru_cache(maxsize=4)
def algebra_for(lattice: Lattice) -> VertexAlgebra:
    """Shared engine per lattice for one-off mode products; the least recently used lattices are dropped."""
    return VertexAlgebra(lattice)


def mode_product(request: ModeProductRequest, *, algebra: VertexAlgebra | None = None) -> FockVector:
    """u_n v; coefficients are checked to specialize into the requested ring."""
    engine = algebra if algebra is not None else algebra_for(request.lattice)
    result = engine.mode(request.u, request.n, request.v)
    if request.ring.kind is not RingKind.RATIONALS:
        specialize_vector(result, request.ring)
    return result


__all__ = ["DEFAULT_CACHE_LIMIT", "VertexAlgebra", "algebra_for", "binomial", "mode_product"]
