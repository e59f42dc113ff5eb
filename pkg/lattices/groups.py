"""Reflections, Weyl groups, orthogonal groups and generic matrix-group closure."""

from __future__ import annotations

import itertools
import logging
import os
from collections.abc import Callable, Hashable, Iterable, Sequence
from typing import TypeVar

import numpy as np
from tqdm import tqdm

from lattices.models import IntegerMatrixGroup, Lattice, LatticeVector, matrix_key
from lattices.vectors import short_vectors, simple_roots

logger = logging.getLogger(__name__)

DEFAULT_GROUP_CAP = 1_000_000

Element = TypeVar("Element")


class ResourceCapExceeded(RuntimeError):
    """A closure or enumeration grew past the configured element cap."""


def group_cap_from_env(env: dict[str, str] | None = None) -> int:
    resolved_env = env if env is not None else os.environ
    return int(resolved_env.get("LATTICE_VOA_GROUP_CAP", str(DEFAULT_GROUP_CAP)))


def progress_enabled(env: dict[str, str] | None = None) -> bool:
    resolved_env = env if env is not None else os.environ
    return resolved_env.get("LATTICE_VOA_PROGRESS", "false").strip().lower() == "true"


def close_under_products(
    generators: Sequence[Element],
    *,
    identity: Element,
    multiply: Callable[[Element, Element], Element],
    key: Callable[[Element], Hashable],
    cap: int | None = None,
    label: str = "group",
) -> list[Element]:
    """Breadth-first closure of a finite generating set under multiplication.

    For finite groups closure under products already contains all inverses.
    Elements are returned in discovery order, identity first.
    """
    limit = cap if cap is not None else group_cap_from_env()
    seen = {key(identity)}
    elements = [identity]
    frontier = [identity]
    with tqdm(desc=f"closing {label}", unit="el", disable=not progress_enabled()) as bar:
        while frontier:
            next_frontier: list[Element] = []
            for element in frontier:
                for generator in generators:
                    product = multiply(generator, element)
                    product_key = key(product)
                    if product_key in seen:
                        continue
                    seen.add(product_key)
                    elements.append(product)
                    next_frontier.append(product)
                    bar.update(1)
                    if len(elements) > limit:
                        raise ResourceCapExceeded(f"Closure of {label} exceeded {limit} elements")
            frontier = next_frontier
    logger.info("Closed %s with %s elements", label, len(elements))
    return elements


def reflection(lattice: Lattice, root: LatticeVector) -> np.ndarray:
    """Matrix of x -> x - <x,a> a for a norm 2 vector a."""
    if lattice.norm(root) != 2:
        raise ValueError(f"Reflection needs a root of norm 2, got {root} of norm {lattice.norm(root)}")
    a = np.array(root, dtype=np.int64).reshape(-1, 1)
    return np.eye(lattice.rank, dtype=np.int64) - a @ (a.T @ lattice.gram_array)


def preserves_gram(lattice: Lattice, matrix: np.ndarray) -> bool:
    gram = lattice.gram_array
    return bool(np.array_equal(matrix.T @ gram @ matrix, gram))


def integer_group_closure(
    lattice: Lattice,
    generators: Iterable[np.ndarray],
    *,
    cap: int | None = None,
    label: str = "group",
) -> IntegerMatrixGroup:
    generator_list = tuple(generators)
    elements = close_under_products(
        generator_list,
        identity=np.eye(lattice.rank, dtype=np.int64),
        multiply=lambda left, right: left @ right,
        key=matrix_key,
        cap=cap,
        label=label,
    )
    return IntegerMatrixGroup(elements=tuple(elements), generators=generator_list)


def weyl_group(lattice: Lattice, *, cap: int | None = None) -> IntegerMatrixGroup:
    """Closure of the simple reflections."""
    reflections = [reflection(lattice, root) for root in simple_roots(lattice)]
    return integer_group_closure(lattice, reflections, cap=cap, label=f"W({lattice.name})")


def orthogonal_group(lattice: Lattice, *, cap: int | None = None) -> IntegerMatrixGroup:
    """All integral M with M^T G M = G, by backtracking over images of the basis vectors."""
    limit = cap if cap is not None else group_cap_from_env()
    rank = lattice.rank
    gram = lattice.gram
    pool = short_vectors(lattice, max(gram[i][i] for i in range(rank)))
    candidates = [[v for v in pool if lattice.norm(v) == gram[i][i]] for i in range(rank)]
    images: list[LatticeVector] = []
    elements: list[np.ndarray] = []

    def extend(index: int) -> None:
        if index == rank:
            elements.append(np.array(images, dtype=np.int64).T.copy())
            if len(elements) > limit:
                raise ResourceCapExceeded(f"Orthogonal group of {lattice.name} exceeded {limit} elements")
            return
        for candidate in candidates[index]:
            if all(lattice.inner(images[j], candidate) == gram[j][index] for j in range(index)):
                images.append(candidate)
                extend(index + 1)
                images.pop()

    extend(0)
    logger.info("Found %s orthogonal transformations of %s", len(elements), lattice.name)
    return IntegerMatrixGroup(elements=tuple(elements))


def orthogonal_group_bruteforce(lattice: Lattice, *, box: int = 2) -> IntegerMatrixGroup:
    """Every Gram-preserving matrix with entries in [-box, box]; small ranks only."""
    rank = lattice.rank
    elements = []
    for entries in itertools.product(range(-box, box + 1), repeat=rank * rank):
        matrix = np.array(entries, dtype=np.int64).reshape(rank, rank)
        if preserves_gram(lattice, matrix):
            elements.append(matrix)
    return IntegerMatrixGroup(elements=tuple(elements))


def outer_classes(weyl: IntegerMatrixGroup, orthogonal: IntegerMatrixGroup) -> list[np.ndarray]:
    """One representative per right coset W g of W in O(L)."""
    covered: set[bytes] = set()
    representatives: list[np.ndarray] = []
    for element in sorted(orthogonal.elements, key=lambda matrix: tuple(matrix.ravel().tolist())):
        if matrix_key(element) in covered:
            continue
        representatives.append(element)
        covered.update(matrix_key(w @ element) for w in weyl.elements)
    return representatives


__all__ = [
    "DEFAULT_GROUP_CAP",
    "ResourceCapExceeded",
    "close_under_products",
    "group_cap_from_env",
    "integer_group_closure",
    "orthogonal_group",
    "orthogonal_group_bruteforce",
    "outer_classes",
    "preserves_gram",
    "progress_enabled",
    "reflection",
    "weyl_group",
]
