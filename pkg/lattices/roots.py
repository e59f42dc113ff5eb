"""Root datum and Cartan type of the root system of a lattice."""

from __future__ import annotations

import logging

import numpy as np
from sympy import Matrix

from lattices.groups import reflection
from lattices.models import Lattice, LatticeVector, RootDatum
from lattices.vectors import coroot_coordinates, dual_pairing, gram_inverse, positive_roots, roots, simple_roots

logger = logging.getLogger(__name__)

_EXCEPTIONAL_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}


def root_datum(lattice: Lattice) -> RootDatum:
    """(X, Phi, X^vee, Phi^vee) with X = L and X^vee = L^vee, every axiom checked."""
    root_list = tuple(roots(lattice))
    root_set = set(root_list)
    for root in root_list:
        if dual_pairing(lattice, root, root) != 2:
            raise RuntimeError(f"Root datum check failed: <a, a^vee> != 2 for {root}")
        matrix = reflection(lattice, root)
        images = {tuple(int(entry) for entry in matrix @ np.array(other, dtype=np.int64)) for other in root_list}
        if images != root_set:
            raise RuntimeError(f"Root datum check failed: reflection in {root} does not permute the roots")
        multiples = [other for other in root_list if _is_rational_multiple(other, root)]
        if sorted(multiples) != sorted([root, tuple(-entry for entry in root)]):
            raise RuntimeError(f"Root datum check failed: root system is not reduced at {root}")
    span_rank = Matrix([list(root) for root in root_list]).rank() if root_list else 0
    return RootDatum(
        character_lattice=lattice,
        roots=root_list,
        cocharacter_gram_inverse=gram_inverse(lattice),
        coroots=tuple(coroot_coordinates(lattice, root) for root in root_list),
        root_span_rank=span_rank,
    )


def cartan_type(lattice: Lattice) -> list[tuple[str, int]]:
    simple = simple_roots(lattice)
    components = _connected_components(lattice, simple)
    types = sorted(_classify_component(lattice, component) for component in components)
    logger.debug("Cartan type of %s: %s", lattice.name, types)
    return types


def format_cartan_type(components: list[tuple[str, int]]) -> str:
    if not components:
        return "empty"
    return " + ".join(f"{letter}{rank}" for letter, rank in components)


def _connected_components(lattice: Lattice, simple: list[LatticeVector]) -> list[list[LatticeVector]]:
    remaining = list(simple)
    components: list[list[LatticeVector]] = []
    while remaining:
        component = [remaining.pop(0)]
        grew = True
        while grew:
            grew = False
            for root in list(remaining):
                if any(lattice.inner(root, member) != 0 for member in component):
                    component.append(root)
                    remaining.remove(root)
                    grew = True
        components.append(component)
    return components


def _classify_component(lattice: Lattice, component: list[LatticeVector]) -> tuple[str, int]:
    size = len(component)
    neighbours = {
        node: [other for other in component if other != node and lattice.inner(node, other) != 0]
        for node in component
    }
    for node, adjacent in neighbours.items():
        for other in adjacent:
            if lattice.inner(node, other) != -1:
                raise RuntimeError(f"Simple roots {node}, {other} are not simply laced")
    degrees = sorted(len(adjacent) for adjacent in neighbours.values())
    edges = sum(degrees) // 2
    if edges != size - 1:
        raise RuntimeError(f"Dynkin diagram of {component} is not a tree")
    if degrees[-1] <= 2:
        return ("A", size)
    branch_nodes = [node for node, adjacent in neighbours.items() if len(adjacent) == 3]
    if len(branch_nodes) != 1 or degrees[-1] > 3:
        raise RuntimeError(f"Unclassifiable Dynkin diagram on {size} nodes")
    branch = branch_nodes[0]
    arms = tuple(sorted(_arm_length(neighbours, branch, start) for start in neighbours[branch]))
    if arms[0] == 1 and arms[1] == 1:
        return ("D", size)
    if arms in _EXCEPTIONAL_ARMS:
        return ("E", _EXCEPTIONAL_ARMS[arms])
    raise RuntimeError(f"Unclassifiable Dynkin diagram with arms {arms}")


def _arm_length(neighbours: dict[LatticeVector, list[LatticeVector]], branch: LatticeVector, start: LatticeVector) -> int:
    length = 1
    previous, current = branch, start
    while True:
        onward = [node for node in neighbours[current] if node != previous]
        if not onward:
            return length
        previous, current = current, onward[0]
        length += 1


def _is_rational_multiple(vector: LatticeVector, root: LatticeVector) -> bool:
    """vector = t * root for some rational t."""
    pivot = next(index for index, entry in enumerate(root) if entry)
    return all(vector[i] * root[pivot] == root[i] * vector[pivot] for i in range(len(root)))


__all__ = ["cartan_type", "format_cartan_type", "positive_roots", "root_datum", "simple_roots"]
