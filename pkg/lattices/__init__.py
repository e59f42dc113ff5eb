"""Even lattices, root systems and their symmetry groups."""

from lattices.config import DEFAULT_LATTICE, load_lattice, parse_lattice_file, preset_names
from lattices.groups import (
    ResourceCapExceeded,
    close_under_products,
    orthogonal_group,
    orthogonal_group_bruteforce,
    outer_classes,
    reflection,
    weyl_group,
)
from lattices.models import IntegerMatrixGroup, Lattice, LatticeVector, RootDatum
from lattices.roots import cartan_type, root_datum, simple_roots
from lattices.vectors import determinant, gram_inverse, inner, roots, short_vectors

__all__ = [
    "DEFAULT_LATTICE",
    "IntegerMatrixGroup",
    "Lattice",
    "LatticeVector",
    "ResourceCapExceeded",
    "RootDatum",
    "cartan_type",
    "close_under_products",
    "determinant",
    "gram_inverse",
    "inner",
    "load_lattice",
    "orthogonal_group",
    "orthogonal_group_bruteforce",
    "outer_classes",
    "parse_lattice_file",
    "preset_names",
    "reflection",
    "root_datum",
    "roots",
    "short_vectors",
    "simple_roots",
    "weyl_group",
]
