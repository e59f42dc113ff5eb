import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from coefficients import Ring, SpecializationError
from fock import (
    FockState,
    FockVector,
    apply_e_plus,
    apply_mode,
    apply_s,
    colored_partition_counts,
    graded_dimension,
    graded_piece_basis,
    heisenberg_state,
    integral_membership,
    lattice_points,
    lattice_vector_state,
    s_op,
    specialize_vector,
    theta_counts,
    truncation_basis,
    vacuum,
    zform_piece,
    zform_spanning_set,
)
from lattices import Lattice

A1 = Lattice.from_gram("A1", [[2]])
A2 = Lattice.from_gram("A2", [[2, -1], [-1, 2]])
A2_BASIS = truncation_basis(A2, 3)


def dimensions_by_enumeration(lattice: Lattice, max_weight: int) -> list[int]:
    counts = [0] * (max_weight + 1)
    for state in truncation_basis(lattice, max_weight):
        counts[state.weight(lattice)] += 1
    return counts


class FockModelTests(unittest.TestCase):
    def test_states_are_canonical(self) -> None:
        state = FockState((0,), ((2, 0), (1, 0)))
        self.assertEqual(state.modes, ((1, 0), (2, 0)))
        self.assertEqual(state.depth, 3)
        self.assertEqual(state.weight(A1), 3)
        self.assertEqual(FockState((1,), ((1, 0),)).describe(), "a1(-1)e(1)")
        with self.assertRaises(ValueError):
            FockState((0,), ((0, 0),))
        with self.assertRaises(ValueError):
            FockState((0,), ((1, 1),))

    def test_vector_arithmetic(self) -> None:
        x = heisenberg_state(A1, [(1, 0)])
        y = lattice_vector_state(A1, (1,))
        total = x + y.scale(Fraction(1, 2))
        self.assertEqual(len(total), 2)
        self.assertEqual(total - x, y * Fraction(1, 2))
        self.assertFalse(total - total)
        self.assertEqual(total.lattice_degrees(), {(0,), (1,)})
        self.assertEqual(total.weights(A1), {1})
        self.assertFalse(total.is_homogeneous(A1))
        self.assertEqual(FockVector.zero().describe(), "0")

    def test_lattice_degree_is_enforced(self) -> None:
        with self.assertRaises(ValueError):
            FockVector({FockState((1,)): Fraction(1)}, lattice_degree=(0,))

    def test_coordinates_reject_foreign_states(self) -> None:
        basis = graded_piece_basis(A1, (0,), 2)
        self.assertEqual(basis.dimension, 2)
        with self.assertRaises(ValueError):
            basis.coordinates(lattice_vector_state(A1, (1,)))


class GradedDimensionTests(unittest.TestCase):
    def test_a1_goldens(self) -> None:
        expected = [1, 3, 4, 7, 13, 19, 29]
        self.assertEqual([graded_dimension(A1, weight) for weight in range(7)], expected)
        self.assertEqual(dimensions_by_enumeration(A1, 6), expected)

    def test_a2_goldens(self) -> None:
        expected = [1, 8, 17, 46, 98, 198, 371]
        self.assertEqual([graded_dimension(A2, weight) for weight in range(7)], expected)
        self.assertEqual(dimensions_by_enumeration(A2, 4), expected[:5])

    def test_oracle_pieces(self) -> None:
        self.assertEqual(colored_partition_counts(2, 4), [1, 2, 5, 10, 20])
        self.assertEqual(theta_counts(A2, 4), [1, 6, 0, 6, 6])
        with self.assertRaises(ValueError):
            graded_dimension(A1, -1)

    def test_lattice_points_order(self) -> None:
        self.assertEqual(lattice_points(A1, 1), [(0,), (-1,), (1,)])
        self.assertEqual(len(lattice_points(A2, 1)), 7)


class HeisenbergTests(unittest.TestCase):
    def test_zero_mode_reads_lattice_degree(self) -> None:
        image = apply_mode(A1, 0, 0, lattice_vector_state(A1, (1,)))
        self.assertEqual(image, lattice_vector_state(A1, (1,)).scale(2))

    def test_s_operator_expansion(self) -> None:
        image = apply_s(A1, (1,), 2, vacuum(A1))
        self.assertEqual(image.coefficient(FockState((0,), ((1, 0), (1, 0)))), Fraction(1, 2))
        self.assertEqual(image.coefficient(FockState((0,), ((2, 0),))), Fraction(1, 2))
        self.assertEqual(len(image), 2)
        self.assertEqual(s_op(A1, (1,), 0)(vacuum(A1)), vacuum(A1))
        with self.assertRaises(ValueError):
            s_op(A1, (1,), -1)

    def test_e_plus_annihilates_then_signs(self) -> None:
        v = heisenberg_state(A1, [(1, 0)])
        self.assertEqual(apply_e_plus(A1, (1,), 1, v), vacuum(A1).scale(-2))
        self.assertEqual(apply_e_plus(A1, (1,), 1, vacuum(A1)), FockVector.zero())

    @given(
        st.sampled_from(A2_BASIS),
        st.integers(0, 1),
        st.integers(0, 1),
        st.integers(-3, 3),
        st.integers(-3, 3),
    )
    def test_heisenberg_commutation(self, state: FockState, i: int, j: int, m: int, n: int) -> None:
        v = FockVector.from_state(state)
        lhs = apply_mode(A2, i, m, apply_mode(A2, j, n, v)) - apply_mode(A2, j, n, apply_mode(A2, i, m, v))
        expected = v.scale(m * A2.gram[i][j]) if m + n == 0 else FockVector.zero()
        self.assertEqual(lhs, expected)


class SpecializationTests(unittest.TestCase):
    def test_specialize_vector(self) -> None:
        v = heisenberg_state(A1, [(1, 0)], coefficient=Fraction(1, 2))
        images = specialize_vector(v, Ring.prime_field(3))
        self.assertEqual([value.value for value in images.values()], [2])
        with self.assertRaises(SpecializationError):
            specialize_vector(v, Ring.integers())


class ZFormTests(unittest.TestCase):
    def test_membership(self) -> None:
        point = (0,)
        self.assertTrue(integral_membership(A1, heisenberg_state(A1, [(1, 0)]), point, 1))
        self.assertFalse(integral_membership(A1, heisenberg_state(A1, [(1, 0)], coefficient=Fraction(1, 2)), point, 1))
        self.assertTrue(integral_membership(A1, apply_s(A1, (1,), 2, vacuum(A1)), point, 2))
        self.assertTrue(integral_membership(A1, FockVector.zero(), point, 2))

    def test_spanning_set_contains_the_lattice_vector(self) -> None:
        self.assertEqual(zform_spanning_set(A1, (1,), 1), [lattice_vector_state(A1, (1,))])
        self.assertEqual(zform_spanning_set(A1, (2,), 3), [])

    def test_small_pieces_are_saturated(self) -> None:
        for point, weight in (((0,), 2), ((1,), 2), ((0, 0), 1), ((1, 1), 2)):
            lattice = A1 if len(point) == 1 else A2
            with self.subTest(point=point, weight=weight):
                piece = zform_piece(lattice, point, weight)
                self.assertTrue(piece.saturated)
                self.assertEqual(piece.dimension, graded_piece_basis(lattice, point, weight).dimension)


if __name__ == "__main__":
    unittest.main()
