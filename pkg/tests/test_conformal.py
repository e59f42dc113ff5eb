import unittest
from fractions import Fraction

from coefficients import Ring, parse_ring
from fock import FockState
from lattices import Lattice
from vertex import VertexAlgebra, conformal_vector, omega_vector, virasoro_check, virasoro_mode, zero_mode_check
from vertex.conformal import ANCHORS as CONFORMAL_ANCHORS
from vertex.conformal import HEISENBERG_VIRASORO, L0_GRADING, L_MINUS_ONE, VIRASORO_BRACKET
from vertex.models import ConformalData, ConformalRefusal

A1 = Lattice.from_gram("A1", [[2]])
A2 = Lattice.from_gram("A2", [[2, -1], [-1, 2]])


class ConformalVectorTests(unittest.TestCase):
    def test_omega_of_a1(self) -> None:
        omega = omega_vector(A1)
        self.assertEqual(omega.coefficient(FockState((0,), ((1, 0), (1, 0)))), Fraction(1, 4))
        self.assertEqual(len(omega), 1)

    def test_omega_of_a2_uses_the_inverse_gram(self) -> None:
        omega = omega_vector(A2)
        self.assertEqual(omega.coefficient(FockState((0, 0), ((1, 0), (1, 0)))), Fraction(1, 3))
        self.assertEqual(omega.coefficient(FockState((0, 0), ((1, 0), (1, 1)))), Fraction(1, 3))
        self.assertEqual(omega.coefficient(FockState((0, 0), ((1, 1), (1, 1)))), Fraction(1, 3))

    def test_rational_data(self) -> None:
        data = conformal_vector(A1, Ring.rationals())
        self.assertIsInstance(data, ConformalData)
        self.assertEqual(data.half_charge_rational, Fraction(1, 2))
        self.assertTrue(data.omega_in_ring)

    def test_a2_is_refused_only_in_characteristic_three(self) -> None:
        refusal = conformal_vector(A2, parse_ring("Fp:3"))
        self.assertIsInstance(refusal, ConformalRefusal)
        self.assertEqual(refusal.determinant, 3)
        for token in ("Fp:2", "Fp:5", "Fp:7"):
            with self.subTest(ring=token):
                data = conformal_vector(A2, parse_ring(token))
                self.assertIsInstance(data, ConformalData)
                self.assertTrue(data.omega_in_ring)

    def test_a1_over_integers_lists_failing_entries(self) -> None:
        integers = Ring.integers()
        refusal = conformal_vector(A1, integers)
        self.assertIsInstance(refusal, ConformalRefusal)
        self.assertEqual(refusal.failures, (f"(G^-1)_(1,1) = 1/2 is not in 2{integers}",))


class VirasoroTests(unittest.TestCase):
    def test_zero_modes_kill_omega(self) -> None:
        for lattice in (A1, A2):
            with self.subTest(lattice=lattice.name):
                summary = zero_mode_check(VertexAlgebra(lattice), omega_vector(lattice))
                self.assertEqual((summary.instances, summary.verdict), (lattice.rank, "pass"))

    def test_l0_is_the_weight(self) -> None:
        algebra = VertexAlgebra(A2)
        omega = omega_vector(A2)
        v = algebra.vacuum()
        self.assertFalse(virasoro_mode(algebra, omega, 0, v))
        self.assertEqual(virasoro_mode(algebra, omega, -2, v), omega)

    def test_relations_hold_on_a1(self) -> None:
        summaries = virasoro_check(VertexAlgebra(A1), Ring.rationals(), max_mode=1, max_weight=1)
        self.assertEqual(len(summaries), 4)
        for summary in summaries:
            with self.subTest(check=summary.name):
                self.assertEqual(summary.verdict, "pass", summary.counterexample)
                self.assertGreater(summary.instances, 0)

    def test_relations_hold_on_a2_with_central_terms(self) -> None:
        summaries = virasoro_check(VertexAlgebra(A2), Ring.rationals(), max_mode=2, max_weight=3)
        self.assertEqual([summary.name for summary in summaries], [VIRASORO_BRACKET, L0_GRADING, L_MINUS_ONE, HEISENBERG_VIRASORO])
        for summary in summaries:
            with self.subTest(check=summary.name):
                self.assertEqual(summary.verdict, "pass", summary.counterexample)
                self.assertEqual(summary.anchor, CONFORMAL_ANCHORS[summary.name])
                self.assertGreater(summary.instances, 0)

    def test_relations_hold_on_a1_up_to_weight_three(self) -> None:
        summaries = virasoro_check(VertexAlgebra(A1), parse_ring("Fp:5"), max_mode=2, max_weight=3)
        for summary in summaries:
            with self.subTest(check=summary.name):
                self.assertEqual(summary.verdict, "pass", summary.counterexample)

    def test_refused_over_integers(self) -> None:
        summaries = virasoro_check(VertexAlgebra(A1), Ring.integers(), max_mode=1, max_weight=1)
        self.assertEqual({summary.verdict for summary in summaries}, {"refused"})
        self.assertTrue(all(summary.instances == 0 for summary in summaries))


if __name__ == "__main__":
    unittest.main()
