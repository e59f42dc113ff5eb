import unittest
from fractions import Fraction

from autgrp import (
    ActionKind,
    AutAction,
    RootGroupElement,
    TorusCharacter,
    apply_action,
    apply_cover,
    apply_root_exp,
    apply_torus,
    divided_power_check,
    dual_root_scalar,
    fraction_key,
    generic_torus,
    identity_matrix,
    is_vertex_automorphism,
    main_theorem_orders,
    main_theorem_report,
    matrix_on_truncation,
    sign_character,
    tits_element,
    tits_group,
    two_torsion_characters,
    uncorrected_cover_action,
)
from autgrp.theorem import AUTOMORPHISM, INTERSECTION, NEGATIVE_CONTROL, OUTER, TITS_CONJUGATION
from coefficients import Ring
from cover import build_cocycle, cover_group, kernel_element, lift_orthogonal
from fock import FockVector, heisenberg_state, lattice_vector_state
from lattices import Lattice, load_lattice, reflection, roots
from vertex import SamplingPolicy, VertexAlgebra

A1 = Lattice.from_gram("A1", [[2]])
A2 = Lattice.from_gram("A2", [[2, -1], [-1, 2]])
QQ = Ring.rationals()


def e(lattice: Lattice, *point: int) -> FockVector:
    return lattice_vector_state(lattice, point)


class TorusTests(unittest.TestCase):
    def test_character_values(self) -> None:
        g = TorusCharacter.from_values(QQ, [2, 3])
        self.assertEqual(g.value((1, -1)).to_fraction(), Fraction(2, 3))
        self.assertEqual(g.precompose(((0, 1), (1, 0))).values_on_basis, (QQ.from_int(3), QQ.from_int(2)))
        with self.assertRaises(ValueError):
            TorusCharacter.from_values(Ring.integers(), [2])

    def test_apply_torus_scales_sectors(self) -> None:
        g = TorusCharacter.from_values(QQ, [3])
        v = e(A1, -1) + heisenberg_state(A1, [(1, 0)])
        self.assertEqual(apply_torus(g, v), e(A1, -1).scale(Fraction(1, 3)) + heisenberg_state(A1, [(1, 0)]))
        with self.assertRaises(ValueError):
            apply_torus(TorusCharacter.from_values(Ring.prime_field(5), [2]), v)

    def test_generic_torus_uses_primes(self) -> None:
        self.assertEqual([value.value for value in generic_torus(A2).values_on_basis], [2, 3])
        self.assertEqual([value.value for value in generic_torus(A2, offset=2).values_on_basis], [5, 7])
        self.assertEqual(len(two_torsion_characters(VertexAlgebra(A2))), 4)


class RootExponentialTests(unittest.TestCase):
    def test_exponential_on_the_opposite_root(self) -> None:
        algebra = VertexAlgebra(A1)
        image = apply_root_exp(RootGroupElement((1,), 1), e(A1, -1), algebra=algebra)
        self.assertEqual(image, e(A1, -1) + heisenberg_state(A1, [(1, 0)]) - e(A1, 1))

    def test_zero_parameter_and_non_roots(self) -> None:
        algebra = VertexAlgebra(A1)
        self.assertEqual(apply_root_exp(RootGroupElement((1,), 0), e(A1, -1), algebra=algebra), e(A1, -1))
        with self.assertRaises(ValueError):
            apply_root_exp(RootGroupElement((2,), 1), e(A1, -1), algebra=algebra)


class CoverActionTests(unittest.TestCase):
    def test_cover_action_on_a1(self) -> None:
        eps = build_cocycle(A1)
        flip = lift_orthogonal(QQ, eps, [[-1]], [-1])
        self.assertEqual(apply_cover(flip, e(A1, 1)), e(A1, -1).scale(-1))
        self.assertEqual(apply_cover(flip, heisenberg_state(A1, [(2, 0)])), heisenberg_state(A1, [(2, 0)]).scale(-1))

    def test_cover_action_needs_signs(self) -> None:
        ring = Ring.modular(8)
        phi = kernel_element(ring, build_cocycle(A1), [ring.from_int(3)])
        with self.assertRaises(ValueError):
            apply_cover(phi, e(A1, 1))

    def test_composite_applies_right_to_left(self) -> None:
        algebra = VertexAlgebra(A1)
        torus = AutAction.from_torus(TorusCharacter.from_values(QQ, [2]))
        raising = AutAction.from_root_exp(RootGroupElement((1,), 1))
        composite = AutAction.composite(torus, raising)
        expected = apply_action(torus, apply_action(raising, e(A1, -1), algebra=algebra), algebra=algebra)
        self.assertEqual(apply_action(composite, e(A1, -1), algebra=algebra), expected)

    def test_matrix_on_truncation(self) -> None:
        algebra = VertexAlgebra(A1)
        identity = AutAction.from_cover(lift_orthogonal(QQ, build_cocycle(A1), [[1]], [1]))
        matrix = matrix_on_truncation(identity, 1, algebra=algebra)
        self.assertEqual(fraction_key(matrix), fraction_key(identity_matrix(4)))
        with self.assertRaises(ValueError):
            matrix_on_truncation(identity, 0, algebra=algebra)


class AutomorphismCheckTests(unittest.TestCase):
    def setUp(self) -> None:
        self.algebra = VertexAlgebra(A1)
        self.policy = SamplingPolicy()

    def test_constructed_actions_are_automorphisms(self) -> None:
        actions = [
            AutAction.from_torus(generic_torus(A1)),
            AutAction.from_root_exp(RootGroupElement((1,), 1)),
            AutAction.from_root_exp(RootGroupElement((-1,), Fraction(-1, 2))),
            tits_element(self.algebra, (1,)),
        ]
        actions.extend(AutAction.from_cover(element) for element in cover_group(QQ, A1).elements)
        for action in actions:
            with self.subTest(action=action.label):
                verdict = is_vertex_automorphism(action, algebra=self.algebra, max_weight=1, policy=self.policy)
                self.assertTrue(verdict.holds, verdict.counterexample)
                self.assertEqual(verdict.instances, 64)

    def test_sector_flip_is_rejected(self) -> None:
        identity_lift = lift_orthogonal(QQ, build_cocycle(A1), [[1]], [1])
        verdict = is_vertex_automorphism(
            AutAction.sector_flip(identity_lift, (1,)), algebra=self.algebra, max_weight=1, policy=self.policy
        )
        self.assertFalse(verdict.holds)
        self.assertIsNotNone(verdict.counterexample)

    def test_uncorrected_lift_is_rejected(self) -> None:
        algebra = VertexAlgebra(A2)
        control = uncorrected_cover_action(algebra)
        self.assertIs(control.kind, ActionKind.COVER)
        self.assertFalse(control.cover.corrected)
        genuine = lift_orthogonal(QQ, algebra.cocycle, control.cover.h, [1, 1])
        self.assertEqual(control.cover.eta((1, 1)), -genuine.eta((1, 1)))
        self.assertEqual(control.cover.eta((1, 0)), genuine.eta((1, 0)))
        self.assertTrue(is_vertex_automorphism(AutAction.from_cover(genuine), algebra=algebra, max_weight=1).holds)
        verdict = is_vertex_automorphism(control, algebra=algebra, max_weight=1, policy=SamplingPolicy())
        self.assertFalse(verdict.holds)
        self.assertIn("phi(u_n v) - phi(u)_n phi(v)", verdict.counterexample)

    def test_control_without_cocycle_correction_falls_back_to_a_sector_flip(self) -> None:
        for lattice in (A1, load_lattice("A1A1")):
            with self.subTest(lattice=lattice.name):
                control = uncorrected_cover_action(VertexAlgebra(lattice))
                self.assertIs(control.kind, ActionKind.SECTOR_FLIP)
                self.assertEqual(control.sector, lattice.basis_vector(0))

    def test_divided_powers_stay_integral(self) -> None:
        summary = divided_power_check(self.algebra, max_weight=2, policy=self.policy)
        self.assertEqual(summary.verdict, "pass", summary.counterexample)
        self.assertGreater(summary.instances, 0)


class TitsGroupTests(unittest.TestCase):
    def test_dual_root_scalar_matches_the_cocycle(self) -> None:
        algebra = VertexAlgebra(A2)
        for root in ((1, 0), (0, 1), (1, 1)):
            negative = tuple(-entry for entry in root)
            self.assertEqual(dual_root_scalar(algebra, root), algebra.cocycle(root, negative))

    def test_square_is_the_sign_character(self) -> None:
        algebra = VertexAlgebra(A2)
        for root in ((1, 0), (1, 1), (0, -1)):
            n = matrix_on_truncation(tits_element(algebra, root), 1, algebra=algebra)
            signs = matrix_on_truncation(AutAction.from_torus(sign_character(algebra, root)), 1, algebra=algebra)
            self.assertEqual(fraction_key(n.dot(n)), fraction_key(signs))
            self.assertNotEqual(fraction_key(n.dot(n)), fraction_key(identity_matrix(n.shape[0])))

    def test_tits_group_orders(self) -> None:
        self.assertEqual(tits_group(VertexAlgebra(A1), 1).order, 4)
        self.assertEqual(tits_group(VertexAlgebra(A2), 1).order, 24)
        self.assertEqual(tits_group(VertexAlgebra(load_lattice("A1A1")), 1).order, 16)

    def test_orders_on_a2(self) -> None:
        orders = main_theorem_orders(VertexAlgebra(A2), truncation=1)
        self.assertEqual(orders, {"cover_matrix_order": 48, "tits_order": 24})

    def test_conjugation_by_tits_elements_reflects_the_torus(self) -> None:
        algebra = VertexAlgebra(A2)
        torus = generic_torus(A2)
        torus_matrix = matrix_on_truncation(AutAction.from_torus(torus), 1, algebra=algebra)
        for root in roots(A2):
            with self.subTest(root=root):
                n = matrix_on_truncation(tits_element(algebra, root), 1, algebra=algebra)
                n_inverse = n.dot(n).dot(n)
                self.assertEqual(fraction_key(n.dot(n_inverse)), fraction_key(identity_matrix(n.shape[0])))
                s_alpha = tuple(tuple(int(entry) for entry in row) for row in reflection(A2, root))
                expected = matrix_on_truncation(AutAction.from_torus(torus.precompose(s_alpha)), 1, algebra=algebra)
                conjugated = n.dot(torus_matrix).dot(n_inverse)
                self.assertEqual(fraction_key(conjugated), fraction_key(expected))
                self.assertNotEqual(fraction_key(conjugated), fraction_key(torus_matrix))


class MainTheoremTests(unittest.TestCase):
    def assert_all_pass(self, report) -> None:
        failing = [(check.name, check.counterexample) for check in report.checks if check.verdict != "pass"]
        self.assertEqual(failing, [])
        self.assertTrue(report.passed)

    def test_report_on_a1(self) -> None:
        report = main_theorem_report(VertexAlgebra(A1), truncation=1, policy=SamplingPolicy())
        self.assert_all_pass(report)
        data = report.data
        self.assertEqual((data["weyl_order"], data["orthogonal_order"], data["outer_order"]), (2, 2, 1))
        self.assertEqual((data["cover_order"], data["cover_matrix_order"], data["tits_order"]), (4, 4, 4))
        self.assertEqual(data["quotient_order"], "1")
        self.assertEqual(data["cover_kernel_order_f2"], 1)
        self.assertEqual(data["orders_at_next_truncation"], {"cover_matrix_order": 4, "tits_order": 4})

    def test_automorphisms_are_checked_up_to_weight_two_by_default(self) -> None:
        report = main_theorem_report(VertexAlgebra(A1), truncation=1, policy=SamplingPolicy(), stability=False)
        self.assertEqual(report.data["automorphism_weight"], 2)
        checks = {check.name: check for check in report.checks}
        automorphism = checks[AUTOMORPHISM]
        self.assertEqual(automorphism.details["max_weight"], 2)
        self.assertEqual(automorphism.details["actions"], 12)
        self.assertEqual(automorphism.instances, 12 * 8 * 6 * 8)
        self.assertEqual(checks[NEGATIVE_CONTROL].verdict, "pass")
        self.assertEqual(checks[NEGATIVE_CONTROL].details["control"], "sector_flip((1,))")
        with self.assertRaisesRegex(ValueError, "automorphism_weight"):
            main_theorem_report(VertexAlgebra(A1), automorphism_weight=0)

    def test_report_on_a2(self) -> None:
        report = main_theorem_report(
            VertexAlgebra(A2), truncation=1, policy=SamplingPolicy(), stability=False, automorphism_weight=1
        )
        self.assert_all_pass(report)
        data = report.data
        self.assertEqual((data["weyl_order"], data["orthogonal_order"], data["outer_order"]), (6, 12, 2))
        self.assertEqual((data["cover_order"], data["cover_matrix_order"], data["tits_order"]), (48, 48, 24))
        self.assertEqual(data["quotient_order"], "2")
        checks = {check.name: check for check in report.checks}
        for name in (INTERSECTION, OUTER, TITS_CONJUGATION):
            self.assertEqual(checks[name].verdict, "pass")
        self.assertTrue(checks[NEGATIVE_CONTROL].details["control"].startswith("uncorrected_lift"))

    def test_report_on_a1a1(self) -> None:
        report = main_theorem_report(
            VertexAlgebra(load_lattice("A1A1")), truncation=1, policy=SamplingPolicy(), stability=False, automorphism_weight=1
        )
        self.assert_all_pass(report)
        data = report.data
        self.assertEqual((data["weyl_order"], data["orthogonal_order"], data["outer_order"]), (4, 8, 2))
        self.assertEqual((data["cover_order"], data["cover_matrix_order"], data["tits_order"]), (32, 32, 16))
        self.assertEqual(data["quotient_order"], "2")
        self.assertEqual(data["cover_kernel_order"], 4)

    def test_ring_selects_mu2(self) -> None:
        algebra = VertexAlgebra(A1)
        report = main_theorem_report(
            algebra, truncation=1, policy=SamplingPolicy(), stability=False, automorphism_weight=1, ring=Ring.prime_field(3)
        )
        self.assert_all_pass(report)
        self.assertEqual(report.data["ring"], str(Ring.prime_field(3)))
        self.assertEqual(report.data["cover_order"], 4)
        for ring in (Ring.prime_field(2), Ring.modular(8)):
            with self.subTest(ring=str(ring)):
                with self.assertRaisesRegex(ValueError, "mu2"):
                    main_theorem_report(algebra, ring=ring)


if __name__ == "__main__":
    unittest.main()
