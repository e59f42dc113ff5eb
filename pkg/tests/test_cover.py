import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from coefficients import Ring
from cover import (
    TwistedGroupElement,
    apply_to_twisted,
    build_cocycle,
    commutator_sign,
    compose,
    cover_group,
    identity,
    inverse,
    kernel_element,
    lift_orthogonal,
    twisted_multiply,
    uncorrected_lift,
)
from lattices import Lattice, ResourceCapExceeded, load_lattice

A1 = Lattice.from_gram("A1", [[2]])
A2 = Lattice.from_gram("A2", [[2, -1], [-1, 2]])
D4 = load_lattice("D4")
QQ = Ring.rationals()

points = st.integers(-4, 4)


def vectors(rank: int) -> st.SearchStrategy:
    return st.tuples(*([points] * rank))


class CocycleTests(unittest.TestCase):
    def test_basis_table(self) -> None:
        self.assertEqual(build_cocycle(A2).eps_on_basis, ((1, 1), (-1, 1)))
        self.assertEqual(build_cocycle(A1).basis_order, (0,))

    def test_known_values(self) -> None:
        a1 = build_cocycle(A1)
        self.assertEqual(a1((1,), (1,)), 1)
        self.assertEqual(commutator_sign(a1, (1,), (-1,)), 1)
        self.assertEqual(commutator_sign(build_cocycle(A2), (1, 0), (0, 1)), -1)

    @given(vectors(4), vectors(4), vectors(4))
    def test_bimultiplicative_on_d4(self, a: tuple, b: tuple, c: tuple) -> None:
        eps = build_cocycle(D4)
        ab = tuple(x + y for x, y in zip(a, b))
        self.assertEqual(eps(ab, c), eps(a, c) * eps(b, c))
        self.assertEqual(eps(c, ab), eps(c, a) * eps(c, b))

    @given(vectors(4), vectors(4))
    def test_commutator_is_parity_of_inner_product(self, a: tuple, b: tuple) -> None:
        eps = build_cocycle(D4)
        self.assertEqual(commutator_sign(eps, a, b), (-1) ** (D4.inner(a, b) % 2))


class TwistedGroupRingTests(unittest.TestCase):
    def test_unit_and_product(self) -> None:
        eps = build_cocycle(A1)
        one = TwistedGroupElement.basis(QQ, (0,))
        x = TwistedGroupElement.basis(QQ, (1,), 3) + TwistedGroupElement.basis(QQ, (-2,), -1)
        self.assertEqual(twisted_multiply(QQ, eps, one, x), x)
        product = twisted_multiply(QQ, eps, TwistedGroupElement.basis(QQ, (1,)), TwistedGroupElement.basis(QQ, (-1,)))
        self.assertEqual(product, TwistedGroupElement.basis(QQ, (0,), eps((1,), (-1,))))

    def test_zero_terms_are_dropped(self) -> None:
        x = TwistedGroupElement.basis(QQ, (1,))
        self.assertEqual((x + -x).terms, {})

    def test_a2_products_do_not_commute(self) -> None:
        eps = build_cocycle(A2)
        x = TwistedGroupElement.basis(QQ, (1, 0))
        y = TwistedGroupElement.basis(QQ, (0, 1))
        self.assertEqual(twisted_multiply(QQ, eps, x, y), -twisted_multiply(QQ, eps, y, x))


class CoverAutomorphismTests(unittest.TestCase):
    def test_lift_validation(self) -> None:
        eps = build_cocycle(A2)
        with self.assertRaisesRegex(ValueError, "does not preserve"):
            lift_orthogonal(QQ, eps, [[1, 1], [0, 1]], [1, 1])
        with self.assertRaisesRegex(ValueError, "square root of unity"):
            lift_orthogonal(QQ, eps, np.eye(2, dtype=np.int64), [1, 2])
        with self.assertRaisesRegex(ValueError, "shape"):
            lift_orthogonal(QQ, eps, [[1]], [1])
        with self.assertRaisesRegex(ValueError, "eta values"):
            lift_orthogonal(QQ, eps, np.eye(2, dtype=np.int64), [1])

    def test_uncorrected_lift_drops_the_cocycle_signs(self) -> None:
        eps = build_cocycle(A2)
        swap = [[0, 1], [1, 0]]
        genuine = lift_orthogonal(QQ, eps, swap, [1, 1])
        plain = uncorrected_lift(QQ, eps, swap, [1, 1])
        self.assertTrue(genuine.corrected)
        self.assertFalse(plain.corrected)
        self.assertFalse(genuine.has_trivial_correction)
        self.assertTrue(lift_orthogonal(QQ, eps, np.eye(2, dtype=np.int64), [1, 1]).has_trivial_correction)
        self.assertEqual(genuine.eta((1, 1)), QQ.from_int(-1))
        self.assertEqual(plain.eta((1, 1)), QQ.one())
        self.assertEqual(plain.eta((1, 0)), genuine.eta((1, 0)))

    def test_kernel_element_is_a_character(self) -> None:
        element = kernel_element(QQ, build_cocycle(A1), [-1])
        self.assertEqual(element.eta((1,)), QQ.from_int(-1))
        self.assertEqual(element.eta((2,)), QQ.one())
        self.assertEqual(element.eta((-3,)), QQ.from_int(-1))
        self.assertTrue(element.is_kernel_element)
        self.assertFalse(element.is_identity)
        self.assertTrue(identity(QQ, build_cocycle(A1)).is_identity)

    def test_cover_group_orders(self) -> None:
        for lattice, order in ((A1, 4), (A2, 48), (load_lattice("A1A1"), 32)):
            with self.subTest(lattice=lattice.name):
                group = cover_group(QQ, lattice)
                self.assertEqual(group.order, order)
                self.assertEqual(len(group.kernel), 2**lattice.rank)
                self.assertTrue(group.is_exact)

    def test_kernel_collapses_in_characteristic_two(self) -> None:
        group = cover_group(Ring.prime_field(2), A2)
        self.assertEqual(len(group.kernel), 1)
        self.assertEqual(group.order, 12)
        self.assertTrue(group.is_exact)

    def test_cover_group_cap(self) -> None:
        with self.assertRaises(ResourceCapExceeded):
            cover_group(QQ, A2, cap=20)

    def test_inverse_and_composition(self) -> None:
        group = cover_group(QQ, A2)
        keys = {element.key for element in group.elements}
        for f in group.elements:
            self.assertTrue(compose(QQ, f, inverse(QQ, f)).is_identity)
            self.assertTrue(compose(QQ, inverse(QQ, f), f).is_identity)
        for f in group.elements[:8]:
            for g in group.elements:
                self.assertIn(compose(QQ, f, g).key, keys)

    def test_compose_rejects_mixed_lattices(self) -> None:
        with self.assertRaises(ValueError):
            compose(QQ, identity(QQ, build_cocycle(A1)), identity(QQ, build_cocycle(A2)))

    @settings(max_examples=50)
    @given(st.integers(0, 47), vectors(2), vectors(2))
    def test_action_is_multiplicative(self, index: int, a: tuple, b: tuple) -> None:
        eps = build_cocycle(A2)
        f = cover_group(QQ, A2).elements[index]
        x = TwistedGroupElement.basis(QQ, a)
        y = TwistedGroupElement.basis(QQ, b)
        self.assertEqual(
            apply_to_twisted(f, twisted_multiply(QQ, eps, x, y)),
            twisted_multiply(QQ, eps, apply_to_twisted(f, x), apply_to_twisted(f, y)),
        )


if __name__ == "__main__":
    unittest.main()
