import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from coefficients import Ring, RingKind, SpecializationError, can_specialize, is_unit, mu2_elements, parse_ring, specialize

RINGS = [Ring.rationals(), Ring.integers(), Ring.prime_field(5), Ring.modular(8)]


class RingParsingTests(unittest.TestCase):
    def test_parse_ring_accepts_every_supported_token(self) -> None:
        self.assertEqual(parse_ring("Q"), Ring.rationals())
        self.assertEqual(parse_ring(" Z "), Ring.integers())
        self.assertEqual(parse_ring("Fp:7"), Ring.prime_field(7))
        self.assertEqual(parse_ring("Zn:12").kind, RingKind.MODULAR)
        self.assertEqual(parse_ring("Zn:12").token, "Zn:12")

    def test_parse_ring_rejects_bad_tokens(self) -> None:
        for token in ("R", "Fp:6", "Fp:x", "Zn:1", "Fp:"):
            with self.subTest(token=token):
                with self.assertRaises(ValueError):
                    parse_ring(token)


class RingArithmeticTests(unittest.TestCase):
    def test_mu2_elements(self) -> None:
        self.assertEqual(len(mu2_elements(Ring.rationals())), 2)
        self.assertEqual([x.value for x in mu2_elements(Ring.prime_field(2))], [1])
        self.assertEqual([x.value for x in mu2_elements(Ring.modular(8))], [1, 3, 5, 7])

    def test_units(self) -> None:
        z = Ring.integers()
        self.assertTrue(is_unit(z, z.from_int(-1)))
        self.assertFalse(is_unit(z, z.from_int(2)))
        f3 = Ring.prime_field(3)
        self.assertFalse(f3.from_int(3).is_unit)
        self.assertEqual(f3.from_int(2).inverse(), f3.from_int(2))
        with self.assertRaises(ValueError):
            is_unit(z, f3.one())

    def test_specialize(self) -> None:
        self.assertEqual(specialize(Ring.prime_field(5), Fraction(1, 2)).value, 3)
        self.assertEqual(specialize(Ring.integers(), 4).value, 4)
        with self.assertRaises(SpecializationError):
            specialize(Ring.integers(), Fraction(1, 2))
        self.assertFalse(can_specialize(Ring.prime_field(3), Fraction(2, 3)))
        self.assertTrue(can_specialize(Ring.modular(9), Fraction(1, 2)))

    def test_negative_powers_need_units(self) -> None:
        f7 = Ring.prime_field(7)
        self.assertEqual(f7.from_int(3) ** -1 * f7.from_int(3), f7.one())
        with self.assertRaises(ZeroDivisionError):
            Ring.modular(4).from_int(2) ** -1

    def test_residues_print_symmetrically(self) -> None:
        self.assertEqual(str(Ring.prime_field(5).from_int(-1)), "-1")

    @given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.sampled_from(RINGS))
    def test_ring_axioms(self, a: int, b: int, c: int, ring: Ring) -> None:
        x, y, z = ring.from_int(a), ring.from_int(b), ring.from_int(c)
        self.assertEqual(x * (y + z), x * y + x * z)
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x + y, y + x)
        self.assertEqual(x - x, ring.zero())

    @given(st.integers(-30, 30), st.integers(1, 30))
    def test_specialize_is_a_homomorphism_on_integers_mod_p(self, numerator: int, denominator: int) -> None:
        ring = Ring.prime_field(31)
        value = Fraction(numerator, denominator)
        if denominator % 31 == 0:
            return
        self.assertEqual(specialize(ring, value) * ring.from_int(value.denominator), ring.from_int(value.numerator))


if __name__ == "__main__":
    unittest.main()
