#!/usr/bin/env python3

import random
from fractions import Fraction

from detpoly.exceptions import CharacteristicZeroError, DivisionByZero, MixedFieldError, NotPrime
from detpoly.field import FieldElement, FieldSpec, field_arith, field_from_characteristic, frobenius_root

from .base_tmpl import GF2, GF5, GF7, QQ, BaseTmpl


class TestFieldSpec(BaseTmpl):
    def test_rationals(self):
        a, b = QQ.element(Fraction(1, 2)), QQ.element(Fraction(1, 3))
        self.assertEqual(field_arith(a, b, "add"), QQ.element(Fraction(5, 6)))
        self.assertEqual(field_arith(a, b, "div"), QQ.element(Fraction(3, 2)))
        self.assertEqual(str(QQ.element("-4/6")), "-2/3")

    def test_prime_field(self):
        self.assertEqual(field_arith(GF7.element(2), GF7.element(4), "mul"), GF7.element(1))
        self.assertEqual(field_arith(GF7.element(2), GF7.element(4), "sub"), GF7.element(5))
        self.assertEqual(GF7.element(-1).value, 6)
        # 3/2 = 3 * 4 in F_7
        self.assertEqual(GF7.convert("3/2"), 5)

    def test_field_from_characteristic(self):
        self.assertEqual(field_from_characteristic(0), QQ)
        self.assertEqual(field_from_characteristic(5), GF5)
        self.assertRaises(NotPrime, field_from_characteristic, 4)
        self.assertRaises(NotPrime, FieldSpec.prime_field, 1)
        self.assertRaises(NotPrime, FieldSpec.prime_field, 2**31 + 11)
        self.assertEqual(GF5.characteristic, 5)
        self.assertEqual(QQ.characteristic, 0)

    def test_errors(self):
        self.assertRaises(DivisionByZero, field_arith, GF5.element(1), GF5.element(0), "div")
        self.assertRaises(DivisionByZero, QQ.element(0).inverse)
        self.assertRaises(MixedFieldError, field_arith, GF5.element(1), GF7.element(1), "add")
        self.assertRaises(MixedFieldError, GF5.convert, GF7.element(3))
        self.assertRaises(DivisionByZero, GF5.convert, Fraction(1, 5))
        self.assertRaises(ValueError, field_arith, GF5.element(1), GF5.element(1), "pow")

    def test_canonical_representatives(self):
        self.assertRaises(ValueError, FieldElement, GF7, 9)
        self.assertRaises(ValueError, FieldElement, QQ, 3)
        self.assertTrue(GF7.is_canonical(6))
        self.assertFalse(GF7.is_canonical(7))
        self.assertFalse(GF7.is_canonical(True))

    def test_axioms(self):
        rng = random.Random(11)
        for spec in (QQ, GF2, GF7):
            for _ in range(50):
                if spec.is_rationals:
                    x, y, z = (spec.element(Fraction(rng.randint(-9, 9), rng.randint(1, 9))) for _ in range(3))
                else:
                    x, y, z = (spec.element(rng.randrange(spec.modulus)) for _ in range(3))
                self.assertEqual((x + y) + z, x + (y + z))
                self.assertEqual((x * y) * z, x * (y * z))
                self.assertEqual(x * (y + z), x * y + x * z)
                self.assertEqual(x - x, spec.element(0))
                if x:
                    self.assertEqual(x * x.inverse(), spec.element(1))

    def test_frobenius_root(self):
        for spec in (GF2, GF5, GF7):
            for c in range(spec.modulus):
                for nu in range(5):
                    r = frobenius_root(spec.element(c), nu)
                    self.assertEqual(r ** (spec.modulus**nu), spec.element(c))
        self.assertRaises(CharacteristicZeroError, frobenius_root, QQ.element(1), 1)
        self.assertRaises(ValueError, frobenius_root, GF5.element(1), -1)
