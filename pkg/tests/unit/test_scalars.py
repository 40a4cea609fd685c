"""
Test exact scalars.
"""

import random
import unittest
from fractions import Fraction
from math import gcd

import pytest

from rectwind.exceptions import DivisionByZero
from rectwind.scalars import GaussianRational, I, Rational, conj, div, to_gaussian, to_rational
from tests.utils import random_gaussian, random_rational


class GaussianRationalTest(unittest.TestCase):
    """Test Gaussian rational arithmetic."""

    def test_arithmetic(self):
        """Test the field operations."""

        a = GaussianRational(1, 2)
        b = GaussianRational(Fraction(1, 2), -1)

        self.assertEqual(a + b, GaussianRational(Fraction(3, 2), 1))
        self.assertEqual(a - b, GaussianRational(Fraction(1, 2), 3))
        self.assertEqual(a * b, GaussianRational(Fraction(5, 2), 0))
        self.assertEqual(a / a, 1)
        self.assertEqual((a / b) * b, a)
        self.assertEqual(I * I, -1)
        self.assertEqual(a ** -1, 1 / a)
        self.assertEqual(a ** 0, 1)

    def test_mixed_operands(self):
        """Test arithmetic with ints and Fractions on either side."""

        a = GaussianRational(1, 1)
        self.assertEqual(a + 1, GaussianRational(2, 1))
        self.assertEqual(1 - a, GaussianRational(0, -1))
        self.assertEqual(Fraction(1, 2) * a, GaussianRational(Fraction(1, 2), Fraction(1, 2)))
        self.assertEqual(2 / a, GaussianRational(1, -1))

    def test_division_by_zero(self):
        """Test dividing by zero raises a rectwind error."""

        with self.assertRaises(DivisionByZero):
            GaussianRational(1, 1) / 0
        with self.assertRaises(DivisionByZero):
            GaussianRational(1, 1) / GaussianRational(0)
        with self.assertRaises(DivisionByZero):
            1 / GaussianRational(0)

    def test_checked_division(self):
        """Test div raises a rectwind error for every kind of zero divisor."""

        self.assertEqual(div(Rational(1, 2), Rational(2, 3)), Rational(3, 4))
        self.assertEqual(div(1, 1 + I), GaussianRational(Fraction(1, 2), Fraction(-1, 2)))
        quotient = div(GaussianRational(2, 1), GaussianRational(2, -1))
        self.assertEqual(quotient, GaussianRational(Fraction(3, 5), Fraction(4, 5)))

        for divisor in (0, Rational(0), GaussianRational(0)):
            with self.assertRaises(DivisionByZero):
                div(Rational(1), divisor)
            with self.assertRaises(DivisionByZero):
                div(I, divisor)
        with self.assertRaises(ZeroDivisionError):
            div(Rational(1), Rational(0))

    def test_real_values_hash_like_fractions(self):
        """Test real Gaussian rationals are interchangeable with Fractions."""

        self.assertEqual(GaussianRational(Fraction(3, 4)), Fraction(3, 4))
        self.assertEqual(hash(GaussianRational(Fraction(3, 4))), hash(Fraction(3, 4)))
        self.assertEqual(len({GaussianRational(2), 2, Fraction(2)}), 1)

    def test_conj_and_norm(self):
        """Test conjugation and the squared modulus."""

        a = GaussianRational(3, -4)
        self.assertEqual(a.conj(), GaussianRational(3, 4))
        self.assertEqual(a.norm(), 25)
        self.assertEqual(a * a.conj(), 25)
        self.assertEqual(conj(Fraction(1, 3)), Fraction(1, 3))
        self.assertEqual(conj(a), a.conj())

    def test_bool(self):
        """Test only zero is falsy."""

        self.assertFalse(GaussianRational(0, 0))
        self.assertTrue(GaussianRational(0, 1))
        self.assertTrue(GaussianRational(-1, 0))

    def test_complex(self):
        """Test conversion to a float complex."""

        self.assertEqual(complex(GaussianRational(Fraction(1, 2), -2)), complex(0.5, -2.0))


@pytest.mark.parametrize(
    "value, text",
    [
        (GaussianRational(0), "0"),
        (GaussianRational(Fraction(-1, 2)), "-1/2"),
        (I, "i"),
        (-I, "-i"),
        (GaussianRational(0, Fraction(2, 3)), "2/3i"),
        (GaussianRational(1, 1), "1+i"),
        (GaussianRational(2, -3), "2-3i"),
    ],
)
def test_str(value, text):
    """Test the text form of Gaussian rationals."""

    assert str(value) == text


def test_coercion():
    """Test coercing scalars."""

    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(GaussianRational(5)) == 5
    assert to_gaussian(Fraction(1, 3)) == GaussianRational(Fraction(1, 3))
    assert to_gaussian(I) is I

    with pytest.raises(ValueError):
        to_rational(I)


class ScalarPropertiesTest(unittest.TestCase):
    """Test algebraic laws on random scalars."""

    def test_canonical_form(self):
        """Test rationals are reduced with a positive denominator."""

        rng = random.Random(1)
        for _ in range(200):
            p, q = rng.randint(-1000, 1000), rng.choice([-1, 1]) * rng.randint(1, 1000)
            value = Rational(p, q)
            self.assertGreater(value.denominator, 0)
            self.assertEqual(gcd(value.numerator, value.denominator), 1)
            self.assertEqual(value * q, p)

            gaussian = GaussianRational(Rational(q, 7), value)
            for part in (gaussian.re, gaussian.im):
                self.assertGreater(part.denominator, 0)
                self.assertEqual(gcd(part.numerator, part.denominator), 1)

    def test_field_axioms(self):
        """Test associativity, distributivity and inverses on random triples."""

        rng = random.Random(2)
        for _ in range(200):
            a, b, c = random_gaussian(rng), random_gaussian(rng), random_gaussian(rng)
            r = random_rational(rng)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual((a + r) * c, a * c + r * c)
            self.assertEqual(a - a, 0)
            if b:
                self.assertEqual(div(a, b) * b, a)
                self.assertEqual(b * div(1, b), 1)

    def test_conj_is_involutive_automorphism(self):
        """Test conj reverses itself and respects sums and products."""

        rng = random.Random(3)
        for _ in range(200):
            a, b = random_gaussian(rng), random_gaussian(rng)
            self.assertEqual(conj(conj(a)), a)
            self.assertEqual(conj(a * b), conj(a) * conj(b))
            self.assertEqual(conj(a + b), conj(a) + conj(b))
            self.assertEqual(a * conj(a), a.norm())
