"""
Test utility functions.
"""

import unittest
from fractions import Fraction

import pytest

from rectwind.utils import VAL_INFINITY, as_half_int, as_quarter_int, memoizedproperty, sign


class MemoizedTest(unittest.TestCase):
    """Test memoization functions."""

    def test_memoizedproperty(self):
        """Test memoizedproperty only computes the value once."""

        class Counter(object):
            """A class with a memoized property."""

            calls = 0

            @memoizedproperty
            def value(self):
                """The memoized value."""
                self.calls += 1
                return self.calls

        counter = Counter()
        self.assertEqual(counter.value, 1)
        self.assertEqual(counter.value, 1)
        self.assertEqual(counter.calls, 1)

        self.assertEqual(Counter().value, 1)
        self.assertEqual(Counter.value.__doc__, "The memoized value.")


class FractionChecksTest(unittest.TestCase):
    """Test the checks for half and quarter integers."""

    def test_half_int(self):
        """Test multiples of one half pass and others fail."""

        self.assertEqual(as_half_int(Fraction(-3, 2)), Fraction(-3, 2))
        self.assertEqual(as_half_int(2), 2)
        with self.assertRaises(ValueError):
            as_half_int(Fraction(1, 4))

    def test_quarter_int(self):
        """Test multiples of one quarter pass and others fail."""

        self.assertEqual(as_quarter_int(Fraction(3, 4)), Fraction(3, 4))
        self.assertEqual(as_quarter_int(Fraction(1, 2)), Fraction(1, 2))
        with self.assertRaises(ValueError):
            as_quarter_int(Fraction(1, 8))


@pytest.mark.parametrize("value, expected", [(Fraction(-1, 3), -1), (0, 0), (Fraction(0), 0), (5, 1)])
def test_sign(value, expected):
    """Test the sign of exact values."""

    assert sign(value) == expected


def test_val_infinity():
    """Test the valuation of zero compares above every integer."""

    assert VAL_INFINITY > 10 ** 6
    assert -VAL_INFINITY < 0
