"""
Test certified root isolation.
"""

import random
import unittest
from fractions import Fraction

import pytest

from rectwind.exceptions import ConstantPolynomial, PreconditionViolated
from rectwind.isolation import IsolatingBox, Subdivision, count_in, isolate, root_bound
from rectwind.oracle import RootKind
from rectwind.poly import ComplexPoly, RealPoly
from rectwind.scalars import GaussianRational, I
from rectwind.winding import RationalFunction, Rectangle
from tests.factories import RootSpecFactory, reseed
from tests.utils import UNIT_SQUARE

X = RealPoly.identity()
Z = ComplexPoly.identity()
HALF = Fraction(1, 2)


@pytest.mark.parametrize(
    "poly, bound",
    [
        (Z ** 2 - 1, 2),
        (2 * Z - 1, Fraction(3, 2)),
        (Z ** 3 + (1 + I) * Z, 3),
        ((1 + I) * Z ** 2 - 4, 5),
        (X ** 2 - 2, 3),
    ],
)
def test_root_bound(poly, bound):
    """Test Cauchy's bound with rational moduli."""

    assert root_bound(poly) == bound


def test_root_bound_constant():
    """Test constants have no root bound."""

    with pytest.raises(ConstantPolynomial):
        root_bound(ComplexPoly.constant(3))


class IsolateExamplesTest(unittest.TestCase):
    """Test isolating the roots of small polynomials."""

    def assert_isolates(self, poly, roots, eps):
        """Assert the boxes hold exactly the given roots and are small."""

        boxes = isolate(poly, eps)
        self.assertEqual(sum(box.count for box in boxes), poly.degree)
        for box in boxes:
            self.assertLess(box.box.width, eps)
            self.assertLess(box.box.height, eps)
            inside = [root for root in roots if box.contains(root)]
            self.assertEqual(len(inside), box.count)
        for root in roots:
            self.assertEqual(len([box for box in boxes if box.contains(root)]), 1)
        return boxes

    def test_real_roots(self):
        """Test the roots of Z^2 - 1."""

        boxes = self.assert_isolates(Z ** 2 - 1, [GaussianRational(-1), GaussianRational(1)], Fraction(1, 4))
        self.assertEqual(len(boxes), 2)
        self.assertTrue(boxes[0].contains(-1))

    def test_imaginary_roots(self):
        """Test the roots of Z^2 + 1."""

        self.assert_isolates(Z ** 2 + 1, [I, -I], Fraction(1, 8))

    def test_double_root(self):
        """Test a double root lands in one box counted twice."""

        boxes = self.assert_isolates((Z - I) ** 2 * (Z + 1), [I, I, GaussianRational(-1)], Fraction(1, 8))
        self.assertEqual(sorted(box.count for box in boxes), [1, 2])

    def test_real_polynomial(self):
        """Test real polynomials are accepted."""

        boxes = isolate(X ** 2 - 2, Fraction(1, 16))
        self.assertEqual([box.count for box in boxes], [1, 1])
        for box in boxes:
            self.assertLess(box.box.y0, 0)
            self.assertGreater(box.box.y1, 0)

    def test_rational_function(self):
        """Test polynomial rational functions pass and others do not."""

        self.assertEqual(len(isolate(RationalFunction(Z - I), HALF)), 1)
        with self.assertRaises(PreconditionViolated):
            isolate(RationalFunction(1, Z), HALF)

    def test_bad_eps(self):
        """Test eps must be positive."""

        with self.assertRaises(PreconditionViolated):
            isolate(Z, 0)

    def test_boxes_disjoint(self):
        """Test nearby roots end up in disjoint closed boxes."""

        roots = [GaussianRational(0), GaussianRational(Fraction(1, 16)), Fraction(1, 16) * I]
        boxes = self.assert_isolates(ComplexPoly.from_roots(roots), roots, Fraction(1, 32))
        for index, first in enumerate(boxes):
            for second in boxes[index + 1 :]:
                a, b = first.box, second.box
                self.assertTrue(a.x1 < b.x0 or b.x1 < a.x0 or a.y1 < b.y0 or b.y1 < a.y0)


def test_isolate_random():
    """Test isolation of polynomials with known roots."""

    reseed(107)
    rng = random.Random(107)
    eps = Fraction(1, 64)
    for _ in range(50):
        roots = [RootSpecFactory(kind=RootKind.ZERO).location for _ in range(rng.randint(1, 6))]
        boxes = isolate(ComplexPoly.from_roots(roots), eps)
        assert sum(box.count for box in boxes) == len(roots)
        for box in boxes:
            assert box.box.width < eps and box.box.height < eps
            assert len([root for root in roots if box.contains(root)]) == box.count
        for root in roots:
            assert len([box for box in boxes if box.contains(root)]) == 1


class SubdivisionTest(unittest.TestCase):
    """Test the counting engine behind isolation."""

    def test_count_matches_W(self):
        """Test cached counts agree with the direct count."""

        poly = (Z - HALF - HALF * I) * (Z - 2) * (Z + I)
        engine = Subdivision(poly)
        rectangle = Rectangle(-1, 3, -2, 2)
        self.assertEqual(engine.count(rectangle), 3)
        for piece in rectangle.split(1, 0):
            self.assertEqual(engine.count(piece), count_in(poly, piece).value)
        self.assertGreater(engine.hits, 0)

    def test_segment_clear(self):
        """Test detecting roots on cut segments."""

        engine = Subdivision(Z ** 2 - 1)
        self.assertFalse(engine.segment_clear(GaussianRational(0), GaussianRational(1), -2, 2))
        self.assertFalse(engine.segment_clear(GaussianRational(0), GaussianRational(1), 1, 2))
        self.assertTrue(engine.segment_clear(GaussianRational(0), I, -2, 2))
        self.assertTrue(engine.segment_clear(GaussianRational(0, 1), GaussianRational(1), -2, 2))

    def test_cut_avoids_roots(self):
        """Test a horizontal cut through both roots is moved."""

        engine = Subdivision(Z ** 2 - 1)
        self.assertEqual(engine._horizontal_cut(Rectangle(-2, 2, -2, 2)), Fraction(4, 3))
        self.assertEqual(engine._vertical_cut(Rectangle(-2, 2, -2, 2)), 0)

    def test_shrink(self):
        """Test shrinking keeps the root inside."""

        engine = Subdivision(Z - Fraction(1, 8) - Fraction(1, 8) * I)
        box = engine.shrink(UNIT_SQUARE, 1)
        self.assertEqual(IsolatingBox(box, 1).contains(Fraction(1, 8) + Fraction(1, 8) * I), True)
        self.assertTrue(box.x0 > 0 and box.x1 < 1 and box.y0 > 0 and box.y1 < 1)


@pytest.mark.parametrize(
    "rectangle, expected",
    [
        (UNIT_SQUARE, Fraction(1, 4) + 1),
        (Rectangle(-1, 1, -1, HALF), 1 + Fraction(1, 2)),
        (Rectangle(2, 3, 2, 3), 0),
    ],
)
def test_count_in(rectangle, expected):
    """Test counting roots of a polynomial in rectangles."""

    poly = Z * (Z - HALF - HALF * I) * (Z - 1 - 2 * I)
    assert count_in(poly, rectangle) == expected
