"""
Test the auxiliary product formula and the additivity defect of w.
"""

import random
import unittest
from fractions import Fraction

from rectwind.cauchy import PolyPair, ind_interval, var_ab
from rectwind.exceptions import PreconditionViolated
from rectwind.poly import ComplexPoly, RealPoly
from rectwind.product import (
    A_BAD,
    B_BAD,
    BOTH_BAD,
    NEITHER_BAD,
    actual_defect,
    additivity_defect,
    aux_product_sides,
    bad_number_report,
)
from rectwind.scalars import GaussianRational, I
from rectwind.winding import RationalFunction
from tests.utils import UNIT_SQUARE, random_rational, random_real_poly

X = RealPoly.identity()
Z = ComplexPoly.identity()
HALF = Fraction(1, 2)

POINTS = (Fraction(0), Fraction(1, 2), Fraction(1))


class BadNumberTest(unittest.TestCase):
    """Test recognising bad numbers."""

    def test_bad(self):
        """Test poles of equal order whose principal parts cancel."""

        report = bad_number_report(1, X, X - 1, X, 0)
        self.assertTrue(report.is_bad)
        self.assertEqual((report.val_pq, report.val_rs, report.val_cross), (-1, -1, 0))

    def test_not_bad(self):
        """Test poles that reinforce each other, and regular points."""

        self.assertFalse(bad_number_report(1, X, 1, X, 0).is_bad)
        self.assertFalse(bad_number_report(1, X, X - 1, X, 1).is_bad)
        self.assertFalse(bad_number_report(1, X, X - 1, X ** 2, 0).is_bad)

    def test_zero_denominator(self):
        """Test a zero denominator gives no valuation and no bad number."""

        report = bad_number_report(1, 0, X - 1, X, 0)
        self.assertFalse(report.is_bad)
        self.assertIsNone(report.val_pq)
        self.assertIsNone(report.val_cross)
        self.assertEqual(report.val_rs, -1)


class AuxProductExampleTest(unittest.TestCase):
    """Test the formula on a quadruple with a bad left endpoint."""

    def test_example(self):
        """Test P = 1, Q = X, R = X - 1, S = X on [0, 1]."""

        self.assertEqual(ind_interval(PolyPair(1, X), 0, 1), HALF)
        self.assertEqual(ind_interval(PolyPair(X - 1, X), 0, 1), -HALF)
        sides = aux_product_sides(1, X, X - 1, X, 0, 1)
        self.assertEqual(sides.variant, A_BAD)
        self.assertEqual(sides.lhs, -HALF)
        self.assertEqual(sides.rhs, -HALF)
        self.assertTrue(sides.holds)

    def test_interior_bad_number(self):
        """Test the same quadruple on [-1, 1], where 0 is a bad interior point."""

        self.assertTrue(bad_number_report(1, X, X - 1, X, 0).is_bad)
        sides = aux_product_sides(1, X, X - 1, X, -1, 1)
        self.assertEqual(sides.variant, NEITHER_BAD)
        self.assertEqual(sides.lhs, 0)
        self.assertEqual(sides.rhs, 0)

    def test_vanishing_cross_term(self):
        """Test P = 1, Q = X, R = -1, S = X, where PS + QR is zero."""

        sides = aux_product_sides(1, X, -1, X, -1, 1)
        self.assertEqual(sides.variant, NEITHER_BAD)
        self.assertEqual(sides.lhs, 0)
        self.assertTrue(sides.holds)

    def test_uncorrected_formula_fails(self):
        """Test the usual correction term gets this quadruple wrong."""

        cross = PolyPair(X ** 2, X ** 2)
        self.assertEqual(var_ab(cross, 0, 1), 0)
        # Ind(P, Q) + Ind(R, S) - Var(PS + QR, QS) = 1/2 - 1/2 - 0
        self.assertNotEqual(aux_product_sides(1, X, X - 1, X, 0, 1).lhs, 0)

    def test_preconditions(self):
        """Test invalid intervals and zero pairs are rejected."""

        with self.assertRaises(PreconditionViolated):
            aux_product_sides(1, X, 1, X, 1, 0)
        with self.assertRaises(PreconditionViolated):
            aux_product_sides(0, 0, 1, X, 0, 1)
        with self.assertRaises(PreconditionViolated):
            aux_product_sides(1, X, 0, 0, 0, 1)

    def test_zero_members(self):
        """Test the formula when single members vanish."""

        for p, q, r, s in [
            (1, 0, X - 1, X),
            (X, X - 1, 2, 0),
            (0, X, X + 1, X - HALF),
            (X - HALF, X, 0, X ** 2),
        ]:
            sides = aux_product_sides(p, q, r, s, 0, 1)
            self.assertEqual(sides.variant, NEITHER_BAD)
            self.assertTrue(sides.holds, (p, q, r, s, sides))


def nonzero_at(rng, points, max_degree):
    """A random real polynomial that does not vanish at any of points."""

    while True:
        poly = random_real_poly(rng, max_degree, (Fraction(1, 2), Fraction(-1)))
        if all(poly(point) for point in points):
            return poly


def quadruple_with_bad(rng, bad, max_degree=6):
    """
    P, Q, R, S of degree at most max_degree for which every point of bad is
    a bad number: Q vanishes to some order there, and R/S is -P/Q plus a
    function that is regular and nonzero there.
    """

    order = rng.randint(1, 2)
    vanishing = RealPoly.from_roots(bad) ** order
    p = nonzero_at(rng, bad, max_degree)
    q = vanishing * nonzero_at(rng, bad, max_degree - vanishing.degree)
    k = random_rational(rng) or Fraction(1)
    extra = nonzero_at(rng, bad, max_degree - vanishing.degree)
    return p, q, -k * p + vanishing * extra, k * q


def test_aux_product_random():
    """
    Test the formula on random quadruples, including constructed bad
    endpoints.
    """

    rng = random.Random(73)
    seen = set()
    for _ in range(500):
        bad = [point for point in (Fraction(0), Fraction(1)) if rng.random() < 0.4]
        if bad:
            p, q, r, s = quadruple_with_bad(rng, bad)
        else:
            p, q, r, s = (random_real_poly(rng, 6, POINTS) for _ in range(4))
        sides = aux_product_sides(p, q, r, s, 0, 1)
        seen.add(sides.variant)
        assert sides.holds, (p, q, r, s, sides)
        if bad == [Fraction(0), Fraction(1)]:
            assert sides.variant == BOTH_BAD

    assert seen == {NEITHER_BAD, A_BAD, B_BAD, BOTH_BAD}


def test_aux_product_interior_bad():
    """Test a bad number strictly inside the interval needs no correction."""

    rng = random.Random(74)
    checked = 0
    for _ in range(200):
        inside = rng.choice((Fraction(-1, 2), Fraction(0), Fraction(1, 3)))
        p, q, r, s = quadruple_with_bad(rng, [inside])
        assert bad_number_report(p, q, r, s, inside).is_bad
        if bad_number_report(p, q, r, s, -1).is_bad or bad_number_report(p, q, r, s, 1).is_bad:
            continue
        sides = aux_product_sides(p, q, r, s, -1, 1)
        assert sides.variant == NEITHER_BAD
        assert sides.holds, (p, q, r, s, sides)
        checked += 1

    assert checked > 50


def test_aux_product_vanishing_cross_term():
    """Test quadruples with PS + QR = 0, where R/S is exactly -P/Q."""

    rng = random.Random(75)
    for _ in range(100):
        p = random_real_poly(rng, 4, POINTS)
        q = random_real_poly(rng, 4, POINTS)
        k = random_rational(rng) or Fraction(-2)
        r, s = -k * p, k * q
        assert not p * s + q * r
        a = rng.choice((Fraction(-1), Fraction(0), Fraction(1, 2)))
        sides = aux_product_sides(p, q, r, s, a, a + 1)
        assert sides.variant == NEITHER_BAD
        assert sides.lhs == 0
        assert sides.holds, (p, q, r, s, sides)


class AdditivityDefectTest(unittest.TestCase):
    """Test the per-edge decomposition of the defect of w on products."""

    def test_vertex_example(self):
        """Test F = Z, H = 2 + i on the unit square."""

        f, h = RationalFunction(Z), RationalFunction(2 + I)
        defect = additivity_defect(f, h, UNIT_SQUARE)

        self.assertEqual([terms.correction for terms in defect.edges], [0, HALF, 0, 0])
        self.assertEqual(defect.total_correction, HALF)
        self.assertFalse(defect.has_bad_endpoint)

        vertex, arriving, leaving = defect.vertex_terms[0]
        self.assertEqual(vertex, GaussianRational(0))
        self.assertEqual((arriving, leaving), (HALF, 0))

        self.assertEqual(defect.predicted_defect(), -HALF)
        self.assertEqual(actual_defect(f, h, UNIT_SQUARE), -HALF)

    def test_interior_zero(self):
        """Test a zero away from the boundary gives no defect."""

        f = RationalFunction(Z - HALF - HALF * I)
        defect = additivity_defect(f, 2 + I, UNIT_SQUARE)
        self.assertEqual(defect.predicted_defect(), 0)
        self.assertEqual(actual_defect(f, 2 + I, UNIT_SQUARE), 0)


def test_additivity_defect_random():
    """Test the predicted defect is exact when no edge endpoint is bad."""

    rng = random.Random(79)
    grid = (Fraction(0), Fraction(1, 2), Fraction(1))
    for _ in range(100):
        f = RationalFunction(
            ComplexPoly.from_roots([GaussianRational(rng.choice(grid), rng.choice(grid))]),
            ComplexPoly.from_roots([GaussianRational(rng.choice(grid), rng.choice(grid))] * rng.randint(0, 1)),
        )
        h = RationalFunction(ComplexPoly.from_roots([GaussianRational(rng.choice(grid), rng.choice(grid))]))
        h = h.scaled(rng.choice((1 + I, 2 - I, I, GaussianRational(-3))))
        defect = additivity_defect(f, h, UNIT_SQUARE)
        if defect.has_bad_endpoint:
            continue
        assert defect.predicted_defect() == actual_defect(f, h, UNIT_SQUARE)
