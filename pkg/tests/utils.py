"""
Utilities for tests.
"""

from fractions import Fraction

from rectwind.poly import ComplexPoly, RealPoly
from rectwind.scalars import GaussianRational
from rectwind.winding import RationalFunction, Rectangle

UNIT_SQUARE = Rectangle(0, 1, 0, 1)

# Real and imaginary parts placing points inside, on and outside the unit square
COORDINATES = (Fraction(-1, 2), Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2))


def random_rational(rng, numerators=range(-4, 5), denominators=(1, 2, 3, 4)):
    """A small random rational."""
    return Fraction(rng.choice(numerators), rng.choice(denominators))


def random_gaussian(rng):
    """A small random Gaussian rational."""
    return GaussianRational(random_rational(rng), random_rational(rng))


def random_real_poly(rng, max_degree, points=()):
    """
    A random nonzero real polynomial of degree at most max_degree.

    Some of the roots are taken from points, so that polynomials built with
    the same points share roots.
    """
    degree = rng.randint(0, max_degree)
    roots = [rng.choice(points) for _ in range(rng.randint(0, degree))] if points else []
    cofactor = [random_rational(rng) for _ in range(degree - len(roots) + 1)]
    if not cofactor[-1]:
        cofactor[-1] = Fraction(1)
    return RealPoly.from_roots(roots) * RealPoly(cofactor)


def random_complex_poly(rng, max_degree):
    """A random nonzero Gaussian polynomial of degree at most max_degree."""
    coefficients = [random_gaussian(rng) for _ in range(rng.randint(0, max_degree) + 1)]
    if not coefficients[-1]:
        coefficients[-1] = GaussianRational(1)
    return ComplexPoly(coefficients)


def linear(z0):
    """The rational function Z - z0."""
    return RationalFunction(ComplexPoly.from_roots([z0]))


def unreduced(numerator, denominator):
    """
    A rational function with the given representative, skipping the
    reduction to lowest terms.
    """
    function = RationalFunction.__new__(RationalFunction)
    function.numerator = numerator
    function.denominator = denominator
    return function
