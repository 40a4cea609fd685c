"""
Independent ground truth for the counting functions.

Functions are built from prescribed zeros and poles, whose weighted count
is known directly from where they sit. :func:`numeric_winding` follows the
argument of a function around the rectangle in floating point; it is only
ever used to corroborate exact results.
"""

import enum
import logging
import math
from collections import defaultdict, namedtuple
from fractions import Fraction

import numpy as np

from rectwind.counting import classify_point
from rectwind.exceptions import BoundaryZeroDetected, OverlappingSpecs, PreconditionViolated, ZeroFunction
from rectwind.poly import ComplexPoly
from rectwind.scalars import to_gaussian
from rectwind.utils import as_quarter_int
from rectwind.winding import RationalFunction

logger = logging.getLogger(__name__)

MIN_SAMPLES = 64
MAX_SAMPLES = 1 << 16
TOLERANCE = 1e-3
# Below this modulus a sample is taken to sit on a zero or pole
TINY = 1e-12


class RootKind(enum.Enum):
    ZERO = "zero"
    POLE = "pole"

    @property
    def sign(self):
        return 1 if self is RootKind.ZERO else -1


class RootSpec(namedtuple("RootSpec", ("location", "multiplicity", "kind"))):
    """A prescribed zero or pole with its multiplicity."""

    __slots__ = ()

    def __new__(cls, location, multiplicity=1, kind=RootKind.ZERO):
        if not isinstance(multiplicity, int) or multiplicity < 1:
            raise PreconditionViolated("multiplicity must be a positive integer, got {m!r}".format(m=multiplicity))
        return super().__new__(cls, to_gaussian(location), multiplicity, RootKind(kind))

    @classmethod
    def zero(cls, location, multiplicity=1):
        return cls(location, multiplicity, RootKind.ZERO)

    @classmethod
    def pole(cls, location, multiplicity=1):
        return cls(location, multiplicity, RootKind.POLE)

    def __str__(self):
        return "{kind} at {location} x{multiplicity}".format(
            kind=self.kind.value, location=self.location, multiplicity=self.multiplicity
        )


def _collect(specs):
    """Total multiplicities per location, for zeros and poles separately."""
    zeros, poles = defaultdict(int), defaultdict(int)
    for spec in specs:
        target = zeros if spec.kind is RootKind.ZERO else poles
        target[spec.location] += spec.multiplicity
    for location in zeros:
        if location in poles:
            raise OverlappingSpecs(location)
    return zeros, poles


def build_function(specs):
    """``prod (Z - z)^m / prod (Z - w)^n`` over the zeros z and poles w."""
    zeros, poles = _collect(specs)
    numerator = ComplexPoly.constant(1)
    for location, multiplicity in zeros.items():
        numerator = numerator * ComplexPoly((-location, 1)) ** multiplicity
    denominator = ComplexPoly.constant(1)
    for location, multiplicity in poles.items():
        denominator = denominator * ComplexPoly((-location, 1)) ** multiplicity
    return RationalFunction(numerator, denominator)


def expected_weighted_count(specs, rectangle):
    """
    Weighted zeros minus weighted poles straight from the locations:
    1 inside, 1/2 on an edge, 1/4 on a vertex, 0 outside.
    """
    _collect(specs)
    total = Fraction(0)
    for spec in specs:
        total += spec.kind.sign * spec.multiplicity * classify_point(spec.location, rectangle).weight
    return as_quarter_int(total)


def _coefficients(poly):
    """Coefficients for :func:`numpy.polyval`, highest degree first."""
    return np.array([complex(coeff) for coeff in reversed(poly.coefficients)], dtype=complex)


def _boundary_points(rectangle, samples_per_edge):
    """Counterclockwise boundary samples, closing back on the first vertex."""
    corners = [complex(vertex) for vertex in rectangle.vertices()]
    steps = np.linspace(0.0, 1.0, samples_per_edge, endpoint=False)
    segments = [start + (end - start) * steps for start, end in zip(corners, corners[1:] + corners[:1])]
    return np.concatenate(segments + [np.array([corners[0]])])


def numeric_winding(f, rectangle, samples_per_edge=256):
    """
    Change of the argument of f around the rectangle divided by ``2 pi``.

    The sampling density doubles until no step turns by a quarter turn or
    more and the total is within 1e-3 of an integer.
    """
    f = RationalFunction.coerce(f)
    if not f:
        raise ZeroFunction("the zero function has no argument")
    if samples_per_edge < MIN_SAMPLES:
        raise PreconditionViolated(
            "need at least {least} samples per edge, got {samples}".format(least=MIN_SAMPLES, samples=samples_per_edge)
        )
    numerator, denominator = _coefficients(f.numerator), _coefficients(f.denominator)

    samples = samples_per_edge
    while True:
        points = _boundary_points(rectangle, samples)
        top, bottom = np.polyval(numerator, points), np.polyval(denominator, points)
        if min(np.abs(top).min(), np.abs(bottom).min()) < TINY:
            raise BoundaryZeroDetected("{f} vanishes or has a pole on {rect}".format(f=f, rect=rectangle))
        values = top / bottom
        steps = np.angle(values[1:] / values[:-1])
        total = float(steps.sum() / (2 * math.pi))
        largest = float(np.abs(steps).max())
        logger.debug("%d samples per edge: winding %.9f, largest step %.4f", samples, total, largest)
        if largest < math.pi / 4 and abs(total - round(total)) < TOLERANCE:
            return total
        if samples >= MAX_SAMPLES:
            raise BoundaryZeroDetected(
                "argument of {f} did not settle on {rect}; a zero or pole is on or near the boundary".format(
                    f=f, rect=rectangle
                )
            )
        samples *= 2
