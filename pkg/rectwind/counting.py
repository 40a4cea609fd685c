"""
Counting zeros and poles of rational functions in rectangles.

A zero or pole is weighted by where it sits: 1 in the interior, 1/2 on an
edge, 1/4 on a vertex and 0 outside. ``W`` always returns the weighted
number of zeros minus poles; ``w`` does so when the valuation at every
vertex is even.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from rectwind.exceptions import OddVertexValuation, ZeroFunction
from rectwind.scalars import to_gaussian
from rectwind.utils import as_quarter_int
from rectwind.winding import RationalFunction, wind_w, wind_W


class PointClass(enum.Enum):
    """Position of a point relative to a closed rectangle."""

    INTERIOR = "interior"
    EDGE = "edge"
    VERTEX = "vertex"
    EXTERIOR = "exterior"

    @property
    def weight(self):
        """The weight of a zero or pole in this position."""
        return _WEIGHTS[self]


_WEIGHTS = {
    PointClass.INTERIOR: Fraction(1),
    PointClass.EDGE: Fraction(1, 2),
    PointClass.VERTEX: Fraction(1, 4),
    PointClass.EXTERIOR: Fraction(0),
}


@dataclass(frozen=True)
class WeightedCount(object):
    """Weighted zeros minus weighted poles, a multiple of 1/4."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", as_quarter_int(self.value))

    @property
    def is_integer(self):
        return self.value.denominator == 1

    def __eq__(self, other):
        if isinstance(other, WeightedCount):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)


def classify_point(z, rectangle):
    """Classify z as interior, edge, vertex or exterior point."""
    z = to_gaussian(z)
    x, y = z.re, z.im
    if not (rectangle.x0 <= x <= rectangle.x1 and rectangle.y0 <= y <= rectangle.y1):
        return PointClass.EXTERIOR
    on_vertical = x in (rectangle.x0, rectangle.x1)
    on_horizontal = y in (rectangle.y0, rectangle.y1)
    if on_vertical and on_horizontal:
        return PointClass.VERTEX
    if on_vertical or on_horizontal:
        return PointClass.EDGE
    return PointClass.INTERIOR


def _rational(f):
    f = RationalFunction.coerce(f)
    if not f:
        raise ZeroFunction("the zero function has no zeros or poles to count")
    return f


def vertex_valuations(f, rectangle):
    """
    Valuations of f at the corners ``x0+iy0, x1+iy0, x1+iy1, x0+iy1``.
    """
    f = _rational(f)
    return tuple(
        f.numerator.multiplicity(vertex)[0] - f.denominator.multiplicity(vertex)[0]
        for vertex in rectangle.vertices()
    )


def count_weighted(f, rectangle):
    """Weighted zeros minus poles of f in the rectangle, through W."""
    return WeightedCount(wind_W(_rational(f), rectangle))


def count_weighted_even(f, rectangle):
    """
    Weighted zeros minus poles of f in the rectangle, through w.

    Raises :class:`OddVertexValuation` if f has odd valuation at a vertex,
    where w miscounts.
    """
    f = _rational(f)
    for vertex, valuation in zip(rectangle.vertices(), vertex_valuations(f, rectangle)):
        if valuation % 2:
            raise OddVertexValuation(vertex, valuation)
    return WeightedCount(wind_w(f, rectangle))
