"""
Algebraic winding numbers of complex functions on rectangle boundaries.

``w(F | dR)`` is half the sum of the Cauchy indices of ``(F_re, F_im)`` over
the four edges of the rectangle ``R``, traversed counterclockwise.
``W(F | dR)`` is the average of ``w(F)`` and ``w(iF)``. A rational function
``F/G`` is handled through the polynomial ``F * conj(G)``, whose real and
imaginary parts have the same quotient as those of ``F/G``.
"""

from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from rectwind.cauchy import PolyPair, ind_interval
from rectwind.exceptions import InvalidRectangle, ZeroDenominator, ZeroFunction
from rectwind.poly import BivarComplexPoly, ComplexPoly, RealPoly, gcd
from rectwind.scalars import GaussianRational, I, div, to_gaussian
from rectwind.utils import as_quarter_int

HALF = Fraction(1, 2)

EDGE_NAMES = ("bottom", "right", "top", "left")


class Edge(namedtuple("Edge", ("name", "origin", "direction", "start", "end"))):
    """
    An oriented edge: the points ``origin + direction*T`` for T running from
    start to end. The direction is 1 for horizontal edges and i for
    vertical ones.
    """

    __slots__ = ()

    @property
    def horizontal(self):
        return self.direction == 1

    def point(self, t):
        """The complex point at parameter t."""
        return self.origin + self.direction * t


@dataclass(frozen=True)
class Rectangle(object):
    """The closed rectangle ``[x0, x1] x [y0, y1]`` with rational corners."""

    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    def __post_init__(self):
        for name in ("x0", "x1", "y0", "y1"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise InvalidRectangle(
                "need x0 < x1 and y0 < y1, got [{r.x0}, {r.x1}] x [{r.y0}, {r.y1}]".format(r=self)
            )

    @classmethod
    def square(cls, center, radius):
        """The square of half side ``radius`` around a Gaussian rational."""
        center = to_gaussian(center)
        return cls(center.re - radius, center.re + radius, center.im - radius, center.im + radius)

    @property
    def width(self):
        return self.x1 - self.x0

    @property
    def height(self):
        return self.y1 - self.y0

    @property
    def center(self):
        return GaussianRational((self.x0 + self.x1) / 2, (self.y0 + self.y1) / 2)

    def vertices(self):
        """Corners counterclockwise from ``x0 + i y0``."""
        return (
            GaussianRational(self.x0, self.y0),
            GaussianRational(self.x1, self.y0),
            GaussianRational(self.x1, self.y1),
            GaussianRational(self.x0, self.y1),
        )

    def edges(self):
        """The bottom, right, top and left edges, oriented counterclockwise."""
        return (
            Edge("bottom", GaussianRational(0, self.y0), GaussianRational(1), self.x0, self.x1),
            Edge("right", GaussianRational(self.x1), I, self.y0, self.y1),
            Edge("top", GaussianRational(0, self.y1), GaussianRational(1), self.x1, self.x0),
            Edge("left", GaussianRational(self.x0), I, self.y1, self.y0),
        )

    def split_vertical(self, x):
        """Cut along the line ``Re z = x``; returns (left, right)."""
        return Rectangle(self.x0, x, self.y0, self.y1), Rectangle(x, self.x1, self.y0, self.y1)

    def split_horizontal(self, y):
        """Cut along the line ``Im z = y``; returns (bottom, top)."""
        return Rectangle(self.x0, self.x1, self.y0, y), Rectangle(self.x0, self.x1, y, self.y1)

    def split(self, x, y):
        """
        The four subrectangles cut by the lines through ``x + iy``, ordered
        bottom-left, bottom-right, top-right, top-left.
        """
        left, right = self.split_vertical(x)
        bottom_left, top_left = left.split_horizontal(y)
        bottom_right, top_right = right.split_horizontal(y)
        return bottom_left, bottom_right, top_right, top_left

    def transformed(self, scale, offset):
        """Image under ``z -> scale*z + offset`` for a positive rational scale."""
        scale, offset = Fraction(scale), to_gaussian(offset)
        if scale <= 0:
            raise InvalidRectangle("scale must be positive, got {scale}".format(scale=scale))
        return Rectangle(
            scale * self.x0 + offset.re,
            scale * self.x1 + offset.re,
            scale * self.y0 + offset.im,
            scale * self.y1 + offset.im,
        )

    def __str__(self):
        return "[{r.x0}, {r.x1}] x [{r.y0}, {r.y1}]".format(r=self)


def _as_complex(value):
    if isinstance(value, ComplexPoly):
        return value
    if isinstance(value, RealPoly):
        return value.to_complex()
    return ComplexPoly.constant(value)


class RationalFunction(object):
    """
    A quotient ``F/G`` of Gaussian polynomials in Z, kept in lowest terms
    with a monic denominator.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=1):
        numerator, denominator = _as_complex(numerator), _as_complex(denominator)
        if not denominator:
            raise ZeroDenominator("rational function with zero denominator")
        if not numerator:
            denominator = ComplexPoly.constant(1)
        elif denominator.degree > 0:
            common = gcd(numerator, denominator)
            if common.degree > 0:
                numerator, denominator = numerator // common, denominator // common
        scale = denominator.lc
        self.numerator = numerator * div(1, scale)
        self.denominator = denominator * div(1, scale)

    @classmethod
    def coerce(cls, value):
        """Wrap polynomials and scalars; rational functions pass through."""
        if isinstance(value, RationalFunction):
            return value
        return cls(value)

    def __bool__(self):
        return bool(self.numerator)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return "RationalFunction({num!r}, {den!r})".format(num=self.numerator, den=self.denominator)

    def __str__(self):
        if self.denominator.degree == 0:
            return "({num})".format(num=self.numerator)
        return "({num}) / ({den})".format(num=self.numerator, den=self.denominator)

    @property
    def is_polynomial(self):
        return self.denominator.degree == 0

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        return self * other.reciprocal()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** -exponent
        return RationalFunction(self.numerator ** exponent, self.denominator ** exponent)

    def reciprocal(self):
        """``G/F``."""
        if not self.numerator:
            raise ZeroFunction("the zero function has no reciprocal")
        return RationalFunction(self.denominator, self.numerator)

    def scaled(self, gamma):
        """``gamma * F/G``."""
        return RationalFunction(self.numerator * to_gaussian(gamma), self.denominator)

    def __call__(self, z):
        return div(self.numerator(z), self.denominator(z))

    def edge_product(self, edge):
        """
        ``H(T) = F(z(T)) * conj(G)(conj(z(T)))`` for the edge point z(T),
        whose real and imaginary parts restrict ``F * conj(G)`` to the edge.
        """
        restricted = self.numerator.shift(edge.origin, edge.direction)
        if self.denominator.degree > 0:
            restricted = restricted * self.denominator.conj().shift(edge.origin.conj(), edge.direction.conj())
        return restricted


def _normalize(f):
    """Coerce the accepted inputs and reject the zero function."""
    if isinstance(f, BivarComplexPoly):
        if not f:
            raise ZeroFunction("winding numbers are undefined for the zero polynomial")
        return f
    f = RationalFunction.coerce(f)
    if not f:
        raise ZeroFunction("winding numbers are undefined for the zero function")
    return f


def times_i(f):
    """``i * f`` for a rational function or bivariate polynomial."""
    if isinstance(f, BivarComplexPoly):
        return f * I
    return RationalFunction.coerce(f).scaled(I)


def edge_pair(f, edge):
    """The pair ``(Re, Im)`` of f restricted to an edge line, in T."""
    if isinstance(f, BivarComplexPoly):
        restricted = f.restrict(edge.origin, edge.direction)
    else:
        restricted = f.edge_product(edge)
    return PolyPair(*restricted.split())


class EdgeRestrictions(namedtuple("EdgeRestrictions", ("bottom", "right", "top", "left", "edges"))):
    """
    The real pairs of a function restricted to the four edge lines of a
    rectangle, with the oriented edges they belong to.
    """

    __slots__ = ()

    def pairs(self):
        return (self.bottom, self.right, self.top, self.left)

    def items(self):
        """``(edge, pair)`` in counterclockwise order."""
        return zip(self.edges, self.pairs())


def edge_restrictions(f, rectangle):
    """Restrict a rational function or bivariate polynomial to the edges."""
    if not isinstance(f, BivarComplexPoly):
        f = RationalFunction.coerce(f)
    edges = rectangle.edges()
    return EdgeRestrictions(*(edge_pair(f, edge) for edge in edges), edges=edges)


def edge_index(f, edge):
    """The Cauchy index of f over one oriented edge."""
    return ind_interval(edge_pair(f, edge), edge.start, edge.end)


def wind_w_raw_sum(f, rectangle):
    """
    The four oriented edge Cauchy indices (bottom, right, top, left) and
    ``w``, half their sum.
    """
    f = _normalize(f)
    indices = tuple(edge_index(f, edge) for edge in rectangle.edges())
    return indices, as_quarter_int(HALF * sum(indices))


def wind_w(f, rectangle):
    """The winding number ``w(f | d rectangle)``."""
    return wind_w_raw_sum(f, rectangle)[1]


def wind_W(f, rectangle):  # pylint:disable=invalid-name
    """
    The winding number ``W(f | d rectangle) = (w(f) + w(if)) / 2``.

    For rational functions of Z the value is a multiple of 1/4; bivariate
    polynomials can also produce odd multiples of 1/8.
    """
    f = _normalize(f)
    value = HALF * (wind_w(f, rectangle) + wind_w(times_i(f), rectangle))
    if isinstance(f, BivarComplexPoly):
        return value
    return as_quarter_int(value)
