"""
Certified isolation of the complex roots of a Gaussian polynomial.

The search starts from a square that contains every root and subdivides it
into four with one vertical and one horizontal cut. ``W`` counts the roots
of each piece; a cut line is only accepted once it is known to miss every
root, so all counts are exact integers. Pieces without roots are dropped
and the rest are split until they are smaller than the requested size.
"""

import heapq
import logging
from collections import namedtuple
from fractions import Fraction

from repoze.lru import LRUCache

from rectwind.cauchy import ind_interval
from rectwind.counting import count_weighted
from rectwind.exceptions import ConstantPolynomial, PreconditionViolated
from rectwind.poly import RealPoly, gcd
from rectwind.scalars import GaussianRational, I, div, to_gaussian
from rectwind.winding import RationalFunction, Rectangle, edge_pair, times_i

logger = logging.getLogger(__name__)

EDGE_CACHE_SIZE = 4096


class IsolatingBox(namedtuple("IsolatingBox", ("box", "count"))):
    """
    A rectangle whose boundary misses every root, holding ``count`` roots
    counted with multiplicity.
    """

    __slots__ = ()

    def contains(self, z):
        """Whether z lies in the box (the boundary never holds a root)."""
        z = to_gaussian(z)
        return self.box.x0 < z.re < self.box.x1 and self.box.y0 < z.im < self.box.y1

    def __str__(self):
        return "{box}: {count}".format(box=self.box, count=self.count)


def _as_complex(poly):
    if isinstance(poly, RealPoly):
        return poly.to_complex()
    if isinstance(poly, RationalFunction):
        if not poly.is_polynomial:
            raise PreconditionViolated("isolation needs a polynomial, got {poly}".format(poly=poly))
        return poly.numerator
    return poly


def _modulus_upper(value):
    return abs(value.re) + abs(value.im)


def _modulus_lower(value):
    return max(abs(value.re), abs(value.im))


def root_bound(poly):
    """
    A rational B such that every root z of the polynomial has ``|z| < B``.

    Cauchy's bound ``1 + max |a_j| / |a_n|`` over ``j < n``, with each
    ``|a_j|`` replaced by ``|re| + |im|`` and ``|a_n|`` by
    ``max(|re|, |im|)`` so that B stays rational.
    """
    poly = _as_complex(poly)
    if poly.degree < 1:
        raise ConstantPolynomial("root bound of a constant polynomial {poly}".format(poly=poly))
    leading = _modulus_lower(poly.lc)
    largest = max(_modulus_upper(coeff) for coeff in poly.coefficients[:-1])
    return 1 + div(largest, leading)


def _cut_candidates(lo, hi):
    """``mid``, then ``mid +- span / (3 * 2^k)`` for k = 0, 1, ..."""
    mid = (lo + hi) / 2
    yield mid
    offset = (hi - lo) / 3
    while True:
        yield mid + offset
        yield mid - offset
        offset /= 2


class Subdivision(object):
    """
    Root counting for one polynomial over many rectangles.

    Oriented edge indices are memoised, so edges shared by neighbouring
    rectangles are only computed once.
    """

    def __init__(self, poly, cache_size=EDGE_CACHE_SIZE):
        self.poly = _as_complex(poly)
        self.function = RationalFunction(self.poly)
        self.rotated = times_i(self.function)
        self.cache = LRUCache(cache_size)
        self.hits = 0
        self.splits = 0

    def _edge_index(self, rotated, edge):
        lo, hi = sorted((edge.start, edge.end))
        key = (rotated, edge.origin, edge.direction, lo, hi)
        value = self.cache.get(key)
        if value is None:
            function = self.rotated if rotated else self.function
            value = ind_interval(edge_pair(function, edge), lo, hi)
            self.cache.put(key, value)
        else:
            self.hits += 1
        if edge.start > edge.end:
            return -value
        return value

    def count(self, rectangle):
        """``W(poly | d rectangle)``."""
        total = sum(
            (self._edge_index(rotated, edge) for rotated in (False, True) for edge in rectangle.edges()),
            Fraction(0),
        )
        return total / 4

    def segment_clear(self, origin, direction, lo, hi):
        """
        Whether the polynomial has no root on the closed segment
        ``origin + direction*T``, ``lo <= T <= hi``.
        """
        real, imag = self.poly.shift(origin, direction).split()
        common = gcd(real, imag)
        if common.degree < 1:
            return True
        if not common(lo) or not common(hi):
            return False
        return not common.squarefree.count_roots(lo, hi)

    def boundary_clear(self, rectangle):
        return all(
            self.segment_clear(edge.origin, edge.direction, min(edge.start, edge.end), max(edge.start, edge.end))
            for edge in rectangle.edges()
        )

    def _vertical_cut(self, rectangle):
        for x in _cut_candidates(rectangle.x0, rectangle.x1):
            if self.segment_clear(GaussianRational(x), I, rectangle.y0, rectangle.y1):
                if all(self.count(half).denominator == 1 for half in rectangle.split_vertical(x)):
                    return x
            logger.debug("vertical cut x=%s of %s meets a root", x, rectangle)

    def _horizontal_cut(self, rectangle):
        for y in _cut_candidates(rectangle.y0, rectangle.y1):
            if self.segment_clear(GaussianRational(0, y), GaussianRational(1), rectangle.x0, rectangle.x1):
                if all(self.count(half).denominator == 1 for half in rectangle.split_horizontal(y)):
                    return y
            logger.debug("horizontal cut y=%s of %s meets a root", y, rectangle)

    def split(self, rectangle):
        """
        The four pieces of a rectangle with a root-free boundary, paired
        with their root counts. Pieces without roots are left out.
        """
        self.splits += 1
        x, y = self._vertical_cut(rectangle), self._horizontal_cut(rectangle)
        logger.debug("splitting %s at x=%s, y=%s", rectangle, x, y)
        pieces = []
        for piece in rectangle.split(x, y):
            count = self.count(piece)
            if count:
                pieces.append((piece, int(count)))
        return pieces

    def shrink(self, rectangle, count):
        """
        A rectangle strictly inside the given one, with a root-free boundary
        and the same count.
        """
        margin = min(rectangle.width, rectangle.height) / 4
        while True:
            inner = Rectangle(
                rectangle.x0 + margin, rectangle.x1 - margin, rectangle.y0 + margin, rectangle.y1 - margin
            )
            if self.boundary_clear(inner) and self.count(inner) == count:
                return inner
            margin /= 2


def isolate(poly, eps):
    """
    Isolate every root of a nonconstant Gaussian polynomial in pairwise
    disjoint boxes narrower and lower than eps.

    Returns :class:`IsolatingBox` values sorted by their lower left
    corner; their counts add up to the degree.
    """
    poly = _as_complex(poly)
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionViolated("eps must be positive, got {eps}".format(eps=eps))
    bound = root_bound(poly)
    engine = Subdivision(poly)

    start = Rectangle(-bound, bound, -bound, bound)
    order = 0
    pending = [(-(start.width * start.height), order, start, poly.degree)]
    boxes = []
    while pending:
        _, _, rectangle, count = heapq.heappop(pending)
        if rectangle.width < eps and rectangle.height < eps:
            box = IsolatingBox(engine.shrink(rectangle, count), count)
            logger.debug("isolated %s", box)
            boxes.append(box)
            continue
        for piece, piece_count in engine.split(rectangle):
            order += 1
            heapq.heappush(pending, (-(piece.width * piece.height), order, piece, piece_count))

    boxes.sort(key=lambda box: (box.box.x0, box.box.y0, box.box.x1, box.box.y1))
    logger.info(
        "isolated %d boxes for a degree %d polynomial in %d splits, %d edge indices reused",
        len(boxes),
        poly.degree,
        engine.splits,
        engine.hits,
    )
    return boxes


def count_in(poly, rectangle):
    """Weighted number of roots of a polynomial in a rectangle."""
    return count_weighted(RationalFunction(_as_complex(poly)), rectangle)
