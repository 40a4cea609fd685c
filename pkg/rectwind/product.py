"""
The auxiliary product formula for Cauchy indices.

For real polynomials P, Q, R, S and a < b::

    Ind(PR - QS, PS + QR) = Ind(P, Q) + Ind(R, S) - Var(PS + QR, QS)

holds unless an endpoint is a bad number, in which case a different
correction term applies. Both sides are exposed so a failure shows which
side, or which classification, went wrong.
"""

from collections import namedtuple
from fractions import Fraction

from rectwind.cauchy import PolyPair, ind_interval, sign_at, var_ab
from rectwind.exceptions import PreconditionViolated
from rectwind.poly import RealPoly, val
from rectwind.winding import RationalFunction, edge_pair, wind_w
from rectwind.utils import as_half_int

HALF = Fraction(1, 2)

NEITHER_BAD = "neither-bad"
A_BAD = "a-bad"
B_BAD = "b-bad"
BOTH_BAD = "both-bad"


def _real(value):
    if isinstance(value, RealPoly):
        return value
    return RealPoly.constant(value)


class BadNumberReport(namedtuple("BadNumberReport", ("is_bad", "val_pq", "val_rs", "val_cross"))):
    """
    Valuations of ``P/Q``, ``R/S`` and ``(PS + QR)/QS`` at a point, and
    whether they make it a bad number. A valuation with a zero
    denominator is reported as None.
    """

    __slots__ = ()


def bad_number_report(p, q, r, s, c):
    """Decide whether c is a bad number for P, Q, R, S."""
    p, q, r, s = _real(p), _real(q), _real(r), _real(s)
    c = Fraction(c)
    val_pq = val(p, q, c) if q else None
    val_rs = val(r, s, c) if s else None
    val_cross = val(p * s + q * r, q * s, c) if q and s else None
    is_bad = bool(q) and bool(s) and val_pq == val_rs and val_pq < 0 and val_cross == 0
    return BadNumberReport(is_bad, val_pq, val_rs, val_cross)


class AuxProductSides(namedtuple("AuxProductSides", ("lhs", "rhs", "variant"))):
    """Both sides of the auxiliary product formula and the variant used."""

    __slots__ = ()

    @property
    def holds(self):
        return self.lhs == self.rhs


def aux_product_sides(p, q, r, s, a, b):
    """
    Evaluate ``Ind_a^b(PR - QS, PS + QR)`` and the right-hand side matching
    the bad-number status of a and b.
    """
    p, q, r, s = _real(p), _real(q), _real(r), _real(s)
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise PreconditionViolated("need a < b, got a={a}, b={b}".format(a=a, b=b))
    if not p and not q:
        raise PreconditionViolated("P and Q are both zero")
    if not r and not s:
        raise PreconditionViolated("R and S are both zero")

    a_bad = bad_number_report(p, q, r, s, a).is_bad
    b_bad = bad_number_report(p, q, r, s, b).is_bad

    cross = PolyPair(p * s + q * r, q * s)
    lhs = ind_interval(PolyPair(p * r - q * s, p * s + q * r), a, b)
    base = ind_interval(PolyPair(p, q), a, b) + ind_interval(PolyPair(r, s), a, b)

    if a_bad and b_bad:
        variant, correction = BOTH_BAD, Fraction(0)
    elif a_bad:
        variant, correction = A_BAD, -HALF * sign_at(cross, b)
    elif b_bad:
        variant, correction = B_BAD, HALF * sign_at(cross, a)
    else:
        variant, correction = NEITHER_BAD, -var_ab(cross, a, b)
    return AuxProductSides(as_half_int(lhs), as_half_int(base + correction), variant)


EdgeProductTerms = namedtuple(
    "EdgeProductTerms", ("edge", "f_pair", "h_pair", "correction", "start_bad", "end_bad")
)
EdgeProductTerms.__doc__ = """
Restrictions of two factors to one oriented edge and the sign variation
``Var(PS + QR, QS)`` from the start to the end of the edge.
"""


class AdditivityDefect(namedtuple("AdditivityDefect", ("edges", "vertex_terms", "total_correction"))):
    """
    How far ``w`` is from additive on a product, edge by edge.

    ``vertex_terms`` holds, for each vertex, the half Sign contributed by
    the edge arriving there and by the edge leaving it; the product is
    additive exactly when these cancel overall.
    """

    __slots__ = ()

    @property
    def has_bad_endpoint(self):
        return any(terms.start_bad or terms.end_bad for terms in self.edges)

    def predicted_defect(self):
        """``2 w(fh) - 2 w(f) - 2 w(h)`` when no endpoint is bad."""
        return -self.total_correction


def additivity_defect(f, h, rectangle):
    """
    Decompose ``2 w(fh) - 2 w(f) - 2 w(h)`` into one sign variation per
    edge of the rectangle.
    """
    f, h = RationalFunction.coerce(f), RationalFunction.coerce(h)
    edges = []
    for edge in rectangle.edges():
        f_pair, h_pair = edge_pair(f, edge), edge_pair(h, edge)
        (p, q), (r, s) = f_pair, h_pair
        cross = PolyPair(p * s + q * r, q * s)
        edges.append(
            EdgeProductTerms(
                edge,
                f_pair,
                h_pair,
                var_ab(cross, edge.start, edge.end),
                bad_number_report(p, q, r, s, edge.start).is_bad,
                bad_number_report(p, q, r, s, edge.end).is_bad,
            )
        )

    vertex_terms = []
    for index, vertex in enumerate(rectangle.vertices()):
        arriving, leaving = edges[index - 1], edges[index]
        arriving_cross = PolyPair(*_cross(arriving))
        leaving_cross = PolyPair(*_cross(leaving))
        vertex_terms.append(
            (
                vertex,
                HALF * sign_at(arriving_cross, arriving.edge.end),
                -HALF * sign_at(leaving_cross, leaving.edge.start),
            )
        )

    total = sum((terms.correction for terms in edges), Fraction(0))
    return AdditivityDefect(tuple(edges), tuple(vertex_terms), as_half_int(total))


def _cross(terms):
    (p, q), (r, s) = terms.f_pair, terms.h_pair
    return p * s + q * r, q * s


def actual_defect(f, h, rectangle):
    """``2 w(fh) - 2 w(f) - 2 w(h)`` computed directly."""
    f, h = RationalFunction.coerce(f), RationalFunction.coerce(h)
    return 2 * (wind_w(f * h, rectangle) - wind_w(f, rectangle) - wind_w(h, rectangle))
