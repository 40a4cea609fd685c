"""
Sign, sign variation and Cauchy index of pairs of real polynomials.

A pair ``(P, Q)`` stands for the rational function ``P/Q``; the zero
denominator is allowed and makes every index vanish. Indices are computed
straight from their definition: endpoint half-contributions plus the jumps
at the poles inside the interval.
"""

from collections import namedtuple
from fractions import Fraction

from rectwind.poly import RealPoly, gcd, isolate_real_roots
from rectwind.utils import as_half_int, sign

PLUS = "+"
MINUS = "-"

HALF = Fraction(1, 2)


class PolyPair(namedtuple("PolyPair", ("p", "q"))):
    """
    A pair of real polynomials ``(P, Q)``.

    Either member may be zero.
    """

    __slots__ = ()

    def __new__(cls, p, q):
        if not isinstance(p, RealPoly):
            p = RealPoly.constant(p)
        if not isinstance(q, RealPoly):
            q = RealPoly.constant(q)
        return super().__new__(cls, p, q)

    def swapped(self):
        """The pair ``(Q, P)``."""
        return PolyPair(self.q, self.p)

    def reduced(self):
        """
        Both members divided by their gcd. Sign, Var and Ind are unchanged
        when the members are not both zero.
        """
        if not self.p or not self.q:
            return self
        common = gcd(self.p, self.q)
        if common.degree == 0:
            return self
        return PolyPair(self.p // common, self.q // common)


def _local_data(pair, x):
    """
    ``(valuation, sign(P_x(x) Q_x(x)))`` for nonzero members, None when
    either member is zero.
    """
    p, q = pair
    if not p or not q:
        return None
    mult_p, cofactor_p = p.multiplicity(x)
    mult_q, cofactor_q = q.multiplicity(x)
    return mult_p - mult_q, sign(cofactor_p(x)) * sign(cofactor_q(x))


def sign_at(pair, x):
    """
    The Sign of ``(P, Q)`` at x: the sign of ``P/Q`` when it is finite and
    nonzero there, 0 otherwise.
    """
    data = _local_data(pair, Fraction(x))
    if data is None:
        return 0
    valuation, local_sign = data
    if valuation:
        return 0
    return local_sign


def var_at(pair, x):
    """``1/2 - 1/2 Sign(P, Q, x)``."""
    return as_half_int(HALF - HALF * sign_at(pair, x))


def var_ab(pair, a, b):
    """``Var_a(P, Q) - Var_b(P, Q)``."""
    return as_half_int(-HALF * sign_at(pair, a) + HALF * sign_at(pair, b))


def ind_point(pair, x, side):
    """
    One-sided Cauchy index at x: half the sign of ``P/Q`` immediately to the
    right (``PLUS``) or left (``MINUS``) of a pole, 0 away from poles.
    """
    data = _local_data(pair, Fraction(x))
    if data is None:
        return Fraction(0)
    valuation, local_sign = data
    if valuation >= 0:
        return Fraction(0)
    if side == PLUS:
        return HALF * local_sign
    if side == MINUS:
        return HALF * (-1) ** (-valuation) * local_sign
    raise ValueError("side must be PLUS or MINUS, not {side!r}".format(side=side))


def ind_point_full(pair, x):
    """``Ind_x^+ - Ind_x^-``: 1, -1 or 0."""
    return ind_point(pair, x, PLUS) - ind_point(pair, x, MINUS)


def ind_interval(pair, a, b):
    """
    The Cauchy index of ``(P, Q)`` from a to b.

    For a < b this is ``Ind_a^+ + sum of Ind_x over x in (a, b) - Ind_b^-``;
    reversing the endpoints negates it.
    """
    a, b = Fraction(a), Fraction(b)
    if a == b:
        return Fraction(0)
    if b < a:
        return -ind_interval(pair, b, a)
    if not pair.p or not pair.q:
        return Fraction(0)

    reduced = pair.reduced()
    p, q = reduced
    total = ind_point(reduced, a, PLUS) - ind_point(reduced, b, MINUS)
    if q.degree < 1:
        return as_half_int(total)

    for root in isolate_real_roots(q, a, b, exact=False):
        if root.is_exact:
            total += ind_point_full(reduced, root.value)
            continue
        # q keeps its sign on (root, hi] and [lo, root)
        jump = sign(q(root.hi)) - sign(q(root.lo))
        if jump:
            total += HALF * jump * root.sign_of(p)
    return as_half_int(total)


def inversion_residual(pair, a, b):
    """
    ``Ind_a^b(P, Q) + Ind_a^b(Q, P) - Var_a^b(P, Q)``, which always
    vanishes.
    """
    return as_half_int(ind_interval(pair, a, b) + ind_interval(pair.swapped(), a, b) - var_ab(pair, a, b))
