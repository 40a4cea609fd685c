"""
Exact dense polynomials.

:class:`RealPoly` has Fraction coefficients, :class:`ComplexPoly` has
:class:`GaussianRational` coefficients and :class:`BivarComplexPoly` is a
Gaussian polynomial in ``X`` and ``Y``. Coefficient lists are indexed by
degree and never carry a trailing zero; the zero polynomial has no
coefficients.

Real roots are isolated with Sturm sequences and bisection, and carried as
:class:`AlgebraicRoot` values (a square-free defining polynomial together
with an isolating interval).
"""

import logging
from fractions import Fraction
from math import comb, floor, ceil, gcd as igcd, lcm as ilcm

from rectwind.exceptions import BothZero, DivisionByZero, ZeroDenominator, ZeroPolynomial
from rectwind.scalars import GaussianRational, div, to_gaussian
from rectwind.utils import VAL_INFINITY, memoizedproperty, sign

logger = logging.getLogger(__name__)

# Pylint can't see the concrete scalar type behind the shared methods
# pylint:disable=protected-access


class _Poly(object):
    """
    A dense univariate polynomial over an exact field.

    Subclasses choose the coefficient field through :meth:`coerce`.
    """

    variable = "X"

    def __init__(self, coefficients=()):
        coeffs = [self.coerce(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @staticmethod
    def coerce(value):
        """Convert a scalar into the coefficient field."""
        raise NotImplementedError

    @classmethod
    def _wrap(cls, coeffs):
        """Build from coefficients that are already in the field."""
        poly = cls.__new__(cls)
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        poly._coeffs = tuple(coeffs)
        return poly

    @classmethod
    def constant(cls, value):
        """The constant polynomial."""
        return cls((value,))

    @classmethod
    def identity(cls):
        """The polynomial ``X`` (or ``Z``)."""
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots, leading=1):
        """``leading * prod(X - r)`` over the given roots (with repetition)."""
        result = cls.constant(leading)
        for root in roots:
            result = result * cls((-cls.coerce(root), 1))
        return result

    @property
    def coefficients(self):
        """Coefficients, index = degree."""
        return self._coeffs

    @property
    def degree(self):
        """The degree; minus infinity for the zero polynomial."""
        if not self._coeffs:
            return -VAL_INFINITY
        return len(self._coeffs) - 1

    @property
    def lc(self):
        """The leading coefficient."""
        if not self._coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self._coeffs == self.constant(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self._coeffs))

    def __repr__(self):
        return "{cls}({coeffs})".format(cls=type(self).__name__, coeffs=[str(c) for c in self._coeffs])

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            coeff = self._coeffs[power]
            if not coeff:
                continue
            if power == 0:
                monomial = ""
            elif power == 1:
                monomial = self.variable
            else:
                monomial = "{var}^{power}".format(var=self.variable, power=power)
            if not monomial:
                terms.append("({coeff})".format(coeff=coeff))
            elif coeff == 1:
                terms.append(monomial)
            else:
                terms.append("({coeff})*{monomial}".format(coeff=coeff, monomial=monomial))
        return " + ".join(terms)

    def __call__(self, x):
        """Horner evaluation at an exact scalar."""
        result = self.coerce(0)
        for coeff in reversed(self._coeffs):
            result = result * x + coeff
        return result

    def _check_same(self, other):
        if isinstance(other, _Poly):
            if type(other) is not type(self):
                raise TypeError("cannot combine {a} and {b}".format(a=type(self).__name__, b=type(other).__name__))
            return other
        return self.constant(other)

    def __neg__(self):
        return self._wrap(-c for c in self._coeffs)

    def __add__(self, other):
        other = self._check_same(other)
        longer, shorter = (self._coeffs, other._coeffs)
        if len(longer) < len(shorter):
            longer, shorter = shorter, longer
        coeffs = list(longer)
        for power, coeff in enumerate(shorter):
            coeffs[power] = coeffs[power] + coeff
        return self._wrap(coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._check_same(other))

    def __rsub__(self, other):
        return self._check_same(other) - self

    def __mul__(self, other):
        if not isinstance(other, _Poly):
            value = self.coerce(other)
            return self._wrap(c * value for c in self._coeffs)
        other = self._check_same(other)
        if not self._coeffs or not other._coeffs:
            return self._wrap(())
        zero = self.coerce(0)
        coeffs = [zero] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                coeffs[i + j] = coeffs[i + j] + a * b
        return self._wrap(coeffs)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other):
        other = self._check_same(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        divisor = other._coeffs
        remainder = list(self._coeffs)
        if len(remainder) < len(divisor):
            return self._wrap(()), self
        inverse = div(self.coerce(1), divisor[-1])
        quotient = [self.coerce(0)] * (len(remainder) - len(divisor) + 1)
        for shift in range(len(quotient) - 1, -1, -1):
            coeff = remainder[shift + len(divisor) - 1] * inverse
            quotient[shift] = coeff
            if coeff:
                for power, d in enumerate(divisor):
                    remainder[shift + power] = remainder[shift + power] - coeff * d
        return self._wrap(quotient), self._wrap(remainder[: len(divisor) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        """Whether self divides other exactly."""
        return not other % self

    def monic(self):
        """The associated monic polynomial (zero stays zero)."""
        if not self._coeffs:
            return self
        inverse = div(self.coerce(1), self._coeffs[-1])
        return self._wrap(c * inverse for c in self._coeffs)

    @memoizedproperty
    def derivative(self):
        """The formal derivative."""
        return self._wrap(power * c for power, c in enumerate(self._coeffs) if power)

    def deflate(self, x):
        """
        Synthetic division by ``X - x``; returns ``(quotient, remainder)``
        with the remainder equal to ``self(x)``.
        """
        if not self._coeffs:
            return self, self.coerce(0)
        carry = self.coerce(0)
        quotient = []
        for coeff in reversed(self._coeffs):
            carry = carry * x + coeff
            quotient.append(carry)
        remainder = quotient.pop()
        return self._wrap(reversed(quotient)), remainder

    def multiplicity(self, x):
        """
        ``(m, cofactor)`` with ``self = (X - x)^m * cofactor`` and
        ``cofactor(x) != 0``.
        """
        if not self._coeffs:
            raise ZeroPolynomial("multiplicity is undefined for the zero polynomial")
        x = self.coerce(x)
        power = 0
        current = self
        while True:
            quotient, remainder = current.deflate(x)
            if remainder:
                return power, current
            power += 1
            current = quotient

    def shift(self, a, b):
        """``self(a + b*X)`` with a, b in the coefficient field."""
        a, b = self.coerce(a), self.coerce(b)
        linear = self._wrap((a, b))
        result = self._wrap(())
        for coeff in reversed(self._coeffs):
            result = result * linear + self.constant(coeff)
        return result


def _poly_gcd(p, q):
    """Monic Euclidean gcd of two polynomials of the same family."""
    if not p and not q:
        raise BothZero("gcd of two zero polynomials")
    while q:
        p, q = q, p % q
    return p.monic()


class RealPoly(_Poly):
    """A polynomial with rational coefficients."""

    variable = "X"

    @staticmethod
    def coerce(value):
        if isinstance(value, GaussianRational):
            if value.im:
                raise ValueError("{value} is not a real coefficient".format(value=value))
            return value.re
        return Fraction(value)

    def to_complex(self):
        """The same polynomial over the Gaussian rationals."""
        return ComplexPoly(self._coeffs)

    @memoizedproperty
    def squarefree(self):
        """``self / gcd(self, self')``, monic."""
        if not self._coeffs:
            raise ZeroPolynomial("the zero polynomial has no square-free part")
        if len(self._coeffs) == 1:
            return self.constant(1)
        return (self // _poly_gcd(self, self.derivative)).monic()

    @memoizedproperty
    def sturm_sequence(self):
        """
        The Sturm sequence of the polynomial, which must be square-free:
        ``p, p', -rem(p, p'), ...``.
        """
        sequence = [self, self.derivative]
        while sequence[-1]:
            sequence.append(-(sequence[-2] % sequence[-1]))
        sequence.pop()
        return tuple(sequence)

    def sign_variations(self, x):
        """Sign variations of the Sturm sequence at x (zeros dropped)."""
        variations = 0
        previous = 0
        for member in self.sturm_sequence:
            current = sign(member(x))
            if current:
                if previous and current != previous:
                    variations += 1
                previous = current
        return variations

    def count_roots(self, lo, hi):
        """
        Number of distinct roots in the open interval (lo, hi). The
        polynomial must be square-free.
        """
        if lo >= hi:
            return 0
        count = self.sign_variations(lo) - self.sign_variations(hi)
        if not self(hi):
            count -= 1
        return count

    @memoizedproperty
    def integer_leading(self):
        """
        Leading coefficient of the primitive integer polynomial associated
        with self. Every rational root has the form ``k / integer_leading``.
        """
        denominators = 1
        for coeff in self._coeffs:
            denominators = ilcm(denominators, coeff.denominator)
        integers = [int(coeff * denominators) for coeff in self._coeffs]
        content = 0
        for value in integers:
            content = igcd(content, value)
        return abs(integers[-1] // content)


class ComplexPoly(_Poly):
    """A polynomial with Gaussian rational coefficients."""

    variable = "Z"

    @staticmethod
    def coerce(value):
        return to_gaussian(value)

    def conj(self):
        """Conjugate every coefficient."""
        return self._wrap(c.conj() for c in self._coeffs)

    def split(self):
        """``(P, Q)`` real polynomials with ``self = P + i Q``."""
        return (RealPoly(c.re for c in self._coeffs), RealPoly(c.im for c in self._coeffs))

    def is_real(self):
        return all(c.is_real() for c in self._coeffs)


class BivarComplexPoly(object):
    """
    A Gaussian polynomial in ``X`` and ``Y``, stored sparsely as
    ``{(i, j): coefficient of X^i Y^j}`` without zero entries.
    """

    def __init__(self, terms=None):
        cleaned = {}
        for (i, j), coeff in (terms or {}).items():
            coeff = to_gaussian(coeff)
            if coeff:
                cleaned[(int(i), int(j))] = coeff
        self._terms = cleaned

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def matrix(self):
        """
        Dense coefficient matrix, rows indexed by the degree in X and
        columns by the degree in Y, with zero outer rows and columns
        trimmed.
        """
        if not self._terms:
            return ()
        rows = max(i for i, _ in self._terms) + 1
        cols = max(j for _, j in self._terms) + 1
        zero = GaussianRational(0)
        return tuple(tuple(self._terms.get((i, j), zero) for j in range(cols)) for i in range(rows))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, BivarComplexPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return "BivarComplexPoly({terms})".format(
            terms={key: str(value) for key, value in sorted(self._terms.items())}
        )

    def __neg__(self):
        return BivarComplexPoly({key: -value for key, value in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, BivarComplexPoly):
            other = BivarComplexPoly({(0, 0): other})
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, GaussianRational(0)) + value
        return BivarComplexPoly(terms)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, BivarComplexPoly):
            other = BivarComplexPoly({(0, 0): other})
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivarComplexPoly):
            value = to_gaussian(other)
            return BivarComplexPoly({key: coeff * value for key, coeff in self._terms.items()})
        terms = {}
        for (i1, j1), a in self._terms.items():
            for (i2, j2), b in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, GaussianRational(0)) + a * b
        return BivarComplexPoly(terms)

    __rmul__ = __mul__

    def __call__(self, x, y):
        """Evaluate at an exact point."""
        total = GaussianRational(0)
        for (i, j), coeff in self._terms.items():
            total = total + coeff * x ** i * y ** j
        return total

    def conj(self):
        """The conjugate polynomial ``F_re - i F_im``."""
        return BivarComplexPoly({key: value.conj() for key, value in self._terms.items()})

    def split(self):
        """``(F_re, F_im)``, both with real coefficients."""
        return (
            BivarComplexPoly({key: value.re for key, value in self._terms.items()}),
            BivarComplexPoly({key: value.im for key, value in self._terms.items()}),
        )

    def restrict(self, origin, direction):
        """
        ``F(x(T), y(T))`` on the line ``x + iy = origin + direction*T``, as a
        ComplexPoly in T.
        """
        origin, direction = to_gaussian(origin), to_gaussian(direction)
        x_line = ComplexPoly((origin.re, direction.re))
        y_line = ComplexPoly((origin.im, direction.im))
        x_powers, y_powers = {}, {}
        result = ComplexPoly()
        for (i, j), coeff in self._terms.items():
            if i not in x_powers:
                x_powers[i] = x_line ** i
            if j not in y_powers:
                y_powers[j] = y_line ** j
            result = result + x_powers[i] * y_powers[j] * coeff
        return result


def evaluate(p, x):
    """Exact Horner evaluation of a RealPoly or ComplexPoly."""
    return p(x)


def mult_at(p, x):
    """``(m, p_x)`` such that ``p = (X - x)^m * p_x`` and ``p_x(x) != 0``."""
    return p.multiplicity(x)


def val(p, q, x):
    """
    Valuation of ``p/q`` at x: ``mult_x(p) - mult_x(q)``, or
    :data:`~rectwind.utils.VAL_INFINITY` when p is zero.
    """
    if not q:
        raise ZeroDenominator("valuation of a quotient with zero denominator")
    if not p:
        return VAL_INFINITY
    return p.multiplicity(x)[0] - q.multiplicity(x)[0]


def gcd(p, q):
    """Monic greatest common divisor."""
    return _poly_gcd(p, q)


def subst_linear(f, a, b):
    """``f(a + b*T)`` as a ComplexPoly in T."""
    if isinstance(f, RealPoly):
        f = f.to_complex()
    return f.shift(a, b)


def split_re_im(f):
    """``(P, Q)`` with ``f = P + iQ`` coefficientwise."""
    return f.split()


def conj_poly(g):
    """
    Coefficientwise conjugate. The result represents ``conj(g(conj(z)))``,
    so it must be evaluated at the conjugated point.
    """
    return g.conj()


def embed_bivariate(f):
    """``f(X + iY)`` expanded by the binomial theorem."""
    terms = {}
    for power, coeff in enumerate(f.coefficients):
        if not coeff:
            continue
        unit = GaussianRational(1)
        for j in range(power + 1):
            key = (power - j, j)
            terms[key] = terms.get(key, GaussianRational(0)) + coeff * unit * comb(power, j)
            unit = unit * GaussianRational(0, 1)
    return BivarComplexPoly(terms)


def split_re_im_bivar(bivar):
    """``(F_re, F_im)`` as BivarComplexPoly values with zero imaginary part."""
    return bivar.split()


class AlgebraicRoot(object):
    """
    A real root of a square-free polynomial, isolated in (lo, hi).

    The defining polynomial has exactly one root in the open interval and
    does not vanish at its ends. An exact rational root has lo == hi.
    """

    __slots__ = ("defining", "lo", "hi")

    def __init__(self, defining, lo, hi):
        self.defining = defining
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)

    @classmethod
    def exact(cls, defining, value):
        return cls(defining, value, value)

    @property
    def is_exact(self):
        return self.lo == self.hi

    @property
    def value(self):
        """The exact value of a rational root."""
        if not self.is_exact:
            raise ValueError("root is not known to be rational")
        return self.lo

    @property
    def width(self):
        return self.hi - self.lo

    def __eq__(self, other):
        if not isinstance(other, AlgebraicRoot):
            return NotImplemented
        return (self.defining, self.lo, self.hi) == (other.defining, other.lo, other.hi)

    def __hash__(self):
        return hash((self.defining, self.lo, self.hi))

    def __repr__(self):
        if self.is_exact:
            return "<AlgebraicRoot {value}>".format(value=self.lo)
        return "<AlgebraicRoot of {poly} in ({lo}, {hi})>".format(poly=self.defining, lo=self.lo, hi=self.hi)

    def contains(self, x):
        """Whether the isolating interval (or exact value) covers x."""
        if self.is_exact:
            return x == self.lo
        return self.lo < x < self.hi

    def approximate(self):
        """Midpoint of the isolating interval as a float."""
        return float((self.lo + self.hi) / 2)

    def refine(self):
        """Halve the isolating interval, keeping the sign change."""
        if self.is_exact:
            return self
        mid = (self.lo + self.hi) / 2
        at_mid = sign(self.defining(mid))
        if not at_mid:
            return AlgebraicRoot.exact(self.defining, mid)
        if sign(self.defining(self.lo)) != at_mid:
            return AlgebraicRoot(self.defining, self.lo, mid)
        return AlgebraicRoot(self.defining, mid, self.hi)

    def sign_of(self, poly):
        """
        The sign of another real polynomial at this root.

        The interval is refined until poly keeps a constant sign on it;
        a root shared with the defining polynomial is detected first.
        """
        if self.is_exact:
            return sign(poly(self.lo))
        if not poly:
            return 0
        if poly.degree == 0:
            return sign(poly.lc)
        common = gcd(self.defining, poly)
        if common.degree > 0 and common.squarefree.count_roots(self.lo, self.hi):
            return 0
        other = poly.squarefree
        root = self
        steps = 0
        while not root.is_exact and other.count_roots(root.lo, root.hi):
            root = root.refine()
            steps += 1
        if steps:
            logger.debug("refined %r %d times to sign %s", self, steps, poly)
        if root.is_exact:
            return sign(poly(root.lo))
        return sign(poly((root.lo + root.hi) / 2))

    def rational_candidate(self):
        """
        Try to pin the root to an exact rational. Returns the exact root
        or self when the root is irrational.
        """
        if self.is_exact:
            return self
        scale = self.defining.integer_leading
        root = self
        while not root.is_exact:
            first = floor(root.lo * scale) + 1
            last = ceil(root.hi * scale) - 1
            if last - first < 1:
                break
            root = root.refine()
        if root.is_exact:
            return root
        for k in range(first, last + 1):
            candidate = Fraction(k, scale)
            if not self.defining(candidate):
                return AlgebraicRoot.exact(self.defining, candidate)
        return root


def isolate_real_roots(p, a, b, exact=True):
    """
    Isolate the distinct roots of p in the open interval (a, b).

    Returns :class:`AlgebraicRoot` values ordered left to right, with
    pairwise disjoint intervals inside (a, b). With ``exact`` set, every
    rational root is reported with a degenerate interval.
    """
    if not p:
        raise ZeroPolynomial("cannot isolate the roots of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if a >= b or p.degree < 1:
        return []

    squarefree = p.squarefree
    roots = []
    pending = [(a, b, False)]
    while pending:
        lo, hi, is_point = pending.pop()
        if is_point:
            roots.append(AlgebraicRoot.exact(squarefree, lo))
            continue
        count = squarefree.count_roots(lo, hi)
        if not count:
            continue
        if count == 1 and squarefree(lo) and squarefree(hi):
            roots.append(AlgebraicRoot(squarefree, lo, hi))
            continue
        mid = (lo + hi) / 2
        # Processed last-in first-out: left half, midpoint, right half
        pending.append((mid, hi, False))
        if not squarefree(mid):
            pending.append((mid, mid, True))
        pending.append((lo, mid, False))

    if exact:
        roots = [root.rational_candidate() for root in roots]
    return roots


def refine(root):
    """Halve the isolating interval of an AlgebraicRoot."""
    return root.refine()
