"""
Exact scalars: rationals and Gaussian rationals.

Rationals are :class:`fractions.Fraction`, which keeps numerator and
denominator in lowest terms with a positive denominator. Gaussian
rationals are pairs of them.
"""

from fractions import Fraction

from rectwind.exceptions import DivisionByZero
from rectwind.utils import sign

Rational = Fraction

__all__ = ["Rational", "GaussianRational", "I", "to_rational", "to_gaussian", "conj", "div", "sign"]


def to_rational(value):
    """Coerce an int, Fraction or ``p/q`` string to a Fraction."""

    if isinstance(value, GaussianRational):
        if value.im:
            raise ValueError("{value} is not real".format(value=value))
        return value.re
    return Fraction(value)


def div(x, y):
    """
    The exact quotient x / y of two scalars.

    Raises :class:`DivisionByZero` for a zero divisor, whether it is a
    Fraction, an int or a Gaussian rational.
    """

    if not y:
        raise DivisionByZero("division of {x} by zero".format(x=x))
    return x / y


def to_gaussian(value):
    """Coerce a real or Gaussian scalar to a GaussianRational."""

    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


class GaussianRational(object):
    """
    A complex number ``re + i*im`` with rational parts.

    Instances are immutable and hash like the equal Fraction when the
    imaginary part is zero.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self):
        """Real part."""
        return self._re

    @property
    def im(self):
        """Imaginary part."""
        return self._im

    def conj(self):
        """The complex conjugate."""
        return GaussianRational(self._re, -self._im)

    def norm(self):
        """The squared modulus ``re^2 + im^2``."""
        return self._re * self._re + self._im * self._im

    def is_real(self):
        return not self._im

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other.re and self._im == other.im
        if isinstance(other, (int, Fraction)):
            return self._re == other and not self._im
        return NotImplemented

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self._re + other, self._im)
        if isinstance(other, GaussianRational):
            return GaussianRational(self._re + other.re, self._im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self._re - other, self._im)
        if isinstance(other, GaussianRational):
            return GaussianRational(self._re - other.re, self._im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self._re, -self._im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self._re * other, self._im * other)
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self._re * other.re - self._im * other.im,
                self._re * other.im + self._im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division of {self} by zero".format(self=self))
            return GaussianRational(self._re / other, self._im / other)
        if isinstance(other, GaussianRational):
            norm = other.norm()
            if not norm:
                raise DivisionByZero("division of {self} by zero".format(self=self))
            return self * other.conj() / norm
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) / self
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return 1 / self ** -exponent
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        return "GaussianRational({re!r}, {im!r})".format(re=str(self._re), im=str(self._im))

    def __str__(self):
        if not self._im:
            return str(self._re)
        if self._im == 1:
            imag = "i"
        elif self._im == -1:
            imag = "-i"
        else:
            imag = "{im}i".format(im=self._im)
        if not self._re:
            return imag
        if imag.startswith("-"):
            return "{re}{imag}".format(re=self._re, imag=imag)
        return "{re}+{imag}".format(re=self._re, imag=imag)


I = GaussianRational(0, 1)  # pylint:disable=invalid-name


def conj(value):
    """Complex conjugate of a real or Gaussian rational scalar."""

    if isinstance(value, GaussianRational):
        return value.conj()
    return Fraction(value)
