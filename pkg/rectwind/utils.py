"""
Miscellaneous utilities used internally by rectwind.
"""

import math
from fractions import Fraction

# Valuation of the zero polynomial. Compares correctly against integers.
VAL_INFINITY = math.inf


def sign(value):
    """The sign of an exact real number as -1, 0 or 1."""

    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def as_half_int(value):
    """
    Return value as a Fraction, checking that it is a multiple of one half.

    Cauchy indices, Sign and Var take their values here.
    """

    value = Fraction(value)
    if 2 % value.denominator:
        raise ValueError("{value} is not a multiple of 1/2".format(value=value))
    return value


def as_quarter_int(value):
    """
    Return value as a Fraction, checking that it is a multiple of one
    quarter.

    Winding numbers and weighted counts take their values here.
    """

    value = Fraction(value)
    if 4 % value.denominator:
        raise ValueError("{value} is not a multiple of 1/4".format(value=value))
    return value


class memoizedproperty(object):  # pylint:disable=invalid-name
    """
    A property that is only computed on the first access.

    Polynomials are immutable, so derived data (derivative, square-free
    part, Sturm sequence) is cached on the instance.
    """

    def __init__(self, func):
        self.func = func
        self.name = func.__name__
        self.__doc__ = func.__doc__

    def __get__(self, instance, owner):
        """Compute the value and cache it in the instance dict."""

        if instance is None:
            return self

        result = self.func(instance)
        instance.__dict__[self.name] = result
        return result
