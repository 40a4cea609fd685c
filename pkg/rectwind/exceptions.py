"""
Exception classes
"""


class RectwindError(Exception):
    """Base class for all errors raised by rectwind."""

    pass


class ExprSyntaxError(SyntaxError):
    """A syntax error in a polynomial or rational function expression."""

    def __init__(self, text, position, reason):
        msg = "{reason} at position {position}:\n{text}\n{caret}".format(
            reason=reason, position=position, text=text, caret=" " * position + "^"
        )

        super().__init__(msg)

        self.text = text
        self.position = position
        self.reason = reason


class DivisionByZero(RectwindError, ZeroDivisionError):
    """Division of an exact scalar or polynomial by zero."""

    pass


class ZeroPolynomial(RectwindError, ValueError):
    """An operation needs a nonzero polynomial."""

    pass


class ZeroDenominator(RectwindError, ValueError):
    """A quotient was given an identically zero denominator."""

    pass


class BothZero(RectwindError, ValueError):
    """The greatest common divisor of two zero polynomials is undefined."""

    pass


class ZeroFunction(RectwindError, ValueError):
    """Winding numbers and counts are undefined for the zero function."""

    pass


class ConstantPolynomial(RectwindError, ValueError):
    """An operation needs a polynomial of positive degree."""

    pass


class InvalidRectangle(RectwindError, ValueError):
    """Rectangle corners must satisfy x0 < x1 and y0 < y1."""

    pass


class PreconditionViolated(RectwindError, ValueError):
    """The arguments do not satisfy the documented precondition."""

    pass


class OddVertexValuation(PreconditionViolated):
    """
    Exception raised when the w-based count is requested for a function
    with odd valuation at a vertex of the rectangle.
    """

    def __init__(self, vertex, valuation):
        self.vertex = vertex
        self.valuation = valuation
        super().__init__(
            "valuation {valuation} at vertex {vertex} is odd; "
            "use the W-based count instead".format(valuation=valuation, vertex=vertex)
        )


class OverlappingSpecs(RectwindError, ValueError):
    """A location was declared both a zero and a pole."""

    def __init__(self, location):
        self.location = location
        super().__init__("{location} is declared both a zero and a pole".format(location=location))


class BoundaryZeroDetected(RectwindError, ArithmeticError):
    """The numeric oracle met a zero or pole on the rectangle boundary."""

    pass
