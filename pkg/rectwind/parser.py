"""
Expressions for polynomials and rational functions.

The grammar, whitespace insensitive::

    expr     := sum ('/' sum)?
    sum      := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := rational | 'i' | variable | '(' expr ')' | '-' atom
    rational := uint ('/' uint)?

A ``/`` between two integer literals is part of a rational literal; any
other ``/`` divides. Note that ``-Z^2`` is ``(-Z)^2``: negation belongs to
the atom.

Complex expressions use the variable ``Z`` and may use ``i``; real
expressions use ``X`` and may not.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from rectwind.exceptions import ExprSyntaxError, ZeroDenominator
from rectwind.poly import ComplexPoly, RealPoly
from rectwind.scalars import I
from rectwind.winding import RationalFunction

COMPLEX_VARIABLE = "Z"
REAL_VARIABLE = "X"

# Binding levels, loosest first
EXPR, SUM, TERM, FACTOR, ATOM = range(5)

TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


class Node(object):
    """
    A base expression node.

    ``position`` is the offset of the node in the source text; it takes no
    part in comparisons.
    """

    level = ATOM

    def represented(self):
        """Source text that parses back to an equal node."""

        raise NotImplementedError

    def pair(self, ring):
        """The node as ``(numerator, denominator)`` polynomials of ring."""

        raise NotImplementedError

    def wrapped(self, level):
        """The representation, parenthesised unless it binds at least as tight as level."""

        text = self.represented()
        if self.level < level:
            return "(" + text + ")"
        return text

    def __str__(self):
        return self.represented()


@dataclass(frozen=True)
class Rational(Node):
    numerator: int
    denominator: int = 1
    written: bool = field(default=False, compare=False)
    position: int = field(default=0, compare=False)

    def represented(self):
        if self.denominator == 1 and not self.written:
            return str(self.numerator)
        return "{num}/{den}".format(num=self.numerator, den=self.denominator)

    def pair(self, ring):
        if not self.denominator:
            raise ZeroDenominator("rational literal {text} has a zero denominator".format(text=self.represented()))
        return ring.constant(Fraction(self.numerator, self.denominator)), ring.constant(1)


@dataclass(frozen=True)
class ImagUnit(Node):
    position: int = field(default=0, compare=False)

    def represented(self):
        return "i"

    def pair(self, ring):
        return ring.constant(I), ring.constant(1)


@dataclass(frozen=True)
class Variable(Node):
    name: str
    position: int = field(default=0, compare=False)

    def represented(self):
        return self.name

    def pair(self, ring):
        return ring.identity(), ring.constant(1)


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    position: int = field(default=0, compare=False)

    def represented(self):
        return "-" + self.operand.wrapped(ATOM)

    def pair(self, ring):
        num, den = self.operand.pair(ring)
        return -num, den


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int
    position: int = field(default=0, compare=False)

    level = FACTOR

    def represented(self):
        return "{base}^{exponent}".format(base=self.base.wrapped(ATOM), exponent=self.exponent)

    def pair(self, ring):
        num, den = self.base.pair(ring)
        return num ** self.exponent, den ** self.exponent


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node
    position: int = field(default=0, compare=False)

    level = TERM

    def represented(self):
        return "{left}*{right}".format(left=self.left.wrapped(TERM), right=self.right.wrapped(FACTOR))

    def pair(self, ring):
        (a, b), (c, d) = self.left.pair(ring), self.right.pair(ring)
        return a * c, b * d


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node
    position: int = field(default=0, compare=False)

    level = SUM

    def represented(self):
        return "{left} + {right}".format(left=self.left.wrapped(SUM), right=self.right.wrapped(TERM))

    def pair(self, ring):
        (a, b), (c, d) = self.left.pair(ring), self.right.pair(ring)
        return a * d + c * b, b * d


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node
    position: int = field(default=0, compare=False)

    level = SUM

    def represented(self):
        return "{left} - {right}".format(left=self.left.wrapped(SUM), right=self.right.wrapped(TERM))

    def pair(self, ring):
        (a, b), (c, d) = self.left.pair(ring), self.right.pair(ring)
        return a * d - c * b, b * d


@dataclass(frozen=True)
class Div(Node):
    numerator: Node
    denominator: Node
    position: int = field(default=0, compare=False)

    level = EXPR

    @staticmethod
    def _operand(node):
        # Bare integers on both sides would read back as a rational literal
        if isinstance(node, (Variable, ImagUnit)):
            return node.represented()
        return "(" + node.represented() + ")"

    def represented(self):
        return "{num}/{den}".format(num=self._operand(self.numerator), den=self._operand(self.denominator))

    def pair(self, ring):
        (a, b), (c, d) = self.numerator.pair(ring), self.denominator.pair(ring)
        if not c:
            raise ZeroDenominator("division by {den}, which is identically zero".format(den=self.denominator))
        return a * d, b * c


class _Token(object):
    __slots__ = ("kind", "value", "position")

    def __init__(self, kind, value, position):
        self.kind = kind
        self.value = value
        self.position = position


def tokenize(text):
    """Split an expression into integer, name and operator tokens."""

    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position == len(text):
            break
        match = TOKEN_RE.match(text, position)
        if not match:
            raise ExprSyntaxError(text, position, "unexpected character {char!r}".format(char=text[position]))
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", None, len(text)))
    return tokens


class _Parser(object):
    """Recursive descent over the token list."""

    def __init__(self, text, variable):
        self.text = text
        self.variable = variable
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def peek(self, offset=1):
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def error(self, reason, token=None):
        token = token or self.current
        return ExprSyntaxError(self.text, token.position, reason)

    def accept(self, op):
        token = self.current
        if token.kind == "op" and token.value == op:
            self.index += 1
            return token
        return None

    def expect(self, op):
        token = self.accept(op)
        if token is None:
            raise self.error("expected {op!r}".format(op=op))
        return token

    def parse(self):
        node = self.expr()
        if self.current.kind != "end":
            raise self.error("unexpected {value!r}".format(value=self.current.value))
        return node

    def expr(self):
        node = self.sum()
        slash = self.accept("/")
        if slash:
            node = Div(node, self.sum(), position=slash.position)
        return node

    def sum(self):
        node = self.term()
        while True:
            plus = self.accept("+")
            if plus:
                node = Add(node, self.term(), position=plus.position)
                continue
            minus = self.accept("-")
            if minus:
                node = Sub(node, self.term(), position=minus.position)
                continue
            return node

    def term(self):
        node = self.factor()
        while True:
            star = self.accept("*")
            if not star:
                return node
            node = Mul(node, self.factor(), position=star.position)

    def factor(self):
        node = self.atom()
        caret = self.accept("^")
        if caret:
            token = self.current
            if token.kind != "int":
                raise self.error("exponent must be a non-negative integer")
            self.index += 1
            node = Pow(node, int(token.value), position=caret.position)
        return node

    def atom(self):
        token = self.current
        if token.kind == "int":
            self.index += 1
            slash, after = self.current, self.peek()
            if slash.kind == "op" and slash.value == "/" and after.kind == "int":
                self.index += 2
                return Rational(int(token.value), int(after.value), written=True, position=token.position)
            return Rational(int(token.value), position=token.position)
        if token.kind == "name":
            self.index += 1
            if token.value == self.variable:
                return Variable(token.value, position=token.position)
            if token.value == "i":
                if self.variable != COMPLEX_VARIABLE:
                    raise self.error("the imaginary unit is not allowed in a real expression", token)
                return ImagUnit(position=token.position)
            raise self.error(
                "unknown name {name!r}, the variable is {var!r}".format(name=token.value, var=self.variable), token
            )
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        minus = self.accept("-")
        if minus:
            return Neg(self.atom(), position=minus.position)
        if token.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error("unexpected {value!r}".format(value=token.value))


def parse_expr(text, variable=COMPLEX_VARIABLE):
    """Parse an expression in the given variable into its syntax tree."""

    return _Parser(text, variable).parse()


def lower(node, variable=COMPLEX_VARIABLE, text=None):
    """
    Evaluate a syntax tree: a :class:`RationalFunction` for the complex
    variable, a :class:`RealPoly` for the real one.

    ``text`` is the source the tree was parsed from, used in error
    messages.
    """

    if variable == COMPLEX_VARIABLE:
        return RationalFunction(*node.pair(ComplexPoly))
    num, den = node.pair(RealPoly)
    quotient, remainder = divmod(num, den)
    if remainder:
        division = _first_division(node)
        if text is None:
            text, division = node.represented(), None
        raise ExprSyntaxError(text, getattr(division, "position", 0), "a real expression must be a polynomial")
    return quotient


def parse_function(text):
    """Parse and lower a rational function of Z."""

    return lower(parse_expr(text, COMPLEX_VARIABLE), COMPLEX_VARIABLE, text)


def parse_real_poly(text):
    """Parse and lower a real polynomial in X."""

    return lower(parse_expr(text, REAL_VARIABLE), REAL_VARIABLE, text)


def _first_division(node):
    """The outermost division node, if any."""

    if isinstance(node, Div):
        return node
    for child in vars(node).values():
        if isinstance(child, Node):
            found = _first_division(child)
            if found is not None:
                return found
    return None
