# -*- coding: utf-8 -*-
"""
Command-line front end.

Every command prints exact rationals as ``p/q``. With ``--json`` the output
is a single object::

    {"command": ..., "input": {...}, "result": {"value": "p/q"} or
     {"boxes": [...]}, "details": {...}}

Exit status: 0 on success, 1 on usage or expression errors, 2 when the
input violates a precondition or a verdict fails.
"""

import argparse
import json
import logging
import os
import sys
from collections import namedtuple
from fractions import Fraction

import colorama
from colors import green, red

from rectwind.cauchy import PolyPair, ind_interval
from rectwind.counting import count_weighted, count_weighted_even
from rectwind.exceptions import ExprSyntaxError, PreconditionViolated, RectwindError
from rectwind.isolation import isolate
from rectwind.oracle import numeric_winding
from rectwind.parser import parse_function, parse_real_poly
from rectwind.poly import isolate_real_roots
from rectwind.product import aux_product_sides
from rectwind.strings import format_rational, represent_table
from rectwind.winding import EDGE_NAMES, Rectangle, times_i, wind_w_raw_sum, wind_W
from rectwind_cli import __version__
from rectwind_cli.registry import COMMAND_REGISTRY, argument, command

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

ENV_EPS = "RECTWIND_EPS"
ENV_SAMPLES = "RECTWIND_SAMPLES"
ENV_LOG_LEVEL = "RECTWIND_LOG_LEVEL"

DEFAULT_EPS = "1/64"
DEFAULT_SAMPLES = "256"
DEFAULT_LOG_LEVEL = "WARNING"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# Agreement tolerance between the exact count and the numeric estimate
CHECK_TOLERANCE = 1e-3

# Width of the isolating interval behind a displayed pole
POLE_WIDTH = Fraction(1, 2 ** 40)


class Outcome(namedtuple("Outcome", ("input", "result", "details", "lines", "passed"))):
    """What a command computed, ready to print as text or JSON."""

    __slots__ = ()

    def __new__(cls, input, result, details=None, lines=(), passed=True):  # pylint:disable=redefined-builtin
        return super().__new__(cls, input, result, details or {}, tuple(lines), passed)


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{prog}: error: {message}\n".format(prog=self.prog, message=message))


def rational_arg(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational number: {text!r}".format(text=text))


def positive_int_arg(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError("not a positive integer: {text!r}".format(text=text))
    return value


def log_level_arg(text):
    level = text.strip().upper()
    if level not in LOG_LEVELS:
        raise argparse.ArgumentTypeError(
            "not a log level: {text!r}, choose from {levels}".format(text=text, levels=", ".join(LOG_LEVELS))
        )
    return level


def rectangle_arg(text):
    try:
        return Rectangle(*(Fraction(part) for part in text.split(",")))
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "expected x0,x1,y0,y1 with x0 < x1 and y0 < y1, got {text!r}".format(text=text)
        )


def interval_arg(text):
    try:
        a, b = (Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("expected a,b with rational a and b, got {text!r}".format(text=text))
    return a, b


def from_environ(value, env, fallback, convert):
    """A flag value, or its default from the environment."""
    if value is not None:
        return value
    return convert(os.environ.get(env, fallback))


def rectangle_input(rectangle):
    return {
        "x0": format_rational(rectangle.x0),
        "x1": format_rational(rectangle.x1),
        "y0": format_rational(rectangle.y0),
        "y1": format_rational(rectangle.y1),
    }


def verdict(passed):
    """PASS or FAIL, coloured on a terminal."""
    text = "PASS" if passed else "FAIL"
    if not sys.stdout.isatty():
        return text
    return green(text) if passed else red(text)


RECT = argument("--rect", type=rectangle_arg, required=True, metavar="x0,x1,y0,y1", help="the rectangle")
EXPR = argument("expr", help="a rational function of Z")


METHOD = argument("--method", choices=("W", "w"), default="W", help="winding number to count with")


@command("count", RECT, METHOD, EXPR)
def count(args):
    """Weighted number of zeros minus poles in a rectangle."""
    f = parse_function(args.expr)
    if args.method == "w":
        value = count_weighted_even(f, args.rect).value
    else:
        value = count_weighted(f, args.rect).value
    return Outcome(
        {"expr": args.expr, "rect": rectangle_input(args.rect), "method": args.method},
        {"value": format_rational(value)},
        lines=[format_rational(value)],
    )


def _edge_details(indices):
    return {name: format_rational(index) for name, index in zip(EDGE_NAMES, indices)}


def _edge_table(label, indices):
    return represent_table([("edges of " + label,) + EDGE_NAMES, ("Ind",) + tuple(map(format_rational, indices))])


EDGES = argument("--edges", action="store_true", help="also show the Cauchy index of every edge")


@command("wind-w", RECT, EDGES, EXPR)
def wind_w_command(args):
    """The winding number w around a rectangle."""
    f = parse_function(args.expr)
    indices, value = wind_w_raw_sum(f, args.rect)
    lines = [format_rational(value)]
    details = {}
    if args.edges:
        details["edges"] = _edge_details(indices)
        lines.append(_edge_table("f", indices))
    return Outcome(
        {"expr": args.expr, "rect": rectangle_input(args.rect)}, {"value": format_rational(value)}, details, lines
    )


@command("wind-W", RECT, EDGES, EXPR)
def wind_big_w_command(args):
    """The winding number W = (w(f) + w(if)) / 2 around a rectangle."""
    f = parse_function(args.expr)
    value = wind_W(f, args.rect)
    lines = [format_rational(value)]
    details = {}
    if args.edges:
        indices, _ = wind_w_raw_sum(f, args.rect)
        rotated, _ = wind_w_raw_sum(times_i(f), args.rect)
        details["edges"] = _edge_details(indices)
        details["rotated_edges"] = _edge_details(rotated)
        lines.append(_edge_table("f", indices))
        lines.append(_edge_table("if", rotated))
    return Outcome(
        {"expr": args.expr, "rect": rectangle_input(args.rect)}, {"value": format_rational(value)}, details, lines
    )


def _poles(pair, a, b):
    """Approximate locations of the poles of P/Q strictly between a and b."""
    p, q = pair.reduced()
    if not p or not q:
        return []
    poles = []
    for root in isolate_real_roots(q, a, b):
        while root.width > POLE_WIDTH:
            root = root.refine()
        poles.append(root.approximate())
    return poles


INTERVAL = argument("--interval", type=interval_arg, required=True, metavar="a,b", help="the interval")


@command("cauchy", INTERVAL, argument("p", help="numerator, a polynomial in X"), argument("q", help="denominator"))
def cauchy(args):
    """The Cauchy index of P/Q from a to b."""
    a, b = args.interval
    pair = PolyPair(parse_real_poly(args.p), parse_real_poly(args.q))
    value = ind_interval(pair, a, b)
    return Outcome(
        {"p": args.p, "q": args.q, "interval": [format_rational(a), format_rational(b)]},
        {"value": format_rational(value)},
        {"poles": _poles(pair, a, b)},
        lines=[format_rational(value)],
    )


@command("aux-check", INTERVAL, *(argument(name, help="a polynomial in X") for name in ("p", "q", "r", "s")))
def aux_check(args):
    """Check the auxiliary product formula for P, Q, R, S on an interval."""
    a, b = args.interval
    polys = [parse_real_poly(text) for text in (args.p, args.q, args.r, args.s)]
    sides = aux_product_sides(*polys, a, b)
    passed = sides.holds
    return Outcome(
        {"p": args.p, "q": args.q, "r": args.r, "s": args.s, "interval": [format_rational(a), format_rational(b)]},
        {"value": format_rational(sides.lhs)},
        {
            "variant": sides.variant,
            "lhs": format_rational(sides.lhs),
            "rhs": format_rational(sides.rhs),
            "holds": passed,
        },
        [
            "{variant}: lhs={lhs} rhs={rhs} {verdict}".format(
                variant=sides.variant,
                lhs=format_rational(sides.lhs),
                rhs=format_rational(sides.rhs),
                verdict=verdict(passed),
            )
        ],
        passed,
    )


@command(
    "isolate",
    argument(
        "--eps",
        type=rational_arg,
        help="largest box side, default ${env} or {default}".format(env=ENV_EPS, default=DEFAULT_EPS),
    ),
    argument("expr", help="a polynomial in Z"),
)
def isolate_command(args):
    """Isolate the roots of a polynomial in small disjoint boxes."""
    f = parse_function(args.expr)
    if not f.is_polynomial:
        raise PreconditionViolated("{expr} is not a polynomial".format(expr=args.expr))
    eps = from_environ(args.eps, ENV_EPS, DEFAULT_EPS, rational_arg)
    boxes = isolate(f.numerator, eps)
    rows = []
    for box in boxes:
        row = rectangle_input(box.box)
        row["count"] = box.count
        rows.append(row)
    table = [("x0", "x1", "y0", "y1", "count")] + [
        (row["x0"], row["x1"], row["y0"], row["y1"], row["count"]) for row in rows
    ]
    return Outcome(
        {"expr": args.expr, "eps": format_rational(eps)}, {"boxes": rows}, lines=[represent_table(table)]
    )


@command(
    "check",
    RECT,
    argument(
        "--samples",
        type=positive_int_arg,
        help="initial samples per edge, default ${env} or {default}".format(env=ENV_SAMPLES, default=DEFAULT_SAMPLES),
    ),
    EXPR,
)
def check(args):
    """Compare the exact count with a numeric argument-principle estimate."""
    f = parse_function(args.expr)
    samples = from_environ(args.samples, ENV_SAMPLES, DEFAULT_SAMPLES, positive_int_arg)
    exact = count_weighted(f, args.rect).value
    estimate = numeric_winding(f, args.rect, samples)
    passed = abs(estimate - float(exact)) < CHECK_TOLERANCE and round(estimate) == exact
    return Outcome(
        {"expr": args.expr, "rect": rectangle_input(args.rect), "samples": samples},
        {"value": format_rational(exact)},
        {"numeric": estimate, "agrees": passed},
        [
            "exact   {exact}".format(exact=format_rational(exact)),
            "numeric {estimate:.9f}".format(estimate=estimate),
            verdict(passed),
        ],
        passed,
    )


def build_parser():
    """The top-level parser with one subcommand per registered command."""
    parser = ArgumentParser(prog="rectwind", description="Exact zero and pole counting in rectangles.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--json", action="store_true", help="print a JSON object instead of text")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        help="logging level on stderr, default ${env} or {default}".format(
            env=ENV_LOG_LEVEL, default=DEFAULT_LOG_LEVEL
        ),
    )
    COMMAND_REGISTRY.build(parser)
    return parser


def emit(args, outcome):
    """Print an outcome as text or JSON."""
    if args.json:
        document = {
            "command": args.command,
            "input": outcome.input,
            "result": outcome.result,
            "details": outcome.details,
        }
        print(json.dumps(document, indent=2))
    else:
        for line in outcome.lines:
            print(line)


def main(argv=None):
    """
    Entry point for the ``rectwind`` command.
    """

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.log_level = from_environ(args.log_level, ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL, log_level_arg)
    except argparse.ArgumentTypeError as exc:
        parser.error("{env}: {exc}".format(env=ENV_LOG_LEVEL, exc=exc))

    logging.basicConfig(stream=sys.stderr, level=args.log_level, format="%(levelname)s %(name)s: %(message)s")
    colorama.just_fix_windows_console()

    try:
        outcome = args.handler(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except ExprSyntaxError as exc:
        print("{prog} {command}: {exc}".format(prog=parser.prog, command=args.command, exc=exc), file=sys.stderr)
        return EXIT_USAGE
    except RectwindError as exc:
        print("{prog} {command}: {exc}".format(prog=parser.prog, command=args.command, exc=exc), file=sys.stderr)
        return EXIT_FAILURE

    emit(args, outcome)
    return EXIT_OK if outcome.passed else EXIT_FAILURE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
