"""
Utilities for rendering exact values.
"""

from fractions import Fraction


def format_rational(value):
    """
    A rational as ``p/q``, with the denominator written even when it is 1.

    This is the machine-readable form: it never loses precision and always
    has the same shape.
    """

    value = Fraction(value)
    return "{num}/{den}".format(num=value.numerator, den=value.denominator)


def represent_table(table, indent=0, cell_wrap=str):
    """
    Render rows of cells as a pipe-delimited table with aligned columns.

    The first row is taken as the header and underlined. cell_wrap is
    applied to each padded cell, e.g. to colour it.
    """

    if not table:
        return ""

    table = [[str(cell) for cell in row] for row in table]
    lengths = [max(len(cell) for cell in column) for column in zip(*table)]

    def line(row):
        return " " * indent + "| %s |" % " | ".join(cell_wrap(cell.ljust(length)) for cell, length in zip(row, lengths))

    rule = " " * indent + "|-%s-|" % "-|-".join("-" * length for length in lengths)
    return "\n".join([line(table[0]), rule] + [line(row) for row in table[1:]])
