# -*- coding: utf-8 -*-
"""
Registry of command-line commands.
"""

from collections import OrderedDict, namedtuple
from functools import partial


class Argument(namedtuple("Argument", ("flags", "options"))):
    """Positional and keyword arguments for ``ArgumentParser.add_argument``."""

    __slots__ = ()


def argument(*flags, **options):
    """Describe one command-line argument of a command."""
    return Argument(flags, options)


class CommandDict(object):
    """
    A mapping of command names to their handlers and arguments.
    """

    def __init__(self):
        self.commands = OrderedDict()

    def load(self, name, func, arguments=()):
        """Add a mapping between a command name and a handler."""

        if not name or name.startswith("-"):
            raise ValueError("invalid command name {name!r} for {func}".format(name=name, func=func))
        self.commands[name] = (func, tuple(arguments))

        try:
            func.command = name
            func.unregister = partial(self.unload, name)
        except AttributeError:
            # bound methods take no attributes
            pass

        return func

    def unload(self, name):
        """Remove a command, if it exists."""
        self.commands.pop(name, None)

    def clear(self):
        """Remove all registered commands."""
        self.commands.clear()

    def __len__(self):
        return len(self.commands)

    def __contains__(self, name):
        return name in self.commands

    def __getitem__(self, name):
        return self.commands[name][0]

    def extract_name(self, func):
        """The command name for a handler: its name with dashes."""
        func = getattr(func, "__func__", func)
        return func.__name__.strip("_").replace("_", "-")

    def extract_help(self, func):
        """The first line of the handler docstring."""
        doc = (getattr(func, "__doc__", None) or "").strip()
        return doc.splitlines()[0] if doc else None

    def command(self, name=None, *arguments):
        """
        Decorate a handler to register it as a command.

        The name defaults to the handler's name, with underscores turned into
        dashes. Example::

            @command("count", argument("expr"))
            def count(args):
                ...
        """

        def decorator(func):
            return self.load(name or self.extract_name(func), func, arguments)

        return decorator

    def build(self, parser, dest="command"):
        """Add one subparser per registered command to parser."""

        subparsers = parser.add_subparsers(dest=dest, metavar="COMMAND")
        subparsers.required = True
        for name, (func, arguments) in self.commands.items():
            help_text = self.extract_help(func)
            subparser = subparsers.add_parser(name, help=help_text, description=help_text)
            for arg in arguments:
                subparser.add_argument(*arg.flags, **arg.options)
            subparser.set_defaults(handler=func)
        return subparsers


COMMAND_REGISTRY = CommandDict()

# Convenience shortcut
command = COMMAND_REGISTRY.command  # pylint:disable=invalid-name
