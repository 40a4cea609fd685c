__version__ = "0.1.0"

from rectwind_cli.cli import main
