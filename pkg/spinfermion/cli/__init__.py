"""Command-line surface for spinfermion."""

from spinfermion.cli.commands import app, run

__all__ = ["app", "run"]
