"""Command-line interface for DeltaBound."""

from deltabound.cli.main import CommandResult, cli, run

__all__ = ["CommandResult", "cli", "run"]
