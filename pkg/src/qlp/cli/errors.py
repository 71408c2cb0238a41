"""Mapping of library errors to CLI exit codes."""

from __future__ import annotations

import typer
from rich.console import Console

from qlp.core.errors import QlpError

err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def exit_usage(error: QlpError) -> typer.Exit:
    """Print the error to stderr and return the exit for a usage problem."""
    err_console.print(f"[red]Error:[/red] {error}")
    err_console.print("Try 'qlp --help' for usage.")
    return typer.Exit(code=EXIT_USAGE)
