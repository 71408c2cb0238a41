"""qlp CLI application."""

from __future__ import annotations

import logging

import typer
from rich.console import Console
from rich.logging import RichHandler

from qlp import __version__
from qlp.cli.commands.capacity_cmd import capacity_command
from qlp.cli.commands.gap_cmd import gap_command
from qlp.cli.commands.norm_cmd import norm_command
from qlp.cli.commands.verify_cmd import verify_command

app = typer.Typer(
    name="qlp",
    help="qlp - channel d-norms, teleportation embeddings and restricted-entanglement capacities",
    no_args_is_help=True,
)

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"qlp {__version__}")
        raise typer.Exit()


def configure_logging(verbosity: int) -> None:
    """Attach a stderr RichHandler to the ``qlp`` logger; -v is INFO, -vv DEBUG."""
    logger = logging.getLogger("qlp")
    logger.setLevel(_LEVELS[min(verbosity, len(_LEVELS) - 1)])
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        logger.addHandler(RichHandler(console=Console(stderr=True), show_path=False))
    logger.propagate = False


@app.callback()
def _main(
    version: bool | None = typer.Option(
        None, "--version", "-V", callback=_version_callback, is_eager=True,
        help="Show version and exit.",
    ),
    verbose: int = typer.Option(
        0, "--verbose", "-v", count=True, help="Log INFO (-v) or DEBUG (-vv) to stderr.",
    ),
) -> None:
    """qlp - channel d-norms, teleportation embeddings and restricted-entanglement capacities."""
    configure_logging(verbose)


# Register commands
app.command("norm")(norm_command)
app.command("capacity")(capacity_command)
app.command("gap")(gap_command)
app.command("verify")(verify_command)


def main() -> None:
    app()
