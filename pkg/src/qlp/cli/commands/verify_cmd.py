"""qlp verify command - run the identity and inequality property suites."""

from __future__ import annotations

from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

from qlp.cli.errors import EXIT_FAILED, exit_usage
from qlp.config.constants import DEFAULT_JOBS, DEFAULT_TRIALS
from qlp.config.settings import parse_int_list, resolve_seed
from qlp.core.enums import VerifySuite
from qlp.core.errors import ConfigError, ParameterError
from qlp.templates.renderer import ReportRenderer
from qlp.verify.suites import SuiteVerifier, VerifyOptions

console = Console()


def verify_command(
    suite: VerifySuite = typer.Argument(..., help="Suite to run"),
    n: int = typer.Option(None, "--n", help="Restrict dimension-indexed suites to this n"),
    trials: int = typer.Option(DEFAULT_TRIALS, "--trials", help="Random probes per check"),
    seed: int = typer.Option(None, "--seed", help="Master seed (falls back to $QLP_SEED)"),
    dims: str = typer.Option(None, "--dims", help="Comma-separated factor dims, e.g. 2,2,2"),
    jobs: int = typer.Option(DEFAULT_JOBS, "--jobs", help="Worker threads for random trials"),
    report_path: Path = typer.Option(None, "--report", help="Write a plain-text report here"),
) -> None:
    """Run property suites and print one line per check."""
    try:
        if trials < 1:
            raise ConfigError(f"--trials must be at least 1, got {trials}")
        if jobs < 1:
            raise ConfigError(f"--jobs must be at least 1, got {jobs}")
        if n is not None and n < 2:
            raise ConfigError(f"--n must be at least 2, got {n}")
        options = VerifyOptions(
            n=n,
            trials=trials,
            seed=resolve_seed(seed),
            dims=parse_int_list(dims) if dims else None,
            jobs=jobs,
        )
        report = SuiteVerifier(options).verify(suite)
    except (ConfigError, ParameterError) as e:
        raise exit_usage(e) from e

    # Display results
    table = Table(title=f"qlp verify {suite.value}", show_lines=True)
    table.add_column("Check", min_width=30)
    table.add_column("Suite", width=14)
    table.add_column("Result", width=8)
    table.add_column("Measured", justify="right")
    table.add_column("Tolerance", justify="right")

    for result in report.results:
        status = "[green]PASS[/green]" if result.passed else "[red]FAIL[/red]"
        table.add_row(
            result.name, result.suite, status,
            f"{result.measured:.3e}", f"{result.tolerance:.1e}",
        )

    console.print(table)
    worst = max((r.measured for r in report.results), default=0.0)
    console.print(
        f"\n[bold]{report.passed}/{report.total} checks passed[/bold] (max measured {worst:.3e})"
    )

    if report_path is not None:
        text = ReportRenderer().render_verify_report(
            report, suite=suite.value, seed=options.seed, trials=options.trials,
        )
        report_path.write_text(text, encoding="utf-8", newline="\n")

    if report.failed > 0:
        console.print("[red]Some checks failed.[/red]")
        raise typer.Exit(code=EXIT_FAILED)

    console.print("[green]All checks passed.[/green]")
