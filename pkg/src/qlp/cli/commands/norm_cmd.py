"""qlp norm command - closed-form d-norms against the pure-state optimizer."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import typer
from rich.console import Console

from qlp.capacities.closed_forms import dnorm_closed
from qlp.channels.families import build_channel, check_restricted_dim
from qlp.cli.errors import EXIT_FAILED, exit_usage
from qlp.config.constants import DEFAULT_JOBS, DEFAULT_RESTARTS, DEFAULT_TOL
from qlp.config.settings import RunConfig, lambda_grid, resolve_seed
from qlp.core.enums import ChannelFamily
from qlp.core.errors import ConfigError, ParameterError
from qlp.linalg.sampling import spawn_seeds
from qlp.norms.dnorm import channel_d_norm
from qlp.norms.search import SearchSettings
from qlp.sweep.csv_writer import render_csv, write_csv
from qlp.sweep.runner import run_grid

console = Console(stderr=True)

HEADER = (
    "n", "d", "lambda", "p", "closed_form", "numeric_lower_bound", "witness_value", "gap",
)


@dataclass(frozen=True)
class NormRow:
    n: int
    d: int
    lam: float
    p: float
    closed_form: float
    numeric: float
    witness_value: float

    @property
    def gap(self) -> float:
        return self.closed_form - self.numeric

    def cells(self) -> tuple[int | float, ...]:
        return (
            self.n, self.d, self.lam, self.p,
            self.closed_form, self.numeric, self.witness_value, self.gap,
        )

    def agrees(self, tol: float) -> bool:
        return (
            abs(self.closed_form - self.witness_value) <= tol
            and self.numeric <= self.closed_form + tol
        )


def evaluate_norm_grid(config: RunConfig) -> list[NormRow]:
    """One row per (lambda, p); each point gets its own spawned seed."""
    assert config.family is not None and config.n is not None and config.d is not None
    family, n, d = config.family, config.n, config.d
    check_restricted_dim(n, d)
    points = [(lam, p) for lam in config.lambdas for p in config.ps]
    seeds = spawn_seeds(config.seed, len(points))

    def evaluate(index: int) -> NormRow:
        lam, p = points[index]
        settings = SearchSettings(restarts=config.restarts, seed=seeds[index])
        report = channel_d_norm(build_channel(family, n, lam), d, p, settings)
        witness = report.witness_value if report.witness_value is not None else report.value
        return NormRow(
            n=n, d=d, lam=lam, p=p,
            closed_form=dnorm_closed(family, n, d, lam, p),
            numeric=report.value,
            witness_value=witness,
        )

    return run_grid(range(len(points)), evaluate, config.jobs)


def norm_command(
    channel: ChannelFamily = typer.Option(
        ChannelFamily.DEPOLARIZING, "--channel", help="Channel family",
    ),
    n: int = typer.Option(..., "--n", help="Input dimension"),
    d: int = typer.Option(None, "--d", help="Ancilla dimension (default n)"),
    lambdas: list[float] = typer.Option(None, "--lambda", help="Lambda value; repeatable"),
    sweep: str = typer.Option(None, "--sweep", help="Lambda grid start:stop:step"),
    ps: list[float] = typer.Option(None, "--p", help="Schatten exponent; repeatable"),
    restarts: int = typer.Option(DEFAULT_RESTARTS, "--restarts", help="Optimizer restarts"),
    seed: int = typer.Option(None, "--seed", help="Master seed (falls back to $QLP_SEED)"),
    jobs: int = typer.Option(DEFAULT_JOBS, "--jobs", help="Grid points evaluated at once"),
    tol: float = typer.Option(DEFAULT_TOL, "--tol", help="Agreement tolerance"),
    out: Path = typer.Option(None, "--out", help="CSV path (default stdout)"),
) -> None:
    """Compare closed-form d-norms with the pure-state optimizer, one CSV row per point."""
    try:
        config = RunConfig(
            command="norm",
            family=channel,
            n=n,
            d=n if d is None else d,
            lambdas=lambda_grid(lambdas, sweep),
            ps=tuple(ps or (2.0,)),
            restarts=restarts,
            seed=resolve_seed(seed),
            jobs=jobs,
            tol=tol,
            out=out,
        ).validate()
        rows = evaluate_norm_grid(config)
    except (ConfigError, ParameterError) as e:
        raise exit_usage(e) from e

    write_csv(render_csv(HEADER, (row.cells() for row in rows)), config.out)
    failed = [row for row in rows if not row.agrees(config.tol)]
    if failed:
        for row in failed:
            console.print(
                f"[red]FAIL[/red] lambda={row.lam} p={row.p}: closed={row.closed_form:.12g} "
                f"witness={row.witness_value:.12g} numeric={row.numeric:.12g}"
            )
        raise typer.Exit(code=EXIT_FAILED)
