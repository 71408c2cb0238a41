"""qlp capacity command - closed-form capacities against the d-norm derivative."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import typer
from rich.console import Console

from qlp.capacities.derivative import capacity_via_derivative
from qlp.capacities.entropy import LN2
from qlp.channels.compose import tensor_power
from qlp.channels.families import build_channel, check_restricted_dim
from qlp.cli.errors import EXIT_FAILED, exit_usage
from qlp.config.constants import CAPACITY_TOL_BITS, DEFAULT_JOBS, DEFAULT_RESTARTS
from qlp.config.settings import RunConfig, lambda_grid, resolve_seed
from qlp.core.enums import ChannelFamily, EntropyBase
from qlp.core.errors import ChannelError, ConfigError, ParameterError
from qlp.linalg.sampling import spawn_seeds
from qlp.norms.search import SearchSettings
from qlp.sweep.csv_writer import render_csv, write_csv
from qlp.sweep.runner import run_grid

console = Console(stderr=True)

HEADER = ("n", "d", "lambda", "closed_bits", "derivative_bits", "abs_gap")


@dataclass(frozen=True)
class CapacityRow:
    n: int
    d: int
    lam: float
    closed: float
    numeric: float
    base: EntropyBase

    @property
    def abs_gap(self) -> float:
        return abs(self.numeric - self.closed)

    def cells(self) -> tuple[int | float, ...]:
        scale = 1.0 if self.base is EntropyBase.BITS else LN2
        return (
            self.n, self.d, self.lam,
            self.closed * scale, self.numeric * scale, self.abs_gap * scale,
        )


def evaluate_capacity_grid(config: RunConfig) -> list[CapacityRow]:
    """Rows hold bits; ``cells`` rescales to the configured base. For k > 1 the
    channel is the k-fold erasure power on n^k with ancilla d^k."""
    assert config.family is not None and config.n is not None and config.d is not None
    family, n, d, k = config.family, config.n, config.d, config.k
    check_restricted_dim(n, d)
    if k > 1 and family is not ChannelFamily.ERASURE:
        raise ConfigError(f"--k {k} is only supported for the erasure channel")
    seeds = spawn_seeds(config.seed, len(config.lambdas))

    def evaluate(index: int) -> CapacityRow:
        lam = config.lambdas[index]
        ch = build_channel(family, n, lam)
        if k > 1:
            ch = tensor_power(ch, k)
        settings = SearchSettings(restarts=config.restarts, seed=seeds[index])
        report = capacity_via_derivative(ch, d**k, settings)
        return CapacityRow(
            n=n, d=d, lam=lam,
            closed=report.closed_form_bits,
            numeric=report.numeric_bits,
            base=config.base,
        )

    return run_grid(range(len(config.lambdas)), evaluate, config.jobs)


def capacity_command(
    channel: ChannelFamily = typer.Option(
        ChannelFamily.DEPOLARIZING, "--channel", help="Channel family",
    ),
    n: int = typer.Option(..., "--n", help="Input dimension"),
    d: int = typer.Option(None, "--d", help="Ancilla dimension per use (default n)"),
    k: int = typer.Option(1, "--k", help="Tensor power (erasure only)"),
    lambdas: list[float] = typer.Option(None, "--lambda", help="Lambda value; repeatable"),
    sweep: str = typer.Option(None, "--sweep", help="Lambda grid start:stop:step"),
    base: EntropyBase = typer.Option(EntropyBase.BITS, "--base", help="Logarithm base"),
    restarts: int = typer.Option(DEFAULT_RESTARTS, "--restarts", help="Optimizer restarts"),
    seed: int = typer.Option(None, "--seed", help="Master seed (falls back to $QLP_SEED)"),
    jobs: int = typer.Option(DEFAULT_JOBS, "--jobs", help="Grid points evaluated at once"),
    tol: float = typer.Option(CAPACITY_TOL_BITS, "--tol", help="Agreement tolerance in bits"),
    out: Path = typer.Option(None, "--out", help="CSV path (default stdout)"),
) -> None:
    """Compare closed-form capacities with the derivative of the d-norm at p = 1."""
    try:
        if k < 1:
            raise ConfigError(f"--k must be at least 1, got {k}")
        config = RunConfig(
            command="capacity",
            family=channel,
            n=n,
            d=n if d is None else d,
            k=k,
            lambdas=lambda_grid(lambdas, sweep),
            restarts=restarts,
            seed=resolve_seed(seed),
            jobs=jobs,
            tol=tol,
            out=out,
            base=base,
        ).validate()
        rows = evaluate_capacity_grid(config)
    except (ConfigError, ParameterError, ChannelError) as e:
        raise exit_usage(e) from e

    write_csv(render_csv(HEADER, (row.cells() for row in rows)), config.out)
    failed = [row for row in rows if row.abs_gap > config.tol]
    if failed:
        for row in failed:
            console.print(
                f"[red]FAIL[/red] lambda={row.lam}: closed={row.closed:.9g} bits "
                f"derivative={row.numeric:.9g} bits"
            )
        raise typer.Exit(code=EXIT_FAILED)
