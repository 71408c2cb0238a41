"""qlp gap command - the nonmultiplicativity gap f(n, d, lambda) over a lambda grid."""

from __future__ import annotations

from pathlib import Path

import typer
from rich.console import Console

from qlp.capacities.closed_forms import footnote_combination, gap_f, gap_peak
from qlp.cli.errors import EXIT_FAILED, exit_usage
from qlp.config.constants import GAP_DEFAULT_SWEEP, GAP_ENDPOINT_TOL, GAP_PEAK_STEP
from qlp.config.settings import lambda_grid
from qlp.core.enums import EntropyBase, SignAssertion
from qlp.core.errors import ConfigError, ParameterError
from qlp.sweep.csv_writer import render_csv, write_csv

console = Console(stderr=True)

HEADER = ("lambda", "f_bits")


def sign_violations(
    rows: list[tuple[float, float]], assertion: SignAssertion
) -> list[tuple[float, float]]:
    """Rows breaking the assertion; at lambda in {0, 1} a vanishing f is also accepted."""
    if assertion is SignAssertion.NONE:
        return []
    bad: list[tuple[float, float]] = []
    for lam, f in rows:
        ok = f > 0.0 if assertion is SignAssertion.POSITIVE else f < 0.0
        if lam in (0.0, 1.0):
            ok = ok or abs(f) <= GAP_ENDPOINT_TOL
        if not ok:
            bad.append((lam, f))
    return bad


def gap_command(
    n: int = typer.Option(None, "--n", help="Input dimension (default 4, or 3 with --footnote)"),
    d: int = typer.Option(2, "--d", help="Ancilla dimension; needs d^2 <= n"),
    lambdas: list[float] = typer.Option(None, "--lambda", help="Lambda value; repeatable"),
    sweep: str = typer.Option(None, "--sweep", help="Lambda grid start:stop:step"),
    footnote: bool = typer.Option(
        False, "--footnote", help="Evaluate C^3 + C^1 - 2 C^2, where d^2 <= n fails",
    ),
    assert_sign: SignAssertion = typer.Option(
        None, "--assert-sign",
        help="Required sign on the interior (default positive, negative with --footnote)",
    ),
    peak: bool = typer.Option(False, "--peak", help="Report only the maximum on a 0.001 grid"),
    base: EntropyBase = typer.Option(EntropyBase.BITS, "--base", help="Logarithm base"),
    out: Path = typer.Option(None, "--out", help="CSV path (default stdout)"),
) -> None:
    """Tabulate the gap C^{d^2} + C^1 - 2 C^d of the depolarizing channel."""
    n = n if n is not None else (3 if footnote else 4)
    if assert_sign is None:
        assert_sign = SignAssertion.NEGATIVE if footnote else SignAssertion.POSITIVE
    try:
        if peak:
            if footnote:
                raise ConfigError("--peak applies to the gap f, not the --footnote combination")
            rows = [gap_peak(n, d, GAP_PEAK_STEP, base)]
            assert_sign = SignAssertion.NONE
        else:
            grid = lambda_grid(lambdas, sweep) or lambda_grid(None, GAP_DEFAULT_SWEEP)
            if any(not 0.0 <= lam <= 1.0 for lam in grid):
                raise ConfigError(f"lambda values must lie in [0, 1], got {list(grid)}")
            if footnote:
                rows = [(lam, footnote_combination(lam, n, base)) for lam in grid]
            else:
                rows = [(lam, gap_f(n, d, lam, base)) for lam in grid]
    except (ConfigError, ParameterError) as e:
        raise exit_usage(e) from e

    write_csv(render_csv(HEADER, rows), out)
    bad = sign_violations(rows, assert_sign)
    if bad:
        for lam, f in bad:
            console.print(f"[red]FAIL[/red] lambda={lam}: f={f:.17g} is not {assert_sign}")
        raise typer.Exit(code=EXIT_FAILED)
