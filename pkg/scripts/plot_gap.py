"""Plot the gap f(n, d, lambda) from a `qlp gap` CSV.

    qlp gap --sweep 0:1:0.01 --out gap.csv
    python scripts/plot_gap.py gap.csv --out gap.png

Needs the ``plot`` extra (matplotlib).
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import typer  # noqa: E402


def read_gap_csv(path: Path) -> tuple[list[float], list[float]]:
    with path.open(encoding="utf-8", newline="") as handle:
        rows = list(csv.DictReader(handle))
    return [float(r["lambda"]) for r in rows], [float(r["f_bits"]) for r in rows]


def plot_gap(
    csv_path: Path = typer.Argument(..., exists=True, dir_okay=False, help="CSV from qlp gap"),
    out: Path = typer.Option(Path("gap.png"), "--out", help="Image path"),
    title: str = typer.Option("f(4, 2, lambda)", "--title", help="Plot title"),
) -> None:
    lambdas, values = read_gap_csv(csv_path)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(lambdas, values, color="b", linestyle="-")
    ax.axhline(0.0, color="grey", linewidth=0.8)
    ax.set_xlabel("lambda")
    ax.set_ylabel("f (bits)")
    ax.set_title(title)
    ax.grid(True)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    typer.echo(f"wrote {out}")


if __name__ == "__main__":
    typer.run(plot_gap)
