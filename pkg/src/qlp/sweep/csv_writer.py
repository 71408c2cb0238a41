"""CSV output for sweeps: header always present, LF line endings, round-trip floats."""

from __future__ import annotations

import csv
import io
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path

from qlp.config.constants import CSV_SIGNIFICANT_DIGITS

Cell = int | float | str


def format_cell(value: Cell) -> str:
    """Floats with 17 significant digits, so float64 values survive a round trip."""
    if isinstance(value, float):
        return format(value, f".{CSV_SIGNIFICANT_DIGITS}g")
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])
    return buffer.getvalue()


def write_csv(text: str, out: Path | None) -> None:
    """Write to ``out`` (UTF-8, LF) or to stdout when no path is given."""
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text, encoding="utf-8", newline="\n")
