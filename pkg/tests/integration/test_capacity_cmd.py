"""Integration tests for `qlp capacity`."""

from __future__ import annotations

import csv
import io
import math

import pytest
from typer.testing import CliRunner

from qlp.cli.app import app


def _rows(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


class TestCapacityCommand:
    def test_erasure_one_bit(self, runner: CliRunner) -> None:
        result = runner.invoke(
            app,
            ["capacity", "--channel", "erasure", "--n", "2", "--d", "2",
             "--lambda", "0.5", "--restarts", "2", "--seed", "1"],
        )
        assert result.exit_code == 0, result.output
        (row,) = _rows(result.stdout)
        assert row["closed_bits"] == "1"
        assert float(row["derivative_bits"]) == pytest.approx(1.0, abs=1e-3)

    def test_nats(self, runner: CliRunner) -> None:
        args = ["capacity", "--n", "2", "--lambda", "0.3", "--restarts", "1", "--seed", "2"]
        bits = runner.invoke(app, args)
        nats = runner.invoke(app, [*args, "--base", "nats"])
        assert bits.exit_code == 0, bits.output
        assert nats.exit_code == 0, nats.output
        (bit_row,) = _rows(bits.stdout)
        (nat_row,) = _rows(nats.stdout)
        assert float(nat_row["closed_bits"]) == pytest.approx(
            float(bit_row["closed_bits"]) * math.log(2.0)
        )

    def test_power_needs_erasure(self, runner: CliRunner) -> None:
        result = runner.invoke(
            app,
            ["capacity", "--channel", "depolarizing", "--n", "2", "--k", "2", "--lambda", "0.5"],
        )
        assert result.exit_code == 2

    def test_bad_base(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["capacity", "--n", "2", "--lambda", "0.5", "--base", "trits"])
        assert result.exit_code == 2

    @pytest.mark.slow
    def test_depolarizing_sweep(self, runner: CliRunner) -> None:
        result = runner.invoke(
            app,
            ["capacity", "--channel", "depolarizing", "--n", "2", "--d", "2",
             "--sweep", "0:1:0.05", "--restarts", "4", "--jobs", "4"],
        )
        assert result.exit_code == 0, result.output
        rows = _rows(result.stdout)
        assert len(rows) == 21
        assert all(float(r["abs_gap"]) <= 1e-3 for r in rows)
