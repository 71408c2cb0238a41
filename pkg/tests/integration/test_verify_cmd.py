"""Integration tests for `qlp verify` and the top-level app."""

from __future__ import annotations

from pathlib import Path

import pytest
from typer.testing import CliRunner

from qlp import __version__
from qlp.cli.app import app


class TestVerifyCommand:
    def test_teleport(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify", "teleport", "--n", "2", "--trials", "10"])
        assert result.exit_code == 0, result.output
        assert "All checks passed." in result.output

    def test_ssa_with_dims(self, runner: CliRunner) -> None:
        result = runner.invoke(
            app, ["verify", "ssa", "--dims", "2,2,2", "--trials", "20", "--seed", "4"]
        )
        assert result.exit_code == 0, result.output
        assert "3/3 checks passed" in result.output

    def test_report_file(self, runner: CliRunner, tmp_path: Path) -> None:
        report = tmp_path / "weyl.txt"
        result = runner.invoke(
            app, ["verify", "weyl", "--n", "3", "--seed", "5", "--report", str(report)]
        )
        assert result.exit_code == 0, result.output
        text = report.read_text(encoding="utf-8")
        assert "suite: weyl" in text
        assert "seed: 5" in text
        assert "[FAIL]" not in text

    def test_unknown_suite(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify", "bogus"])
        assert result.exit_code == 2

    def test_bad_dims(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify", "ssa", "--dims", "2,x"])
        assert result.exit_code == 2

    @pytest.mark.slow
    def test_all(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify", "all", "--trials", "20", "--jobs", "2"])
        assert result.exit_code == 0, result.output


class TestApp:
    def test_version(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert result.output.strip() == f"qlp {__version__}"

    def test_no_args_shows_help(self, runner: CliRunner) -> None:
        result = runner.invoke(app, [])
        assert "norm" in result.output
        assert "verify" in result.output
