"""Tests for run configuration parsing and validation."""

from __future__ import annotations

import pytest

from qlp.config.constants import DEFAULT_SEED
from qlp.config.settings import RunConfig, lambda_grid, parse_int_list, parse_sweep, resolve_seed
from qlp.core.errors import ConfigError


class TestParseSweep:
    def test_inclusive_grid(self) -> None:
        grid = parse_sweep("0.05:0.95:0.05")
        assert len(grid) == 19
        assert grid[0] == 0.05
        assert grid[-1] == 0.95

    def test_unit_interval(self) -> None:
        grid = parse_sweep("0:1:0.05")
        assert len(grid) == 21
        assert grid[10] == 0.5

    def test_single_point(self) -> None:
        assert parse_sweep("0.3:0.3:0.1") == (0.3,)

    @pytest.mark.parametrize("text", ["0:1", "a:1:0.1", "0:1:0", "1:0:0.1"])
    def test_rejects(self, text: str) -> None:
        with pytest.raises(ConfigError):
            parse_sweep(text)


class TestLambdaGrid:
    def test_values(self) -> None:
        assert lambda_grid([0.2, 0.4], None) == (0.2, 0.4)

    def test_empty(self) -> None:
        assert lambda_grid(None, None) == ()

    def test_rejects_both(self) -> None:
        with pytest.raises(ConfigError, match="not both"):
            lambda_grid([0.2], "0:1:0.5")


class TestParseIntList:
    def test_parses(self) -> None:
        assert parse_int_list("2,3, 2") == (2, 3, 2)

    def test_rejects(self) -> None:
        with pytest.raises(ConfigError):
            parse_int_list("2,x")


class TestResolveSeed:
    def test_flag_wins(self) -> None:
        assert resolve_seed(5, {"QLP_SEED": "9"}) == 5

    def test_environment(self) -> None:
        assert resolve_seed(None, {"QLP_SEED": "9"}) == 9

    def test_default(self) -> None:
        assert resolve_seed(None, {}) == DEFAULT_SEED
        assert resolve_seed(None, {"QLP_SEED": " "}) == DEFAULT_SEED

    def test_rejects_garbage(self) -> None:
        with pytest.raises(ConfigError, match="QLP_SEED"):
            resolve_seed(None, {"QLP_SEED": "abc"})


class TestRunConfig:
    def _make_config(self, **overrides: object) -> RunConfig:
        fields: dict[str, object] = {"command": "norm", "n": 2, "lambdas": (0.5,), "ps": (2.0,)}
        fields.update(overrides)
        return RunConfig(**fields)  # type: ignore[arg-type]

    def test_valid(self) -> None:
        config = self._make_config()
        assert config.validate() is config

    @pytest.mark.parametrize(
        "overrides",
        [
            {"lambdas": ()},
            {"lambdas": (1.5,)},
            {"ps": (0.5,)},
            {"n": 0},
            {"d": 0},
            {"trials": 0},
            {"restarts": -1},
            {"jobs": 0},
            {"tol": 0.0},
        ],
    )
    def test_rejects(self, overrides: dict[str, object]) -> None:
        with pytest.raises(ConfigError):
            self._make_config(**overrides).validate()
