"""Shared test fixtures for qlp."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
from typer.testing import CliRunner

from qlp.norms.search import SearchSettings


@pytest.fixture
def fixtures_dir() -> Path:
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def quick_search() -> SearchSettings:
    """A handful of restarts; the witness start already attains the closed forms."""
    return SearchSettings(restarts=3, seed=11)
