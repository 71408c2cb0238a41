"""Run configuration assembled from CLI flags and the environment."""

from __future__ import annotations

import math
import os
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path

from qlp.config.constants import (
    DEFAULT_JOBS,
    DEFAULT_RESTARTS,
    DEFAULT_SEED,
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    GRID_DECIMALS,
    SEED_ENV_VAR,
)
from qlp.core.enums import ChannelFamily, EntropyBase
from qlp.core.errors import ConfigError

_GRID_SLACK = 1e-12


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: ChannelFamily | None = None
    n: int | None = None
    d: int | None = None
    k: int = 1
    lambdas: tuple[float, ...] = ()
    ps: tuple[float, ...] = ()
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    restarts: int = DEFAULT_RESTARTS
    tol: float = DEFAULT_TOL
    jobs: int = DEFAULT_JOBS
    out: Path | None = None
    base: EntropyBase = EntropyBase.BITS

    def validate(self) -> RunConfig:
        """Return self, or raise ConfigError naming the first violated invariant."""
        if not self.lambdas:
            raise ConfigError("the lambda grid is empty; pass --lambda or --sweep")
        bad = [lam for lam in self.lambdas if not 0.0 <= lam <= 1.0]
        if bad:
            raise ConfigError(f"lambda values must lie in [0, 1], got {bad}")
        if any(math.isnan(p) or p < 1.0 for p in self.ps):
            raise ConfigError(f"exponents must satisfy p >= 1, got {list(self.ps)}")
        if self.n is not None and self.n < 1:
            raise ConfigError(f"--n must be at least 1, got {self.n}")
        if self.d is not None and self.d < 1:
            raise ConfigError(f"--d must be at least 1, got {self.d}")
        if self.trials < 1:
            raise ConfigError(f"--trials must be at least 1, got {self.trials}")
        if self.restarts < 0:
            raise ConfigError(f"--restarts must be nonnegative, got {self.restarts}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be at least 1, got {self.jobs}")
        if not self.tol > 0.0:
            raise ConfigError(f"--tol must be positive, got {self.tol}")
        return self


def parse_sweep(text: str) -> tuple[float, ...]:
    """'a:b:s' -> a, a+s, ... up to b inclusive, each rounded to GRID_DECIMALS."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"--sweep expects start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError as e:
        raise ConfigError(f"--sweep has a non-numeric field: {text!r}") from e
    if not step > 0.0:
        raise ConfigError(f"--sweep step must be positive, got {step}")
    if stop < start:
        raise ConfigError(f"--sweep stop {stop} is below start {start}")
    count = math.floor((stop - start) / step + _GRID_SLACK) + 1
    return tuple(round(start + i * step, GRID_DECIMALS) for i in range(count))


def lambda_grid(values: Sequence[float] | None, sweep: str | None) -> tuple[float, ...]:
    if values and sweep:
        raise ConfigError("pass either --lambda or --sweep, not both")
    if sweep:
        return parse_sweep(sweep)
    return tuple(values or ())


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise ConfigError(f"expected comma-separated integers, got {text!r}") from e


def resolve_seed(flag: int | None, environ: Mapping[str, str] | None = None) -> int:
    """--seed, then $QLP_SEED, then DEFAULT_SEED."""
    if flag is not None:
        return flag
    env = os.environ if environ is None else environ
    raw = env.get(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"{SEED_ENV_VAR}={raw!r} is not an integer") from e
