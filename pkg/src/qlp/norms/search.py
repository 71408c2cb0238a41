"""Multi-start Nelder-Mead search shared by the mixed-norm and d-norm evaluations.

Restarts are independent: each owns a generator spawned from the master seed,
runs on its own thread when ``jobs > 1``, and results are merged in restart
order so the outcome never depends on completion order.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from qlp.config.constants import (
    DEFAULT_JOBS,
    DEFAULT_MAX_ITER,
    DEFAULT_RESTARTS,
    DEFAULT_VALUE_TOL,
)
from qlp.core.errors import NonFiniteError, ParameterError
from qlp.core.models import ComplexMatrix, RealVector
from qlp.linalg.sampling import Seed, spawn_seeds

logger = logging.getLogger(__name__)

Objective = Callable[[RealVector], float]
StartSampler = Callable[[np.random.Generator], RealVector]


@dataclass(frozen=True)
class SearchSettings:
    restarts: int = DEFAULT_RESTARTS
    max_iter: int = DEFAULT_MAX_ITER
    value_tol: float = DEFAULT_VALUE_TOL
    seed: Seed = 0
    jobs: int = DEFAULT_JOBS

    def __post_init__(self) -> None:
        if self.restarts < 0:
            raise ParameterError("restarts", self.restarts, "must be nonnegative")
        if self.jobs < 1:
            raise ParameterError("jobs", self.jobs, "must be at least 1")


@dataclass(frozen=True)
class RestartOutcome:
    value: float
    point: RealVector
    converged: bool
    iterations: int


@dataclass(frozen=True)
class SearchOutcome:
    best: RestartOutcome
    outcomes: tuple[RestartOutcome, ...]

    @property
    def iterations(self) -> int:
        return sum(o.iterations for o in self.outcomes)


def _refine(objective: Objective, start: RealVector, settings: SearchSettings) -> RestartOutcome:
    start_value = objective(start)
    if not np.isfinite(start_value):
        raise NonFiniteError("search objective at start point")
    result = minimize(
        lambda x: -objective(x),
        start,
        method="Nelder-Mead",
        options={
            "maxiter": settings.max_iter,
            "fatol": settings.value_tol,
            "xatol": settings.value_tol,
            "adaptive": start.size > 4,
        },
    )
    value = float(-result.fun)
    point = np.asarray(result.x, dtype=np.float64)
    if not np.isfinite(value) or value < start_value:
        value, point = start_value, start
    return RestartOutcome(
        value=value,
        point=point,
        converged=bool(result.success),
        iterations=int(result.nit),
    )


def maximize(
    objective: Objective,
    fixed_starts: Sequence[RealVector],
    sampler: StartSampler,
    settings: SearchSettings,
) -> SearchOutcome:
    """Refine every fixed start and ``settings.restarts`` sampled starts; keep the best."""
    seeds = spawn_seeds(settings.seed, settings.restarts)
    starts = list(fixed_starts) + [sampler(np.random.default_rng(s)) for s in seeds]
    if not starts:
        raise ParameterError("restarts", 0, "need at least one start point")

    def run(index: int) -> RestartOutcome:
        try:
            outcome = _refine(objective, starts[index], settings)
        except Exception:
            logger.exception("Restart %d failed", index)
            raise
        logger.debug(
            "restart %d: value=%.12g iterations=%d converged=%s",
            index, outcome.value, outcome.iterations, outcome.converged,
        )
        return outcome

    if settings.jobs > 1:
        with ThreadPoolExecutor(max_workers=settings.jobs) as pool:
            outcomes = list(pool.map(run, range(len(starts))))
    else:
        outcomes = [run(i) for i in range(len(starts))]

    best = max(outcomes, key=lambda o: o.value)
    return SearchOutcome(best=best, outcomes=tuple(outcomes))


def minimize_over(
    objective: Objective,
    fixed_starts: Sequence[RealVector],
    sampler: StartSampler,
    settings: SearchSettings,
) -> SearchOutcome:
    """Same harness for inf-type problems; values are reported with their true sign."""
    flipped = maximize(lambda x: -objective(x), fixed_starts, sampler, settings)

    def unflip(o: RestartOutcome) -> RestartOutcome:
        return RestartOutcome(-o.value, o.point, o.converged, o.iterations)

    return SearchOutcome(
        best=unflip(flipped.best),
        outcomes=tuple(unflip(o) for o in flipped.outcomes),
    )


def hermitian_from_params(params: RealVector, dim: int) -> ComplexMatrix:
    """Hermitian matrix from dim^2 reals: diagonal, then real and imaginary upper parts."""
    h = np.diag(params[:dim]).astype(np.complex128)
    rows, cols = np.triu_indices(dim, k=1)
    count = rows.size
    upper = params[dim:dim + count] + 1j * params[dim + count:dim + 2 * count]
    h[rows, cols] = upper
    h[cols, rows] = upper.conj()
    return h


def params_from_hermitian(h: ComplexMatrix) -> RealVector:
    dim = h.shape[0]
    rows, cols = np.triu_indices(dim, k=1)
    upper = h[rows, cols]
    return np.concatenate([h.diagonal().real, upper.real, upper.imag]).astype(np.float64)


def state_from_params(params: RealVector) -> ComplexMatrix:
    """Unit complex vector from 2m reals (real parts, then imaginary parts)."""
    half = params.size // 2
    vector = params[:half] + 1j * params[half:]
    norm = np.linalg.norm(vector)
    if norm == 0.0:
        raise NonFiniteError("state_from_params on the zero vector")
    return np.asarray(vector / norm, dtype=np.complex128)


def params_from_state(vector: ComplexMatrix) -> RealVector:
    return np.concatenate([vector.real, vector.imag]).astype(np.float64)
