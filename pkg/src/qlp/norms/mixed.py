"""Vector-valued Schatten norms ||X||_{S_p^N[S_q^M]} of positive X.

For positive X the norm is an optimization over A = B > 0:

* p >= q: sup over ||A||_{2r} = 1 of ||(A (x) I) X (A (x) I)||_q  (reported as a lower bound)
* p <= q: inf over A of ||A||_{2r}^2 ||(A^-1 (x) I) X (A^-1 (x) I)||_q  (an upper bound)

with 1/r = |1/p - 1/q|. A is parametrized as exp(H) for Hermitian H.
The q = 1 optimum is A^2 proportional to rho^{p-1} for the outer marginal rho,
which is always evaluated as a starting point.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import expm

from qlp.core.enums import BoundKind
from qlp.core.errors import DimensionMismatchError
from qlp.core.exponents import check_exponent
from qlp.core.models import ComplexMatrix, MixedNormSpec, OptimizationReport, RealVector
from qlp.linalg.matrix import partial_trace
from qlp.linalg.norms import schatten_norm
from qlp.linalg.spectrum import hermitian_eigh, psd_power, require_psd
from qlp.norms.search import (
    SearchSettings,
    hermitian_from_params,
    maximize,
    minimize_over,
    params_from_hermitian,
)

_LOG_FLOOR = 1e-12


def _normalized(a: ComplexMatrix, r: float) -> ComplexMatrix:
    return a / schatten_norm(a, 2 * r, hermitian=True)


def _sandwich(x: ComplexMatrix, a: ComplexMatrix, inner_dim: int) -> ComplexMatrix:
    lifted = np.kron(a, np.eye(inner_dim))
    return lifted @ x @ lifted.conj().T


def _log_params(a: ComplexMatrix) -> RealVector:
    values, vectors = hermitian_eigh(a)
    logs = np.log(np.clip(values, _LOG_FLOOR, None))
    return params_from_hermitian((vectors * logs) @ vectors.conj().T)


def marginal_start(x: ComplexMatrix, spec: MixedNormSpec) -> ComplexMatrix:
    """A with A^2 proportional to rho^{p-1}, rho the outer marginal; unnormalized."""
    rho = partial_trace(x, [spec.outer_dim, spec.inner_dim], keep=[1])
    if math.isinf(spec.outer_p):
        values, vectors = hermitian_eigh(rho)
        top = vectors[:, -1]
        return np.outer(top, top.conj())
    return psd_power(rho, (spec.outer_p - 1.0) / 2.0)


def mixed_norm_positive(
    x: ComplexMatrix,
    spec: MixedNormSpec,
    settings: SearchSettings | None = None,
) -> OptimizationReport:
    """Evaluate ||x||_{S_p^N[S_q^M]} for PSD x of dimension N*M."""
    settings = settings or SearchSettings()
    p, q = check_exponent(spec.outer_p), check_exponent(spec.inner_q)
    size = spec.outer_dim * spec.inner_dim
    if x.shape != (size, size):
        raise DimensionMismatchError("mixed_norm_positive", (size, size), x.shape)
    x = require_psd(x)

    if p == q or not np.any(x):
        return OptimizationReport(
            value=schatten_norm(x, p, hermitian=True),
            witness=np.eye(spec.outer_dim, dtype=np.complex128),
            restarts_used=0,
            converged=True,
            iterations=0,
            bound=BoundKind.EXACT,
        )
    if spec.is_sup_type:
        return _sup_type(x, spec, settings)
    return _inf_type(x, spec, settings)


def _sup_type(
    x: ComplexMatrix, spec: MixedNormSpec, settings: SearchSettings
) -> OptimizationReport:
    r, inner = spec.r, spec.inner_dim

    def value_at(a: ComplexMatrix) -> float:
        return schatten_norm(_sandwich(x, _normalized(a, r), inner), spec.inner_q, hermitian=True)

    def objective(params: RealVector) -> float:
        return value_at(expm(hermitian_from_params(params, spec.outer_dim)))

    identity = np.eye(spec.outer_dim, dtype=np.complex128)
    candidates = [identity, marginal_start(x, spec)]
    exact_values = [value_at(a) for a in candidates]

    dim_params = spec.outer_dim**2
    outcome = maximize(
        objective,
        [np.zeros(dim_params), _log_params(candidates[1])],
        lambda rng: rng.standard_normal(dim_params) * 0.5,
        settings,
    )
    best_exact = int(np.argmax(exact_values))
    if exact_values[best_exact] >= outcome.best.value:
        value, witness = exact_values[best_exact], _normalized(candidates[best_exact], r)
    else:
        value = outcome.best.value
        witness = _normalized(expm(hermitian_from_params(outcome.best.point, spec.outer_dim)), r)
    return OptimizationReport(
        value=value,
        witness=witness,
        restarts_used=len(outcome.outcomes),
        converged=outcome.best.converged,
        iterations=outcome.iterations,
        bound=BoundKind.LOWER,
        restart_values=tuple(o.value for o in outcome.outcomes),
        witness_value=exact_values[1],
    )


def _inf_type(
    x: ComplexMatrix, spec: MixedNormSpec, settings: SearchSettings
) -> OptimizationReport:
    r, inner = spec.r, spec.inner_dim

    def value_at(a: ComplexMatrix) -> float:
        a_inv = np.linalg.inv(a)
        scale = schatten_norm(a, 2 * r, hermitian=True) ** 2
        return scale * schatten_norm(_sandwich(x, a_inv, inner), spec.inner_q, hermitian=True)

    def objective(params: RealVector) -> float:
        return value_at(expm(hermitian_from_params(params, spec.outer_dim)))

    dim_params = spec.outer_dim**2
    identity_value = value_at(np.eye(spec.outer_dim, dtype=np.complex128))
    outcome = minimize_over(
        objective,
        [np.zeros(dim_params)],
        lambda rng: rng.standard_normal(dim_params) * 0.5,
        settings,
    )
    if identity_value <= outcome.best.value:
        value, witness = identity_value, np.eye(spec.outer_dim, dtype=np.complex128)
    else:
        value = outcome.best.value
        witness = expm(hermitian_from_params(outcome.best.point, spec.outer_dim))
    return OptimizationReport(
        value=value,
        witness=_normalized(witness, r),
        restarts_used=len(outcome.outcomes),
        converged=outcome.best.converged,
        iterations=outcome.iterations,
        bound=BoundKind.UPPER,
        restart_values=tuple(o.value for o in outcome.outcomes),
        witness_value=identity_value,
    )
