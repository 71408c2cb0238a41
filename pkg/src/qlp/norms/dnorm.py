"""Channel d-norms ||id_d (x) N: S_p^d(S_1^n) -> S_p^d(S_p)|| and the entropy gain S_d.

Both are suprema over pure states of C^d (x) C^n. The maximally entangled
witness (a product of them for tensor powers) is evaluated exactly and also
seeds the local search, so the reported value never falls below it.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable

import numpy as np

from qlp.capacities.entropy import entropy_of_psd
from qlp.channels.certify import require_cptp
from qlp.channels.channel import QuantumChannel
from qlp.core.enums import BoundKind
from qlp.core.errors import ParameterError
from qlp.core.exponents import check_exponent
from qlp.core.models import ComplexMatrix, OptimizationReport, RealVector
from qlp.linalg.norms import schatten_norm
from qlp.norms.search import SearchSettings, maximize, params_from_state, state_from_params

logger = logging.getLogger(__name__)

StateObjective = Callable[[ComplexMatrix], float]


def pure_marginal(psi: ComplexMatrix, d: int, n: int) -> ComplexMatrix:
    """(id_d (x) tr)(|psi><psi|) for psi in C^d (x) C^n."""
    m = psi.reshape(d, n)
    return m @ m.conj().T


def _embedded_amplitudes(d: int, n: int) -> ComplexMatrix:
    rank = min(d, n)
    amplitudes = np.zeros(d * n, dtype=np.complex128)
    amplitudes[np.arange(rank) * (n + 1)] = 1.0 / math.sqrt(rank)
    return amplitudes


def _integer_root(value: int, k: int) -> int | None:
    root = round(value ** (1.0 / k))
    for candidate in (root - 1, root, root + 1):
        if candidate >= 1 and candidate**k == value:
            return candidate
    return None


def product_witness(d0: int, n0: int, k: int) -> ComplexMatrix:
    """psi_bar_{d0}^{(x)k} reordered from (d,n,d,n,...) to (d^k)(n^k)."""
    single = _embedded_amplitudes(d0, n0)
    amplitudes = single
    for _ in range(k - 1):
        amplitudes = np.kron(amplitudes, single)
    axes = list(range(0, 2 * k, 2)) + list(range(1, 2 * k, 2))
    return amplitudes.reshape((d0, n0) * k).transpose(axes).reshape(-1)


def witness_state(ch: QuantumChannel, d: int) -> ComplexMatrix:
    """Maximally entangled start for id_d (x) ch; a product of them for tensor powers."""
    if ch.copies > 1:
        n0 = _integer_root(ch.in_dim, ch.copies)
        d0 = _integer_root(d, ch.copies)
        if n0 is not None and d0 is not None and d0 <= n0:
            return product_witness(d0, n0, ch.copies)
    return _embedded_amplitudes(d, ch.in_dim)


def maximize_over_pure_states(
    objective: StateObjective,
    dim: int,
    witness: ComplexMatrix,
    settings: SearchSettings,
) -> OptimizationReport:
    """sup of objective over unit vectors of C^dim; never reports less than the witness."""

    def on_params(params: RealVector) -> float:
        if not np.any(params):
            return -math.inf
        return objective(state_from_params(params))

    witness_value = objective(witness)
    outcome = maximize(
        on_params,
        [params_from_state(witness)],
        lambda rng: rng.standard_normal(2 * dim),
        settings,
    )
    if witness_value >= outcome.best.value:
        value, best_state = witness_value, witness
    else:
        value, best_state = outcome.best.value, state_from_params(outcome.best.point)
    logger.info(
        "pure-state search: witness=%.12g best=%.12g restarts=%d",
        witness_value, value, len(outcome.outcomes),
    )
    return OptimizationReport(
        value=value,
        witness=best_state,
        restarts_used=len(outcome.outcomes),
        converged=outcome.best.converged,
        iterations=outcome.iterations,
        bound=BoundKind.LOWER,
        restart_values=tuple(o.value for o in outcome.outcomes),
        witness_value=witness_value,
    )


def _check_d(d: int) -> None:
    if d < 1:
        raise ParameterError("d", d, "must be at least 1")


def d_norm_ratio(ch: QuantumChannel, d: int, p: float, psi: ComplexMatrix) -> float:
    """||(id_d (x) N)(psi psi*)||_p / ||(id_d (x) tr)(psi psi*)||_p."""
    rho = np.outer(psi, psi.conj())
    numerator = schatten_norm(ch.apply_ancilla(rho, d), p, hermitian=True)
    return numerator / schatten_norm(pure_marginal(psi, d, ch.in_dim), p, hermitian=True)


def channel_d_norm(
    ch: QuantumChannel,
    d: int,
    p: float,
    settings: SearchSettings | None = None,
) -> OptimizationReport:
    _check_d(d)
    p = check_exponent(p)
    require_cptp(ch)
    return maximize_over_pure_states(
        lambda psi: d_norm_ratio(ch, d, p, psi),
        d * ch.in_dim,
        witness_state(ch, d),
        settings or SearchSettings(),
    )


def entropy_gain(ch: QuantumChannel, d: int, psi: ComplexMatrix) -> float:
    """S((id_d (x) tr)(psi psi*)) - S((id_d (x) N)(psi psi*)), natural log."""
    rho = np.outer(psi, psi.conj())
    marginal = pure_marginal(psi, d, ch.in_dim)
    return entropy_of_psd(marginal) - entropy_of_psd(ch.apply_ancilla(rho, d))


def s_d(ch: QuantumChannel, d: int, settings: SearchSettings | None = None) -> OptimizationReport:
    _check_d(d)
    require_cptp(ch)
    return maximize_over_pure_states(
        lambda psi: entropy_gain(ch, d, psi),
        d * ch.in_dim,
        witness_state(ch, d),
        settings or SearchSettings(),
    )
