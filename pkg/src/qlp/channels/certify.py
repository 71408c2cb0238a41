"""CP / TP / covariance certification of channels."""

from __future__ import annotations

import logging

import numpy as np

from qlp.channels.channel import QuantumChannel
from qlp.config.constants import BLOCK_TOL, COVARIANCE_SAMPLES, COVARIANCE_TOL, CP_TOL, TP_TOL
from qlp.core.enums import ChannelFamily
from qlp.core.errors import ChannelError
from qlp.core.models import CertificationReport, ComplexMatrix
from qlp.linalg.matrix import direct_sum, off_block_residual
from qlp.linalg.sampling import Seed, random_density, random_unitary, spawn_seeds
from qlp.linalg.spectrum import min_eigenvalue

logger = logging.getLogger(__name__)

_COVARIANT_FAMILIES = frozenset(
    {ChannelFamily.DEPOLARIZING, ChannelFamily.ERASURE, ChannelFamily.IDENTITY}
)


def declares_unitary_covariance(ch: QuantumChannel) -> bool:
    """Single-copy members of the depolarizing, erasure and identity families."""
    return ch.family in _COVARIANT_FAMILIES and ch.copies == 1


def _output_unitary(ch: QuantumChannel, u: ComplexMatrix) -> ComplexMatrix:
    """U on each block carrying the input system, the identity on flag blocks."""
    parts = [u if dim == ch.in_dim else np.eye(dim) for dim in ch.block_dims]
    return direct_sum(parts)


def covariance_residual(ch: QuantumChannel, samples: int, seed: Seed) -> float:
    """max || N(U* rho U) - V* N(rho) V || over sampled Haar unitaries U."""
    worst = 0.0
    for child in spawn_seeds(seed, samples):
        unitary_seed, state_seed = child.spawn(2)
        u = random_unitary(ch.in_dim, unitary_seed)
        rho = random_density(ch.in_dim, ch.in_dim, state_seed)
        v = _output_unitary(ch, u)
        lhs = ch.apply(u.conj().T @ rho @ u)
        rhs = v.conj().T @ ch.apply(rho) @ v
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def output_block_residual(ch: QuantumChannel, samples: int, seed: Seed) -> float:
    """Largest entry of N(rho) outside the declared output blocks over random states."""
    worst = 0.0
    for child in spawn_seeds(seed, samples):
        rho = random_density(ch.in_dim, ch.in_dim, child)
        worst = max(worst, off_block_residual(ch.apply(rho), ch.block_dims))
    return worst


def certify(
    ch: QuantumChannel,
    *,
    samples: int = COVARIANCE_SAMPLES,
    seed: Seed = 0,
) -> CertificationReport:
    """Choi positivity, Kraus completeness, block-diagonal outputs and sampled covariance."""
    block_seed, covariance_seed = spawn_seeds(seed, 2)
    lowest = min_eigenvalue(ch.choi())
    tp_residual = ch.tp_residual()
    block_residual = output_block_residual(ch, samples, block_seed)
    covariant: bool | None = None
    residual: float | None = None
    if declares_unitary_covariance(ch):
        residual = covariance_residual(ch, samples, covariance_seed)
        covariant = residual <= COVARIANCE_TOL
    report = CertificationReport(
        cp=lowest >= -CP_TOL,
        min_choi_eigenvalue=lowest,
        tp=tp_residual <= TP_TOL,
        tp_residual=tp_residual,
        block_diagonal=block_residual <= BLOCK_TOL,
        block_residual=block_residual,
        covariant=covariant,
        covariance_residual=residual,
    )
    logger.debug("certified %s: %s", ch.name, report)
    return report


def certify_map_cp(choi: ComplexMatrix) -> tuple[bool, float]:
    lowest = min_eigenvalue(choi)
    return lowest >= -CP_TOL, lowest


def require_cptp(ch: QuantumChannel) -> None:
    """Raise ChannelError unless the channel is trace preserving and completely positive."""
    tp_residual = ch.tp_residual()
    if tp_residual > TP_TOL:
        raise ChannelError(f"{ch.name} is not trace preserving (residual {tp_residual:.3e})")
    lowest = min_eigenvalue(ch.choi())
    if lowest < -CP_TOL:
        raise ChannelError(f"{ch.name} is not completely positive (min Choi eig {lowest:.3e})")
