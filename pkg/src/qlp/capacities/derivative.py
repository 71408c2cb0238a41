"""Capacities of covariant channels from the derivative of the d-norm at p = 1.

For a covariant channel with output blocks (n_j, mu_j),

    C_prod^d = sum_j mu_j ln n_j + V_d,   V_d = S_d + H(mu),

and S_d is the p -> 1 derivative of the d-norm.
"""

from __future__ import annotations

import logging
import math
from dataclasses import replace

import numpy as np

from qlp.capacities.closed_forms import capacity_depolarizing, capacity_erasure
from qlp.capacities.entropy import LN2, entropy_of_psd, shannon_nats
from qlp.channels.certify import declares_unitary_covariance
from qlp.channels.channel import QuantumChannel
from qlp.config.constants import WEIGHT_TOL
from qlp.core.enums import ChannelFamily
from qlp.core.errors import ChannelError
from qlp.core.models import (
    CapacityReport,
    ComplexMatrix,
    OptimizationReport,
    ProbabilityVector,
    PureStateVector,
)
from qlp.norms.dnorm import channel_d_norm, pure_marginal, s_d, witness_state
from qlp.norms.entropy_derivative import derivative_at_one
from qlp.norms.search import SearchSettings

logger = logging.getLogger(__name__)


def _is_erasure_power(ch: QuantumChannel) -> bool:
    return ch.family is ChannelFamily.ERASURE and ch.copies > 1


def closed_form_capacity_bits(ch: QuantumChannel, d: int) -> float:
    """C_prod^d in bits for the channels with a closed form; d is the total ancilla dimension."""
    if ch.parameter is None:
        raise ChannelError(f"{ch.name} carries no family parameter")
    lam = ch.parameter
    if ch.family is ChannelFamily.ERASURE:
        # for k copies this is k lam log(n0 d0) with in_dim = n0^k, d = d0^k
        return capacity_erasure(ch.in_dim, d, lam)
    if ch.family in (ChannelFamily.DEPOLARIZING, ChannelFamily.IDENTITY):
        return capacity_depolarizing(ch.in_dim, d, lam)
    raise ChannelError(f"{ch.name} has no closed-form capacity")


def block_terms(ch: QuantumChannel) -> tuple[float, float]:
    """(sum_j mu_j ln n_j, H(mu)) from the declared output blocks."""
    log_term = math.fsum(block.weight * math.log(block.dim) for block in ch.out_blocks)
    return log_term, shannon_nats(ProbabilityVector(ch.block_weights).weights)


def capacity_via_derivative(
    ch: QuantumChannel, d: int, settings: SearchSettings | None = None
) -> CapacityReport:
    if not (declares_unitary_covariance(ch) or _is_erasure_power(ch)):
        raise ChannelError(
            f"{ch.name} is not a covariant channel in scope; the derivative formula does not apply"
        )
    settings = settings or SearchSettings()
    log_term, mixing = block_terms(ch)
    slope = derivative_at_one(lambda p: channel_d_norm(ch, d, p, settings).value)
    numeric = (log_term + mixing + slope) / LN2
    closed = closed_form_capacity_bits(ch, d)
    logger.info("capacity %s d=%d: closed=%.12g numeric=%.12g", ch.name, d, closed, numeric)
    return CapacityReport(
        channel=ch.name,
        d=d,
        lam=ch.parameter if ch.parameter is not None else math.nan,
        closed_form_bits=closed,
        numeric_bits=numeric,
        witness=PureStateVector(factor_dims=(d, ch.in_dim), amplitudes=witness_state(ch, d)),
        abs_gap=abs(numeric - closed),
    )


def output_blocks_with_ancilla(
    ch: QuantumChannel, x: ComplexMatrix, d: int
) -> list[ComplexMatrix]:
    """The blocks (id_d (x) N)(x) restricted to C^d (x) C^{n_j}, one per output block."""
    out = ch.out_dim
    tensor = ch.apply_ancilla(x, d).reshape(d, out, d, out)
    blocks: list[ComplexMatrix] = []
    start = 0
    for size in ch.block_dims:
        part = tensor[:, start:start + size, :, start:start + size]
        blocks.append(part.reshape(d * size, d * size))
        start += size
    return blocks


def v_d_blockwise(ch: QuantumChannel, d: int, psi: ComplexMatrix) -> float:
    """sum_j mu_j [S(marginal) - S((id (x) N_j)(psi psi*))] with N_j = block_j / mu_j."""
    marginal_entropy = entropy_of_psd(pure_marginal(psi, d, ch.in_dim))
    total = 0.0
    blocks = output_blocks_with_ancilla(ch, np.outer(psi, psi.conj()), d)
    for weight, block in zip(ch.block_weights, blocks, strict=True):
        if weight <= WEIGHT_TOL:
            continue
        total += weight * (marginal_entropy - entropy_of_psd(block / weight))
    return total


def v_d(ch: QuantumChannel, d: int, settings: SearchSettings | None = None) -> OptimizationReport:
    """V_d = S_d + H(mu), searched over pure states like S_d."""
    _, mixing = block_terms(ch)
    report = s_d(ch, d, settings)
    witness_value = None if report.witness_value is None else report.witness_value + mixing
    return replace(
        report,
        value=report.value + mixing,
        restart_values=tuple(v + mixing for v in report.restart_values),
        witness_value=witness_value,
    )
