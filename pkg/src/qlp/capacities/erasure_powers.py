"""Erasure tensor powers: the upper-bound pipeline for C_prod^{d^k}(E^{(x)k}) and the
numeric V_d of the averaged partial-trace channels N_s."""

from __future__ import annotations

import math

from qlp.capacities.closed_forms import capacity_erasure
from qlp.capacities.derivative import v_d
from qlp.capacities.entropy import to_base
from qlp.channels.compose import erasure_average_component
from qlp.channels.families import check_lambda, check_restricted_dim
from qlp.core.enums import EntropyBase
from qlp.core.errors import ParameterError
from qlp.core.models import BoundsReport, OptimizationReport, ProbabilityVector
from qlp.norms.search import SearchSettings


def binomial_weights(k: int, lam: float) -> tuple[float, ...]:
    """P(s of k uses get through) = C(k,s) lam^s (1-lam)^{k-s}, s = 0..k."""
    if k < 1:
        raise ParameterError("k", k, "must be at least 1")
    check_lambda(lam)
    weights = tuple(math.comb(k, s) * lam**s * (1.0 - lam) ** (k - s) for s in range(k + 1))
    return ProbabilityVector(weights).weights


def binomial_mean_residual(k: int, lam: float) -> float:
    """|sum_s C(k,s) lam^s (1-lam)^{k-s} s - k lam|."""
    weights = binomial_weights(k, lam)
    return abs(math.fsum(w * s for s, w in enumerate(weights)) - k * lam)


def erasure_power_bounds(
    n: int, d: int, k: int, lam: float, base: EntropyBase = EntropyBase.BITS
) -> BoundsReport:
    """Independent use k lam log(nd) <= C_prod^{d^k}(E^{(x)k}) <= pipeline upper bound.

    The upper bound sums the block log terms s ln n and the averaged
    partial-trace bound V_d(N_s) <= (s/k) ln d^k over the binomial weights.
    ``value`` is the closed form evaluated at the total dimensions n^k, d^k.
    """
    check_restricted_dim(n, d)
    weights = binomial_weights(k, lam)
    upper = math.fsum(
        w * (s * math.log(n) + (s / k) * k * math.log(d)) for s, w in enumerate(weights)
    )
    lower = k * capacity_erasure(n, d, lam, EntropyBase.NATS)
    value = capacity_erasure(n**k, d**k, lam, EntropyBase.NATS)
    upper, lower, value = (to_base(x, base) for x in (upper, lower, value))
    return BoundsReport(
        lower=lower,
        value=value,
        upper=upper,
        lower_slack=value - lower,
        upper_slack=upper - value,
    )


def v_d_erasure_component_numeric(
    n: int, k: int, s: int, d: int, settings: SearchSettings | None = None
) -> OptimizationReport:
    """Pure-state search for V_d(N_s); bounded above by (s/k) ln d."""
    if d < 1 or d > n**k:
        raise ParameterError("d", d, f"must satisfy 1 <= d <= n^k={n**k}")
    return v_d(erasure_average_component(k, s, n), d, settings)


def erasure_component_bound(k: int, s: int, d: int) -> float:
    """(s/k) ln d in nats."""
    return (s / k) * math.log(d)
