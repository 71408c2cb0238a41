"""Closed-form d-norms and d-restricted product capacities.

Everything is computed in nats and converted at the boundary; capacities
default to bits.
"""

from __future__ import annotations

import math

from scipy.special import xlogy

from qlp.capacities.entropy import to_base, von_neumann_entropy
from qlp.channels.families import check_lambda, check_restricted_dim, depolarizing
from qlp.config.constants import GAP_PEAK_STEP, GRID_DECIMALS
from qlp.core.enums import ChannelFamily, EntropyBase
from qlp.core.errors import ParameterError
from qlp.core.exponents import check_exponent
from qlp.core.models import GapWitness
from qlp.linalg.matrix import basis_unit
from qlp.weyl.operators import max_entangled


def _check(n: int, d: int, lam: float) -> None:
    check_restricted_dim(n, d)
    check_lambda(lam)


def dnorm_depolarizing_closed(n: int, d: int, lam: float, p: float) -> float:
    """(1/d (lam d + c)^p + c^p (n - 1/d))^{1/p} with c = (1 - lam)/n."""
    _check(n, d, lam)
    p = check_exponent(p)
    c = (1.0 - lam) / n
    peak = lam * d + c
    if math.isinf(p):
        return max(peak, c)
    return (peak**p / d + c**p * (n - 1.0 / d)) ** (1.0 / p)


def dnorm_erasure_closed(n: int, d: int, lam: float, p: float) -> float:
    """(lam^p d^{p-1} + (1 - lam)^p)^{1/p}."""
    _check(n, d, lam)
    p = check_exponent(p)
    if math.isinf(p):
        return max(lam * d, 1.0 - lam)
    return (lam**p * d ** (p - 1.0) + (1.0 - lam) ** p) ** (1.0 / p)


def capacity_depolarizing_nats(n: int, d: int, lam: float) -> float:
    _check(n, d, lam)
    nd = n * d
    c = (1.0 - lam) / nd
    mu = lam + c
    return math.log(nd) + float(xlogy(mu, mu)) + (nd - 1) * float(xlogy(c, c))


def capacity_depolarizing(
    n: int, d: int, lam: float, base: EntropyBase = EntropyBase.BITS
) -> float:
    """log(nd) + mu log mu + (nd - 1) c log c with c = (1-lam)/(nd), mu = lam + c."""
    return to_base(capacity_depolarizing_nats(n, d, lam), base)


def capacity_erasure(n: int, d: int, lam: float, base: EntropyBase = EntropyBase.BITS) -> float:
    _check(n, d, lam)
    return to_base(lam * math.log(n * d), base)


def entanglement_assisted_depolarizing(
    n: int, lam: float, base: EntropyBase = EntropyBase.BITS
) -> float:
    """Mutual information S(A) + S(B) - S(AB) of (id (x) D_lam) on psi_bar_n."""
    channel = depolarizing(n, lam)
    joint = channel.apply_ancilla(max_entangled(n).density(), n)
    nats = 2.0 * math.log(n) - von_neumann_entropy(joint)
    return to_base(nats, base)


def holevo_depolarizing(n: int, lam: float, base: EntropyBase = EntropyBase.BITS) -> float:
    """Holevo quantity of the uniform ensemble of basis states sent through D_lam."""
    channel = depolarizing(n, lam)
    output = channel.apply(basis_unit(n, 1, 1))
    return to_base(math.log(n) - von_neumann_entropy(output), base)


def gap_f(n: int, d: int, lam: float, base: EntropyBase = EntropyBase.BITS) -> float:
    """f(n, d, lam) = C^{d^2} + C^1 - 2 C^d for the depolarizing channel."""
    if d * d > n:
        raise ParameterError("d", d, f"gap needs d^2 <= n={n}")
    return tensor_gap_witness(n, d, lam, base).difference


def tensor_gap_witness(
    n: int, d: int, lam: float, base: EntropyBase = EntropyBase.BITS
) -> GapWitness:
    if d * d > n:
        raise ParameterError("d", d, f"gap needs d^2 <= n={n}")
    one_sided = capacity_depolarizing(n, d * d, lam, base) + capacity_depolarizing(n, 1, lam, base)
    return GapWitness(one_sided=one_sided, balanced=2.0 * capacity_depolarizing(n, d, lam, base))


def footnote_combination(lam: float, n: int = 3, base: EntropyBase = EntropyBase.BITS) -> float:
    """C^3 + C^1 - 2 C^2 at n = 3, where d^2 <= n fails and the sign flips."""
    if n < 3:
        raise ParameterError("n", n, "needs n >= 3")
    return (
        capacity_depolarizing(n, 3, lam, base)
        + capacity_depolarizing(n, 1, lam, base)
        - 2.0 * capacity_depolarizing(n, 2, lam, base)
    )


def gap_peak(
    n: int, d: int, step: float = GAP_PEAK_STEP, base: EntropyBase = EntropyBase.BITS
) -> tuple[float, float]:
    """(lam, f) maximizing gap_f on the grid 0, step, ..., 1."""
    count = round(1.0 / step)
    grid = [round(i * step, GRID_DECIMALS) for i in range(count + 1)]
    values = [gap_f(n, d, lam, base) for lam in grid]
    best = max(range(len(grid)), key=values.__getitem__)
    return grid[best], values[best]


def dnorm_closed(family: ChannelFamily, n: int, d: int, lam: float, p: float) -> float:
    if family is ChannelFamily.ERASURE:
        return dnorm_erasure_closed(n, d, lam, p)
    if family is ChannelFamily.IDENTITY:
        lam = 1.0
    return dnorm_depolarizing_closed(n, d, lam, p)


def capacity_closed(
    family: ChannelFamily, n: int, d: int, lam: float, base: EntropyBase = EntropyBase.BITS
) -> float:
    if family is ChannelFamily.ERASURE:
        return capacity_erasure(n, d, lam, base)
    if family is ChannelFamily.IDENTITY:
        lam = 1.0
    return capacity_depolarizing(n, d, lam, base)
