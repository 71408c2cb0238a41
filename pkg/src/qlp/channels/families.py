"""The concrete channels and auxiliary maps: identity, depolarizing, erasure, theta."""

from __future__ import annotations

import math

import numpy as np

from qlp.channels.channel import LinearMatrixMap, OutputBlock, QuantumChannel, stack_kraus
from qlp.core.enums import ChannelFamily
from qlp.core.errors import ChannelError, ParameterError
from qlp.core.exponents import check_exponent, conjugate_exponent, reciprocal
from qlp.core.models import ComplexMatrix
from qlp.linalg.matrix import direct_sum
from qlp.weyl.operators import shift_stack


def check_lambda(lam: float) -> float:
    if not 0.0 <= lam <= 1.0:
        raise ChannelError(f"lambda={lam!r} outside [0, 1]: the map is not completely positive")
    return float(lam)


def check_restricted_dim(n: int, d: int) -> None:
    if n < 1:
        raise ParameterError("n", n, "dimension must be at least 1")
    if d < 1 or d > n:
        raise ParameterError("d", d, f"must satisfy 1 <= d <= n={n}")


def identity_channel(n: int) -> QuantumChannel:
    if n < 1:
        raise ParameterError("n", n, "dimension must be at least 1")
    return QuantumChannel(
        name=f"identity({n})",
        in_dim=n,
        kraus=stack_kraus([np.eye(n)]),
        out_blocks=(OutputBlock(n, 1.0),),
        family=ChannelFamily.IDENTITY,
        parameter=1.0,
    )


def depolarizing_weights(n: int, lam: float) -> ComplexMatrix:
    """Weights c_{k,l} of the Weyl twirl, in lexicographic (k, l) order."""
    weights = np.full(n * n, (1.0 - lam) / n**2)
    weights[-1] = lam + (1.0 - lam) / n**2  # T_{n,n} = I
    return weights


def depolarizing(n: int, lam: float) -> QuantumChannel:
    """D_lam(rho) = lam rho + (1 - lam) tr(rho) I/n, with Kraus set sqrt(c_kl) T_kl."""
    if n < 1:
        raise ParameterError("n", n, "dimension must be at least 1")
    check_lambda(lam)
    weights = depolarizing_weights(n, lam)
    keep = weights > 0.0
    kraus = np.sqrt(weights[keep])[:, None, None] * shift_stack(n)[keep]
    return QuantumChannel(
        name=f"depolarizing({n},{lam:g})",
        in_dim=n,
        kraus=kraus,
        out_blocks=(OutputBlock(n, 1.0),),
        family=ChannelFamily.DEPOLARIZING,
        parameter=lam,
    )


def erasure(n: int, lam: float) -> QuantumChannel:
    """E_lam(rho) = lam rho (+) (1 - lam) tr(rho), output in dimension n + 1."""
    if n < 1:
        raise ParameterError("n", n, "dimension must be at least 1")
    check_lambda(lam)
    operators: list[ComplexMatrix] = []
    if lam > 0.0:
        isometry = np.zeros((n + 1, n), dtype=np.complex128)
        isometry[:n, :n] = np.eye(n)
        operators.append(math.sqrt(lam) * isometry)
    if lam < 1.0:
        for i in range(n):
            flag = np.zeros((n + 1, n), dtype=np.complex128)
            flag[n, i] = 1.0
            operators.append(math.sqrt(1.0 - lam) * flag)
    return QuantumChannel(
        name=f"erasure({n},{lam:g})",
        in_dim=n,
        kraus=stack_kraus(operators),
        out_blocks=(OutputBlock(n, lam), OutputBlock(1, 1.0 - lam)),
        family=ChannelFamily.ERASURE,
        parameter=lam,
    )


def spread_factor(n: int, d: int, p: float) -> float:
    """((n-d)/d)^{1/p}, zero when d = n for every p."""
    return ((n - d) / d) ** reciprocal(p) if d < n else 0.0


def theta_map(n: int, d: int, lam: float, p: float) -> LinearMatrixMap:
    """rho -> (lam rho + c tr(rho) I_d) (+) c tr(rho) ((n-d)/d)^{1/p} I_d, c = (1-lam)/n."""
    check_restricted_dim(n, d)
    check_lambda(lam)
    check_exponent(p)
    c = (1.0 - lam) / n
    spread = spread_factor(n, d, p)
    eye = np.eye(d)

    def action(rho: ComplexMatrix) -> ComplexMatrix:
        trace = np.trace(rho)
        return direct_sum([lam * rho + c * trace * eye, c * trace * spread * eye])

    return LinearMatrixMap(
        name=f"theta({n},{d},{lam:g},{p:g})",
        in_dim=d,
        out_dim=2 * d,
        action=action,
        out_blocks=(d, d),
    )


def trace_spread_map(n: int, d: int, p: float) -> LinearMatrixMap:
    """V(rho) = tr(rho) / ((n-d)^{1/p} d^{1/p'}) I_{n-d}, a norm-one map S_p^d -> S_p^{n-d}."""
    check_restricted_dim(n, d)
    if d == n:
        raise ParameterError("d", d, "needs d < n for a nonzero target")
    scale = 1.0 / ((n - d) ** reciprocal(p) * d ** reciprocal(conjugate_exponent(p)))
    eye = np.eye(n - d)
    return LinearMatrixMap(
        name=f"spread({n},{d},{p:g})",
        in_dim=d,
        out_dim=n - d,
        action=lambda rho: scale * np.trace(rho) * eye,
    )


def transpose_map(n: int) -> LinearMatrixMap:
    """rho -> rho^T, positive but not completely positive."""
    return LinearMatrixMap(name=f"transpose({n})", in_dim=n, out_dim=n, action=lambda x: x.T)


def build_channel(family: ChannelFamily, n: int, lam: float) -> QuantumChannel:
    """The family member on C^n; the identity channel ignores lam."""
    if family is ChannelFamily.DEPOLARIZING:
        return depolarizing(n, lam)
    if family is ChannelFamily.ERASURE:
        return erasure(n, lam)
    return identity_channel(n)
