"""Discrete Weyl operators u_k, v_l, T_{k,l} and the maximally entangled basis.

Public indices are 1-based and reduced mod n into 1..n, so u_{-k} = u_{n-k}.
Phases are computed from the exact angle 2*pi*((k*j) mod n)/n per entry.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from qlp.core.errors import ParameterError
from qlp.core.models import ComplexMatrix, EtaBasis, PureStateVector, WeylIndex
from qlp.linalg.matrix import as_matrix, kron


def _check_n(n: int) -> None:
    if n < 1:
        raise ParameterError("n", n, "dimension must be at least 1")


def _phases(n: int, k: int) -> ComplexMatrix:
    j = np.arange(1, n + 1)
    angle = 2 * np.pi * ((k * j) % n) / n
    return np.exp(1j * angle)


def weyl_u(n: int, k: int) -> ComplexMatrix:
    """Diagonal phase operator u_k e_j = exp(2 pi i k j / n) e_j."""
    _check_n(n)
    index = WeylIndex.of(n, k, 1)
    return np.diag(_phases(n, index.k)).astype(np.complex128)


def weyl_v(n: int, l: int) -> ComplexMatrix:  # noqa: E741
    """Cyclic shift v_l e_j = e_{l+j mod n}."""
    _check_n(n)
    index = WeylIndex.of(n, 1, l)
    shift = np.zeros((n, n), dtype=np.complex128)
    for j in range(1, n + 1):
        shift[(index.l + j - 1) % n, j - 1] = 1.0
    return shift


def shift_op(n: int, k: int, l: int) -> ComplexMatrix:  # noqa: E741
    """T_{k,l} = v_l u_{-k}, so T_{k,l} e_j = exp(-2 pi i k j / n) e_{l+j}."""
    return weyl_v(n, l) @ weyl_u(n, -k)


@lru_cache(maxsize=32)
def shift_stack(n: int) -> ComplexMatrix:
    """All T_{k,l} stacked in lexicographic (k, l) order, shape (n^2, n, n). Read-only."""
    _check_n(n)
    stack = np.array(
        [shift_op(n, k, l) for k in range(1, n + 1) for l in range(1, n + 1)],  # noqa: E741
        dtype=np.complex128,
    )
    stack.flags.writeable = False
    return stack


def twirl_sum(n: int, x: ComplexMatrix) -> ComplexMatrix:
    """sum_{k,l} T_{k,l} x T_{k,l}^*."""
    ts = shift_stack(n)
    return np.einsum("aij,jk,alk->il", ts, as_matrix(x), ts.conj())


def conjugations(n: int, x: ComplexMatrix) -> ComplexMatrix:
    """The n^2 matrices T_{k,l} x T_{k,l}^*, shape (n^2, n, n)."""
    ts = shift_stack(n)
    return np.einsum("aij,jk,alk->ail", ts, as_matrix(x), ts.conj())


def max_entangled(n: int) -> PureStateVector:
    """psi_bar_n = n^{-1/2} sum_i e_i (x) e_i."""
    _check_n(n)
    amplitudes = np.zeros(n * n, dtype=np.complex128)
    amplitudes[np.arange(n) * (n + 1)] = 1.0 / np.sqrt(n)
    return PureStateVector(factor_dims=(n, n), amplitudes=amplitudes)


def embedded_max_entangled(d: int, n: int) -> PureStateVector:
    """psi_bar_d placed on the first d basis vectors of C^d (x) C^n."""
    if d < 1 or d > n:
        raise ParameterError("d", d, f"must satisfy 1 <= d <= n={n}")
    amplitudes = np.zeros(d * n, dtype=np.complex128)
    amplitudes[np.arange(d) * (n + 1)] = 1.0 / np.sqrt(d)
    return PureStateVector(factor_dims=(d, n), amplitudes=amplitudes)


@lru_cache(maxsize=32)
def _eta_vectors(n: int) -> ComplexMatrix:
    psi = max_entangled(n).amplitudes
    rows = [
        kron(weyl_u(n, k), weyl_v(n, l)) @ psi
        for k in range(1, n + 1)
        for l in range(1, n + 1)  # noqa: E741
    ]
    vectors = np.array(rows, dtype=np.complex128)
    vectors.flags.writeable = False
    return vectors


def eta_basis(n: int) -> EtaBasis:
    """eta_{k,l} = (u_k (x) v_l) psi_bar_n, an orthonormal basis of C^{n^2}."""
    _check_n(n)
    return EtaBasis(n=n, vectors=_eta_vectors(n))


def teleport_identity_residual(n: int, h: ComplexMatrix) -> float:
    """|| h (x) psi_bar_n - (1/n) sum_{k,l} eta_{k,l} (x) T_{k,l} h ||."""
    h = as_matrix(h).reshape(n)
    lhs = np.kron(h, max_entangled(n).amplitudes)
    moved = np.einsum("aij,j->ai", shift_stack(n), h)
    rhs = np.einsum("ax,ai->xi", _eta_vectors(n), moved).reshape(-1) / n
    return float(np.linalg.norm(lhs - rhs))
