"""Residuals of the Weyl-system identities used by the teleportation embeddings."""

from __future__ import annotations

import numpy as np

from qlp.core.models import ComplexMatrix
from qlp.linalg.matrix import as_matrix, basis_vector, kron
from qlp.weyl.operators import (
    eta_basis,
    max_entangled,
    shift_stack,
    twirl_sum,
    weyl_u,
    weyl_v,
)


def roots_of_unity_residual(n: int) -> float:
    """max_p |sum_{k=1}^n exp(2 pi i k p / n) - n delta_{p,n}|."""
    worst = 0.0
    k = np.arange(1, n + 1)
    for p in range(1, n + 1):
        total = np.sum(np.exp(2j * np.pi * ((k * p) % n) / n))
        expected = n if p == n else 0
        worst = max(worst, float(abs(total - expected)))
    return worst


def basis_expansion_residual(n: int) -> float:
    """e_j (x) e_k against n^{-1/2} sum_s exp(-2 pi i s j/n) (u_s (x) v_{k-j}) psi_bar_n."""
    psi = max_entangled(n).amplitudes
    worst = 0.0
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            lhs = np.kron(basis_vector(n, j), basis_vector(n, k))
            rhs = np.zeros(n * n, dtype=np.complex128)
            for s in range(1, n + 1):
                phase = np.exp(-2j * np.pi * ((s * j) % n) / n)
                rhs += phase * (kron(weyl_u(n, s), weyl_v(n, k - j)) @ psi)
            worst = max(worst, float(np.linalg.norm(lhs - rhs / np.sqrt(n))))
    return worst


def twirl_residual(n: int, rho: ComplexMatrix) -> float:
    """|| n^{-2} sum T rho T^* - tr(rho) I/n ||_max."""
    rho = as_matrix(rho)
    averaged = twirl_sum(n, rho) / n**2
    target = np.trace(rho) * np.eye(n) / n
    return float(np.max(np.abs(averaged - target)))


def unit_twirl_residual(n: int) -> float:
    """max_{p,q} || sum T |p><q| T^* - delta_{pq} n I ||_max."""
    worst = 0.0
    for p in range(n):
        for q in range(n):
            unit = np.zeros((n, n), dtype=np.complex128)
            unit[p, q] = 1.0
            target = n * np.eye(n) if p == q else np.zeros((n, n))
            worst = max(worst, float(np.max(np.abs(twirl_sum(n, unit) - target))))
    return worst


def entangled_state_expansion_residual(n: int, rho: ComplexMatrix) -> float:
    """rho (x) |psi_bar><psi_bar| against n^{-2} sum |eta><eta'| (x) T rho T'^*."""
    rho = as_matrix(rho)
    lhs = np.kron(rho, max_entangled(n).density())
    stack = shift_stack(n)
    cross = np.einsum("aij,jk,blk->abil", stack, rho, stack.conj())
    eta = eta_basis(n).vectors
    tensor = np.einsum("ax,by,abij->xiyj", eta, eta.conj(), cross)
    rhs = tensor.reshape(n**3, n**3) / n**2
    return float(np.max(np.abs(lhs - rhs)))
