"""The commutative map Psi_{alpha,beta,delta}: l_1^{d^2} -> l_p^{d^2} (+)_p l_p^{d^2} and
the factorization of theta through teleportation.

Psi(e_ij) = alpha e_ij (+) 0 + beta sum_kl e_kl (+) delta sum_kl e_kl, so
(id_d (x) Psi) . j_1 = J_{p,inf} . theta once alpha, beta, delta are fixed from
(n, d, lambda, p).
"""

from __future__ import annotations

import math

import numpy as np

from qlp.channels.channel import LinearMatrixMap
from qlp.channels.families import check_lambda, check_restricted_dim, spread_factor, theta_map
from qlp.core.errors import ParameterError
from qlp.core.exponents import check_exponent, conjugate_exponent, reciprocal
from qlp.core.models import ComplexMatrix
from qlp.embeddings.direct_sum import direct_sum_pair
from qlp.embeddings.teleport import teleport_embed
from qlp.linalg.matrix import as_matrix, diagonal_blocks, direct_sum
from qlp.linalg.norms import lp_norm
from qlp.linalg.sampling import Seed, random_density, spawn_seeds


def psi_map(d: int, alpha: float, beta: float, delta: float) -> LinearMatrixMap:
    if d < 1:
        raise ParameterError("d", d, "must be at least 1")
    size = d * d

    def action(x: ComplexMatrix) -> ComplexMatrix:
        values = np.diag(as_matrix(x))
        total = values.sum()
        first = alpha * values + beta * total
        second = np.full(size, delta * total)
        return np.diag(np.concatenate([first, second]))

    return LinearMatrixMap(
        name=f"Psi({d},{alpha:g},{beta:g},{delta:g})",
        in_dim=size,
        out_dim=2 * size,
        action=action,
        out_blocks=(size, size),
    )


def psi_norm(d: int, alpha: float, beta: float, delta: float, p: float) -> float:
    """(|alpha + beta|^p + (d^2 - 1)|beta|^p + d^2 |delta|^p)^{1/p}."""
    p = check_exponent(p)
    terms = [abs(alpha + beta), abs(beta), abs(delta)]
    if math.isinf(p):
        return max(terms[0], terms[1] if d > 1 else 0.0, terms[2])
    weights = [1.0, d * d - 1.0, float(d * d)]
    return sum(w * t**p for w, t in zip(weights, terms, strict=True)) ** (1.0 / p)


def psi_norm_by_basis(d: int, alpha: float, beta: float, delta: float, p: float) -> float:
    """max over the l_1 extreme points e_ij of ||Psi(e_ij)||_p."""
    mapping = psi_map(d, alpha, beta, delta)
    size = d * d
    best = 0.0
    for i in range(size):
        unit = np.zeros((size, size), dtype=np.complex128)
        unit[i, i] = 1.0
        best = max(best, lp_norm(np.diag(mapping(unit)), p))
    return best


def factorization_params(n: int, d: int, lam: float, p: float) -> tuple[float, float, float]:
    """alpha = lam d^{1/p'}, beta = (1-lam)/(d^{1/p} n), delta = beta ((n-d)/d)^{1/p}."""
    check_restricted_dim(n, d)
    check_lambda(lam)
    p = check_exponent(p)
    alpha = lam * d ** reciprocal(conjugate_exponent(p))
    beta = (1.0 - lam) / (d ** reciprocal(p) * n)
    return alpha, beta, beta * spread_factor(n, d, p)


def apply_on_classical(
    mapping: LinearMatrixMap, x: ComplexMatrix, inner_dim: int
) -> ComplexMatrix:
    """(mapping (x) id) on a classical-first block-diagonal x; mapping must be diagonal."""
    blocks = np.array(diagonal_blocks(x, [inner_dim] * mapping.in_dim))
    columns = [
        np.diag(mapping(np.diag(np.eye(mapping.in_dim)[a]))) for a in range(mapping.in_dim)
    ]
    coefficients = np.array(columns).T
    return direct_sum(list(np.einsum("ba,aij->bij", coefficients, blocks)))


def factorization_sides(
    n: int, d: int, lam: float, p: float, rho: ComplexMatrix
) -> tuple[ComplexMatrix, ComplexMatrix]:
    """((id (x) Psi) . j_1)(rho) and (J_{p,inf} . theta)(rho), both classical-first."""
    alpha, beta, delta = factorization_params(n, d, lam, p)
    left = apply_on_classical(psi_map(d, alpha, beta, delta), teleport_embed(d, rho), d)
    right = direct_sum_pair((d, d), p, math.inf).embed(theta_map(n, d, lam, p)(rho))
    return left, right


def factorization_residual(
    n: int, d: int, lam: float, p: float, probes: int = 50, seed: Seed = 0
) -> float:
    """max ||left - right||_2 over random density probes."""
    worst = 0.0
    for child in spawn_seeds(seed, probes):
        left, right = factorization_sides(n, d, lam, p, random_density(d, d, child))
        worst = max(worst, float(np.linalg.norm(left - right)))
    return worst
