"""Superdense coding embedding H_{p,q}: l_p^{n^2} -> S_q^n(S_p^n) and its projection Q_{p,q}.

H(e_kl) = n |eta_kl><eta_kl| and Q(rho) = (1/n) sum <eta_kl|rho|eta_kl> e_kl, with
H_{p,q} = n^{1/p - 1 - 1/q} H and Q_{p,q} = n^{1 - 1/p + 1/q} Q. Elements of
l^{n^2} are diagonal n^2 x n^2 matrices in lexicographic (k, l) order.
"""

from __future__ import annotations

import numpy as np

from qlp.channels.channel import LinearMatrixMap
from qlp.core.errors import ParameterError
from qlp.core.exponents import reciprocal
from qlp.core.models import ComplexMatrix
from qlp.embeddings.pair import EmbeddingPair, diagonal_sampler
from qlp.embeddings.teleport import check_direction, teleport_embed
from qlp.linalg.matrix import as_matrix, direct_sum, kron
from qlp.linalg.sampling import Seed, rng_from
from qlp.weyl.operators import eta_basis, max_entangled


def _check_n(n: int) -> None:
    if n < 1:
        raise ParameterError("n", n, "dimension must be at least 1")


def eta_embed(n: int, x: ComplexMatrix) -> ComplexMatrix:
    """sum_kl x_kl |eta_kl><eta_kl| from the diagonal of x."""
    vectors = eta_basis(n).vectors
    weights = np.diag(as_matrix(x))
    return np.einsum("a,ai,aj->ij", weights, vectors, vectors.conj())


def eta_project(n: int, rho: ComplexMatrix) -> ComplexMatrix:
    """diag(<eta_kl|rho|eta_kl>)."""
    vectors = eta_basis(n).vectors
    return np.diag(np.einsum("ai,ij,aj->a", vectors.conj(), as_matrix(rho), vectors))


def superdense_scales(n: int, p: float, q: float) -> tuple[float, float]:
    exponent = reciprocal(p) - 1.0 - reciprocal(q)
    return float(n) ** exponent, float(n) ** (-exponent)


def superdense_pair(n: int, p: float, q: float) -> EmbeddingPair:
    _check_n(n)
    p, q = check_direction(p, q)
    embed_scale, project_scale = superdense_scales(n, p, q)
    dim = n * n
    return EmbeddingPair(
        name=f"superdense(n={n},p={p:g},q={q:g})",
        embed=LinearMatrixMap(
            name="H_pq",
            in_dim=dim,
            out_dim=dim,
            action=lambda x: embed_scale * n * eta_embed(n, x),
        ),
        project=LinearMatrixMap(
            name="Q_pq",
            in_dim=dim,
            out_dim=dim,
            action=lambda rho: project_scale * eta_project(n, rho) / n,
        ),
        params={"n": n, "p": p, "q": q},
        claimed_contract="H_{p,q}: l_p^{n^2} -> S_q^n(S_p^n) is a complete isometry",
        sampler=diagonal_sampler(dim),
        embed_scale=embed_scale,
        project_scale=project_scale,
    )


def eta_projection_pair(n: int) -> EmbeddingPair:
    """i(e_kl) = |eta_kl><eta_kl| and P(A) = sum <eta_kl|A|eta_kl> e_kl, P . i = id."""
    _check_n(n)
    dim = n * n
    return EmbeddingPair(
        name=f"eta(n={n})",
        embed=LinearMatrixMap(name="i", in_dim=dim, out_dim=dim, action=lambda x: eta_embed(n, x)),
        project=LinearMatrixMap(
            name="P", in_dim=dim, out_dim=dim, action=lambda rho: eta_project(n, rho)
        ),
        params={"n": n},
        claimed_contract="i: l_inf^{n^2} -> M_{n^2} is a complete isometry, CP-complemented by P",
        sampler=diagonal_sampler(dim),
    )


def eta_projector_residual(n: int) -> float:
    """max || i(e_kl)^2 - i(e_kl) || over the basis, with mutual orthogonality."""
    vectors = eta_basis(n).vectors
    projectors = np.einsum("ai,aj->aij", vectors, vectors.conj())
    products = np.einsum("aij,bjk->abik", projectors, projectors)
    expected = np.einsum("ab,aik->abik", np.eye(n * n), projectors)
    return float(np.max(np.abs(products - expected)))


def assisted_embedding(n: int, rho: ComplexMatrix) -> ComplexMatrix:
    """(P (x) id_n)(rho (x) |psi_n><psi_n|) with unnormalized psi_n = sum_i e_i (x) e_i."""
    psi = np.sqrt(n) * max_entangled(n).amplitudes
    x = kron(as_matrix(rho), np.outer(psi, psi.conj()))
    tensor = x.reshape(n * n, n, n * n, n)
    vectors = eta_basis(n).vectors
    blocks = np.einsum("ax,xiyj,ay->aij", vectors.conj(), tensor, vectors)
    return direct_sum(list(blocks))


def assisted_embedding_residual(n: int, probes: int, seed: Seed) -> float:
    """max || J(rho) - (P (x) id)(rho (x) psi psi*) || over random matrix probes."""
    _check_n(n)
    rng = rng_from(seed)
    worst = 0.0
    for _ in range(probes):
        rho = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        gap = teleport_embed(n, rho) - assisted_embedding(n, rho)
        worst = max(worst, float(np.max(np.abs(gap))))
    return worst

