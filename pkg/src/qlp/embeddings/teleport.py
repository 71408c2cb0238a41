"""Teleportation embedding J_{p,q}: S_p^n -> S_q^n(l_p^{n^2}) and its projection W_{p,q}.

J(rho) = (1/n) sum_{k,l} e_kl (x) T_kl rho T_kl^*,  W(A) = (1/n) sum_{k,l} T_kl^* A_kl T_kl,
J_{p,q} = n^{1 - 1/p - 1/q} J and W_{p,q} = n^{1/p + 1/q - 1} W.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from qlp.channels.channel import LinearMatrixMap
from qlp.core.errors import ParameterError
from qlp.core.exponents import check_exponent, conjugate_exponent, reciprocal
from qlp.core.models import ComplexMatrix, MixedNormSpec, OptimizationReport
from qlp.embeddings.pair import EmbeddingPair, matrix_sampler
from qlp.linalg.matrix import diagonal_blocks, direct_sum, swap_factors
from qlp.linalg.norms import schatten_norm
from qlp.norms.mixed import mixed_norm_positive
from qlp.norms.search import SearchSettings
from qlp.weyl.operators import conjugations, shift_stack

logger = logging.getLogger(__name__)


def check_direction(p: float, q: float) -> tuple[float, float]:
    p, q = check_exponent(p), check_exponent(q)
    if p > q:
        raise ParameterError(
            "p",
            p,
            f"only p <= q is implemented; p > q={q:g} follows by duality from the pair "
            f"(p', q') = ({conjugate_exponent(p):g}, {conjugate_exponent(q):g})",
        )
    return p, q


def teleport_embed(n: int, rho: ComplexMatrix) -> ComplexMatrix:
    """Unscaled J(rho), an n^3 x n^3 block-diagonal matrix."""
    return direct_sum(list(conjugations(n, rho) / n))


def teleport_project(n: int, a: ComplexMatrix) -> ComplexMatrix:
    """Unscaled W(A); only the n^2 diagonal n x n blocks of A are read."""
    blocks = np.array(diagonal_blocks(a, [n] * (n * n)))
    ts = shift_stack(n)
    return np.einsum("aji,ajk,akl->il", ts.conj(), blocks, ts) / n


def teleport_scales(n: int, p: float, q: float) -> tuple[float, float]:
    exponent = 1.0 - reciprocal(p) - reciprocal(q)
    return float(n) ** exponent, float(n) ** (-exponent)


def teleport_pair(n: int, p: float, q: float) -> EmbeddingPair:
    if n < 1:
        raise ParameterError("n", n, "dimension must be at least 1")
    p, q = check_direction(p, q)
    embed_scale, project_scale = teleport_scales(n, p, q)
    return EmbeddingPair(
        name=f"teleport(n={n},p={p:g},q={q:g})",
        embed=LinearMatrixMap(
            name="J_pq",
            in_dim=n,
            out_dim=n**3,
            action=lambda rho: embed_scale * teleport_embed(n, rho),
            out_blocks=(n,) * (n * n),
        ),
        project=LinearMatrixMap(
            name="W_pq",
            in_dim=n**3,
            out_dim=n,
            action=lambda a: project_scale * teleport_project(n, a),
        ),
        params={"n": n, "p": p, "q": q},
        claimed_contract="J_{p,q}: S_p^n -> S_q^n(l_p^{n^2}) is a complete isometry",
        sampler=matrix_sampler(n),
        embed_scale=embed_scale,
        project_scale=project_scale,
    )


@dataclass(frozen=True)
class IsometrySample:
    """||x||_p against the mixed norm of J_{p,q}(x) for one PSD sample."""

    source_norm: float
    image: OptimizationReport

    @property
    def gap(self) -> float:
        return self.image.value - self.source_norm


def teleport_isometry_sample(
    n: int,
    p: float,
    q: float,
    x: ComplexMatrix,
    settings: SearchSettings | None = None,
) -> IsometrySample:
    """Evaluate ||J_{p,q}(x)||_{S_q^n(l_p^{n^2})} with the quantum factor moved outside."""
    pair = teleport_pair(n, p, q)
    image = swap_factors(pair.embed(x), [n * n, n], [2, 1])
    spec = MixedNormSpec(outer_p=q, inner_q=p, outer_dim=n, inner_dim=n * n)
    report = mixed_norm_positive(image, spec, settings)
    sample = IsometrySample(source_norm=schatten_norm(x, p, hermitian=True), image=report)
    logger.debug("isometry sample n=%d p=%g q=%g gap=%.3e", n, p, q, sample.gap)
    return sample
