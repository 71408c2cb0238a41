"""Direct-sum teleportation: S_p^{n_1} (+)_p ... (+)_p S_p^{n_k} -> S_q^d(l_p^{sum n_i^2}).

d = lcm(n_1, ..., n_k) and block i carries the multiplicity ancilla I_{d/n_i}.
The image is block diagonal with d x d blocks indexed by (i, k, l) in
lexicographic order; block (i, k, l) is

    d^{-1/q} n_i^{-1/p} (T_kl rho_i T_kl^*) (x) I_{d/n_i}.

The projection Gamma reads block (i, k, l), traces out the ancilla and
undoes the twirl:

    Gamma_i(A) = d^{-(1-1/q)} n_i^{-1/p'} sum_kl T_kl^* (id (x) tr)(A_{i,kl}) T_kl.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from qlp.channels.channel import LinearMatrixMap
from qlp.core.errors import ParameterError
from qlp.core.exponents import conjugate_exponent, reciprocal
from qlp.core.models import ComplexMatrix
from qlp.embeddings.pair import EmbeddingPair, block_diagonal_sampler
from qlp.embeddings.teleport import check_direction
from qlp.linalg.matrix import diagonal_blocks, direct_sum, partial_trace
from qlp.weyl.operators import conjugations, shift_stack


def _check_dims(dims: Sequence[int]) -> tuple[int, ...]:
    sizes = tuple(int(n) for n in dims)
    if not sizes:
        raise ParameterError("dims", dims, "need at least one block")
    if any(n < 1 for n in sizes):
        raise ParameterError("dims", dims, "block dimensions must be positive")
    return sizes


def common_dimension(dims: Sequence[int]) -> int:
    return math.lcm(*_check_dims(dims))


def direct_sum_pair(dims: Sequence[int], p: float, q: float) -> EmbeddingPair:
    sizes = _check_dims(dims)
    p, q = check_direction(p, q)
    d = math.lcm(*sizes)
    classical = sum(n * n for n in sizes)
    embed_weights = [d ** -reciprocal(q) * n ** -reciprocal(p) for n in sizes]
    project_weights = [
        d ** -(1.0 - reciprocal(q)) * n ** -reciprocal(conjugate_exponent(p)) for n in sizes
    ]

    def embed(x: ComplexMatrix) -> ComplexMatrix:
        blocks: list[ComplexMatrix] = []
        for n, rho, weight in zip(sizes, diagonal_blocks(x, sizes), embed_weights, strict=True):
            ancilla = np.eye(d // n)
            blocks.extend(weight * np.kron(image, ancilla) for image in conjugations(n, rho))
        return direct_sum(blocks)

    def project(a: ComplexMatrix) -> ComplexMatrix:
        images = diagonal_blocks(a, [d] * classical)
        parts: list[ComplexMatrix] = []
        start = 0
        for n, weight in zip(sizes, project_weights, strict=True):
            count = n * n
            own = images[start:start + count]
            reduced = np.array([partial_trace(block, [n, d // n], keep=[1]) for block in own])
            ts = shift_stack(n)
            parts.append(weight * np.einsum("aji,ajk,akl->il", ts.conj(), reduced, ts))
            start += count
        return direct_sum(parts)

    total = sum(sizes)
    return EmbeddingPair(
        name=f"direct_sum(dims={sizes},p={p:g},q={q:g})",
        embed=LinearMatrixMap(
            name="J_tilde",
            in_dim=total,
            out_dim=d * classical,
            action=embed,
            out_blocks=(d,) * classical,
        ),
        project=LinearMatrixMap(
            name="Gamma",
            in_dim=d * classical,
            out_dim=total,
            action=project,
            out_blocks=sizes,
        ),
        params={"dims": sizes, "d": d, "p": p, "q": q},
        claimed_contract="J_tilde: (+)_p S_p^{n_i} -> S_q^d(l_p) is a complete isometry",
        sampler=block_diagonal_sampler(sizes),
    )
