"""Embedding/projection pairs and their complementation checks.

Classical factors l_p^m are stored as diagonal m x m blocks, so every map
here goes between matrix spaces. Images of the teleportation-type maps are
laid out classical index first: sum_i e_ii (x) B_i is the block-diagonal
matrix with blocks B_i.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from qlp.channels.certify import certify_map_cp
from qlp.channels.channel import LinearMatrixMap
from qlp.core.models import ComplexMatrix
from qlp.linalg.sampling import Seed, complex_gaussian, rng_from

ProbeSampler = Callable[[np.random.Generator], ComplexMatrix]


@dataclass(frozen=True)
class EmbeddingPair:
    """embed: source -> target, project: target -> source, with project . embed = id.

    ``embed_scale`` and ``project_scale`` are the positive prefactors of the
    p,q-scaled maps; dividing them out leaves the completely positive cores.
    """

    name: str
    embed: LinearMatrixMap
    project: LinearMatrixMap
    params: dict[str, object]
    claimed_contract: str
    sampler: ProbeSampler = field(repr=False)
    embed_scale: float = 1.0
    project_scale: float = 1.0

    def roundtrip(self, x: ComplexMatrix) -> ComplexMatrix:
        return self.project(self.embed(x))

    def complementation_residual(self, probes: int, seed: Seed) -> float:
        """max || project(embed(x)) - x ||_max over sampled source elements."""
        rng = rng_from(seed)
        worst = 0.0
        for _ in range(probes):
            x = self.sampler(rng)
            worst = max(worst, float(np.max(np.abs(self.roundtrip(x) - x))))
        return worst

    def min_choi_eigenvalues(self) -> tuple[float, float]:
        """Smallest Choi eigenvalues of the unscaled embed and project maps."""
        _, embed_low = certify_map_cp(self.embed.choi() / self.embed_scale)
        _, project_low = certify_map_cp(self.project.choi() / self.project_scale)
        return embed_low, project_low


def matrix_sampler(dim: int) -> ProbeSampler:
    return lambda rng: complex_gaussian(rng, (dim, dim))


def diagonal_sampler(dim: int) -> ProbeSampler:
    return lambda rng: np.diag(complex_gaussian(rng, (dim,)))


def block_diagonal_sampler(sizes: Sequence[int]) -> ProbeSampler:
    def sample(rng: np.random.Generator) -> ComplexMatrix:
        total = sum(sizes)
        x = np.zeros((total, total), dtype=np.complex128)
        start = 0
        for size in sizes:
            x[start:start + size, start:start + size] = complex_gaussian(rng, (size, size))
            start += size
        return x

    return sample
