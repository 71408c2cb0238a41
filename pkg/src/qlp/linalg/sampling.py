"""Seeded random states and unitaries."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from scipy.stats import unitary_group

from qlp.core.errors import ParameterError
from qlp.core.models import ComplexMatrix, PureStateVector

Seed = int | np.random.SeedSequence | np.random.Generator


def rng_from(seed: Seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def spawn_seeds(master: Seed, count: int) -> list[np.random.SeedSequence]:
    """Independent child seeds, identical for a given master regardless of worker count."""
    if isinstance(master, np.random.Generator):
        return [np.random.SeedSequence(int(s)) for s in master.integers(0, 2**62, size=count)]
    if isinstance(master, np.random.SeedSequence):
        return master.spawn(count)
    return np.random.SeedSequence(master).spawn(count)


def complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> ComplexMatrix:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_pure_state(factor_dims: Sequence[int], seed: Seed) -> PureStateVector:
    dims = tuple(int(d) for d in factor_dims)
    if not dims or any(d < 1 for d in dims):
        raise ParameterError("factor_dims", factor_dims, "need positive factor dimensions")
    rng = rng_from(seed)
    amplitudes = complex_gaussian(rng, (int(np.prod(dims)),))
    amplitudes /= np.linalg.norm(amplitudes)
    return PureStateVector(factor_dims=dims, amplitudes=amplitudes)


def random_density(dim: int, rank: int, seed: Seed) -> ComplexMatrix:
    """W W* / tr(W W*) with W a dim x rank complex Gaussian matrix."""
    if rank < 1 or rank > dim:
        raise ParameterError("rank", rank, f"must satisfy 1 <= rank <= dim={dim}")
    rng = rng_from(seed)
    w = complex_gaussian(rng, (dim, rank))
    rho = w @ w.conj().T
    rho /= np.trace(rho).real
    return (rho + rho.conj().T) / 2


def random_unitary(dim: int, seed: Seed) -> ComplexMatrix:
    """Haar-random unitary."""
    if dim == 1:
        phase = rng_from(seed).uniform(0.0, 2 * np.pi)
        return np.array([[np.exp(1j * phase)]], dtype=np.complex128)
    return np.asarray(unitary_group.rvs(dim, random_state=rng_from(seed)), dtype=np.complex128)
