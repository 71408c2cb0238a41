"""Von Neumann and Shannon entropies, natural log unless a base is given."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from scipy.special import xlogy

from qlp.config.constants import EIGEN_CLAMP, TRACE_TOL
from qlp.core.enums import EntropyBase
from qlp.core.errors import NotDensityError, NotPositiveError, ParameterError
from qlp.core.models import ComplexMatrix, RealVector
from qlp.linalg.spectrum import hermitian_eigenvalues

LN2 = math.log(2.0)


def to_base(nats: float, base: EntropyBase) -> float:
    return nats / LN2 if base is EntropyBase.BITS else nats


def shannon_nats(weights: Sequence[float] | RealVector) -> float:
    """-sum w log w with 0 log 0 = 0."""
    values = np.asarray(weights, dtype=np.float64)
    return float(-np.sum(xlogy(values, values)))


def shannon_entropy(
    weights: Sequence[float] | RealVector, base: EntropyBase = EntropyBase.NATS
) -> float:
    values = np.asarray(weights, dtype=np.float64)
    if np.any(values < 0.0):
        raise ParameterError("weights", weights, "must be nonnegative")
    return to_base(shannon_nats(values), base)


def binary_entropy(t: float, base: EntropyBase = EntropyBase.NATS) -> float:
    return shannon_entropy([t, 1.0 - t], base)


def spectrum_of_state(rho: ComplexMatrix, trace_tol: float = TRACE_TOL) -> RealVector:
    """Eigenvalues of a density matrix, clamped into [0, 1] after the tolerance checks."""
    values = hermitian_eigenvalues(rho).eigenvalues
    trace = float(values.sum())
    if abs(trace - 1.0) > trace_tol:
        raise NotDensityError(trace, trace_tol)
    if values.size and values[-1] < -EIGEN_CLAMP:
        raise NotPositiveError(float(values[-1]), EIGEN_CLAMP)
    return np.clip(values, 0.0, 1.0)


def von_neumann_entropy(rho: ComplexMatrix, base: EntropyBase = EntropyBase.NATS) -> float:
    return to_base(shannon_nats(spectrum_of_state(rho)), base)


def entropy_of_psd(x: ComplexMatrix) -> float:
    """-tr(x ln x) for a PSD matrix of any trace, used for unnormalized blocks."""
    values = np.clip(hermitian_eigenvalues(x).eigenvalues, 0.0, None)
    return shannon_nats(values)
