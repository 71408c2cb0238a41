"""Hermitian eigendecomposition and positivity checks."""

from __future__ import annotations

import numpy as np
from scipy.linalg import eigh, eigvalsh

from qlp.config.constants import HERMITIAN_TOL, PSD_TOL, TRACE_TOL
from qlp.core.errors import NotDensityError, NotHermitianError, NotPositiveError
from qlp.core.models import ComplexMatrix, HermitianSpectrum, RealVector
from qlp.linalg.matrix import as_matrix, require_finite, require_square


def hermitian_part(x: ComplexMatrix, tol: float = HERMITIAN_TOL) -> ComplexMatrix:
    """Return (x + x*)/2 after checking that x is Hermitian up to tol."""
    x = as_matrix(x)
    require_square(x, "hermitian_part")
    require_finite(x, "hermitian_part")
    residual = float(np.max(np.abs(x - x.conj().T))) if x.size else 0.0
    scale = max(1.0, float(np.max(np.abs(x)))) if x.size else 1.0
    if residual > tol * scale:
        raise NotHermitianError(residual, tol)
    return (x + x.conj().T) / 2


def hermitian_eigenvalues(x: ComplexMatrix, tol: float = HERMITIAN_TOL) -> HermitianSpectrum:
    h = hermitian_part(x, tol)
    values = np.asarray(eigvalsh(h), dtype=np.float64)[::-1].copy()
    return HermitianSpectrum(eigenvalues=values, dimension=int(h.shape[0]))


def hermitian_eigh(
    x: ComplexMatrix, tol: float = HERMITIAN_TOL
) -> tuple[RealVector, ComplexMatrix]:
    """Eigenpairs in ascending order, columns of the second array are eigenvectors."""
    values, vectors = eigh(hermitian_part(x, tol))
    return np.asarray(values, dtype=np.float64), np.asarray(vectors, dtype=np.complex128)


def min_eigenvalue(x: ComplexMatrix) -> float:
    return float(hermitian_eigenvalues(x).eigenvalues[-1])


def require_psd(x: ComplexMatrix, tol: float = PSD_TOL) -> ComplexMatrix:
    h = hermitian_part(x)
    lowest = float(eigvalsh(h)[0])
    if lowest < -tol:
        raise NotPositiveError(lowest, tol)
    return h


def require_density(rho: ComplexMatrix, tol: float = TRACE_TOL) -> ComplexMatrix:
    h = require_psd(rho)
    trace = float(np.trace(h).real)
    if abs(trace - 1.0) > tol:
        raise NotDensityError(trace, tol)
    return h


def psd_power(x: ComplexMatrix, exponent: float) -> ComplexMatrix:
    """x**exponent for PSD x; zero eigenvalues stay zero for positive exponents."""
    values, vectors = hermitian_eigh(x)
    values = np.clip(values, 0.0, None)
    powered = np.zeros_like(values)
    support = values > 0.0
    powered[support] = values[support] ** exponent
    return (vectors * powered) @ vectors.conj().T
