"""Schatten p-norms and l_p norms; p = infinity is ``math.inf``."""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import eigvalsh, svdvals

from qlp.core.exponents import check_exponent
from qlp.core.models import ComplexMatrix, RealVector
from qlp.linalg.matrix import as_matrix, require_finite
from qlp.linalg.spectrum import hermitian_part


def lp_norm(values: RealVector, p: float) -> float:
    """l_p norm of a vector of absolute values, scaled to avoid overflow."""
    check_exponent(p)
    magnitudes = np.abs(np.asarray(values, dtype=np.float64))
    if magnitudes.size == 0:
        return 0.0
    top = float(magnitudes.max())
    if math.isinf(p) or top == 0.0:
        return top
    return top * float(np.sum((magnitudes / top) ** p)) ** (1.0 / p)


def singular_values(x: ComplexMatrix, hermitian: bool = False) -> RealVector:
    x = require_finite(as_matrix(x), "singular_values")
    if hermitian:
        return np.abs(np.asarray(eigvalsh(hermitian_part(x)), dtype=np.float64))
    return np.asarray(svdvals(x), dtype=np.float64)


def schatten_norm(x: ComplexMatrix, p: float, hermitian: bool = False) -> float:
    """(sum sigma_i^p)^(1/p); the largest singular value when p is infinite.

    Inputs flagged ``hermitian`` use |eigenvalues| instead of an SVD.
    """
    check_exponent(p)
    return lp_norm(singular_values(x, hermitian), p)
