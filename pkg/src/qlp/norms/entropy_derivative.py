"""Derivatives at p = 1 of p-norm quantities.

The d/dp of ||rho||_p and of channel d-norms at p = 1 is taken one-sided,
from the right, and extrapolated to h = 0.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence

import numpy as np

from qlp.config.constants import RICHARDSON_STEPS
from qlp.core.errors import ExponentError, NonFiniteError
from qlp.core.exponents import check_exponent
from qlp.core.models import ComplexMatrix
from qlp.linalg.norms import schatten_norm
from qlp.linalg.spectrum import require_density


def entropy_quotient_F(rho: ComplexMatrix, p: float) -> float:
    """(1 - ||rho||_p) / (p - 1), which tends to S(rho) in nats as p -> 1."""
    p = check_exponent(p)
    if p == 1.0:
        raise ExponentError(p, "F(rho, p) is undefined at p = 1; use von_neumann_entropy")
    rho = require_density(rho)
    if math.isinf(p):
        return 0.0
    return (1.0 - schatten_norm(rho, p, hermitian=True)) / (p - 1.0)


def derivative_at_one(
    f: Callable[[float], float],
    steps: Sequence[float] = RICHARDSON_STEPS,
    value_at_one: float | None = 1.0,
) -> float:
    """Right derivative of f at 1 from forward differences, extrapolated to h = 0.

    The forward differences at the given steps are interpolated by a
    polynomial in h, whose constant term is the estimate. Pass
    ``value_at_one=None`` to sample f(1) instead of assuming f(1) = 1.
    """
    base = f(1.0) if value_at_one is None else value_at_one
    hs = np.asarray(steps, dtype=np.float64)
    samples = np.array([f(1.0 + h) for h in hs], dtype=np.float64)
    if not (np.isfinite(base) and np.all(np.isfinite(samples))):
        raise NonFiniteError("derivative_at_one samples")
    differences = (samples - base) / hs
    if hs.size == 1:
        return float(differences[0])
    coefficients = np.polyfit(hs, differences, hs.size - 1)
    return float(coefficients[-1])
