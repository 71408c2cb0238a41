"""Exponent arithmetic for p in [1, inf].

p = infinity is ``math.inf`` and handled symbolically: conjugates and
reciprocals never divide by a large float.
"""

from __future__ import annotations

import math

from qlp.core.errors import ExponentError


def check_exponent(p: float) -> float:
    if math.isnan(p) or p < 1.0:
        raise ExponentError(p, "Schatten exponents must satisfy 1 <= p <= inf")
    return float(p)


def reciprocal(p: float) -> float:
    """1/p with 1/inf = 0."""
    return 0.0 if math.isinf(p) else 1.0 / p


def conjugate_exponent(p: float) -> float:
    """p' with 1/p + 1/p' = 1."""
    check_exponent(p)
    if p == 1.0:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)
