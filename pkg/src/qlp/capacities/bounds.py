"""Two-sided checks: the regularized depolarizing capacity interval and the theta
domination of the depolarizing d-norm."""

from __future__ import annotations

import math

import numpy as np

from qlp.capacities.closed_forms import capacity_depolarizing, dnorm_depolarizing_closed
from qlp.capacities.entropy import binary_entropy, to_base
from qlp.channels.families import check_lambda, check_restricted_dim, depolarizing, theta_map
from qlp.core.enums import EntropyBase
from qlp.core.models import BoundsReport
from qlp.embeddings.commutative import factorization_params, psi_norm
from qlp.linalg.norms import schatten_norm
from qlp.norms.dnorm import d_norm_ratio
from qlp.weyl.operators import embedded_max_entangled, max_entangled


def _report(lower: float, value: float, upper: float) -> BoundsReport:
    return BoundsReport(
        lower=lower,
        value=value,
        upper=upper,
        lower_slack=value - lower,
        upper_slack=upper - value,
    )


def depolarizing_bounds_check(
    n: int, d: int, lam: float, base: EntropyBase = EntropyBase.BITS
) -> BoundsReport:
    """lam log(nd) - H(mu) <= C_prod^d(D_lam) <= lam log(nd), mu = lam + (1-lam)/(nd)."""
    check_restricted_dim(n, d)
    check_lambda(lam)
    mu = lam + (1.0 - lam) / (n * d)
    upper = to_base(lam * math.log(n * d), base)
    lower = upper - binary_entropy(mu, base)
    return _report(lower, capacity_depolarizing(n, d, lam, base), upper)


def theta_witness_value(n: int, d: int, lam: float, p: float) -> float:
    """||(id_d (x) theta)(psi_bar_d psi_bar_d*)||_p / ||I_d/d||_p."""
    theta = theta_map(n, d, lam, p)
    image = theta.apply_ancilla(max_entangled(d).density(), d)
    marginal = np.eye(d, dtype=np.complex128) / d
    return schatten_norm(image, p, hermitian=True) / schatten_norm(marginal, p, hermitian=True)


def theta_domination_check(n: int, d: int, lam: float, p: float) -> BoundsReport:
    """D_lam at the witness <= theta at the witness <= ||Psi|| from the factorization.

    All three equal the closed-form depolarizing d-norm.
    """
    witness = embedded_max_entangled(d, n).amplitudes
    lower = d_norm_ratio(depolarizing(n, lam), d, p, witness)
    upper = psi_norm(d, *factorization_params(n, d, lam, p), p)
    return _report(lower, theta_witness_value(n, d, lam, p), upper)


def closed_form_gap(n: int, d: int, lam: float, p: float, report: BoundsReport) -> float:
    """Largest distance of the three values from the closed-form d-norm."""
    closed = dnorm_depolarizing_closed(n, d, lam, p)
    return max(abs(report.lower - closed), abs(report.value - closed), abs(report.upper - closed))
