"""Property suites behind ``qlp verify``.

Each suite returns CheckResults; a failed identity or inequality is a failed
check, never an exception.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass

import numpy as np

from qlp.capacities.bounds import closed_form_gap, theta_domination_check
from qlp.capacities.entropy import von_neumann_entropy
from qlp.capacities.erasure_powers import binomial_mean_residual, erasure_power_bounds
from qlp.capacities.inequalities import (
    fannes_check,
    product_state,
    pure_tripartite_state,
    ssa_check,
    ssa_slack,
    v_d_erasure_component_check,
)
from qlp.config.constants import (
    ADDITIVITY_TOL,
    BOUND_SLACK,
    CONTRACTION_SLACK,
    CP_TOL,
    DEFAULT_JOBS,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    ENTROPY_LIMIT_STEP,
    ENTROPY_LIMIT_TOL,
    IDENTITY_TOL,
    ISOMETRY_TOL,
)
from qlp.core.enums import VerifySuite
from qlp.core.models import CheckResult, InequalityReport, VerificationReport
from qlp.embeddings.commutative import factorization_residual, psi_norm, psi_norm_by_basis
from qlp.embeddings.direct_sum import common_dimension, direct_sum_pair
from qlp.embeddings.pair import EmbeddingPair
from qlp.embeddings.superdense import (
    assisted_embedding_residual,
    eta_projection_pair,
    eta_projector_residual,
    superdense_pair,
)
from qlp.embeddings.teleport import teleport_isometry_sample, teleport_pair
from qlp.linalg.sampling import complex_gaussian, random_density, rng_from, spawn_seeds
from qlp.norms.entropy_derivative import entropy_quotient_F
from qlp.norms.search import SearchSettings
from qlp.weyl.identities import (
    basis_expansion_residual,
    entangled_state_expansion_residual,
    roots_of_unity_residual,
    twirl_residual,
    unit_twirl_residual,
)
from qlp.weyl.operators import eta_basis, teleport_identity_residual

logger = logging.getLogger(__name__)

WEYL_DIMS = (2, 3, 4, 5)
TELEPORT_DIMS = (2, 3, 4, 5)
CHOI_MAX_DIM = 4
EXPONENT_PAIRS = ((1.0, 1.0), (1.0, 2.0), (2.0, 2.0), (1.0, math.inf), (2.0, math.inf))
MIXED_EXPONENT_PAIRS = ((1.0, 2.0), (1.0, math.inf))
CONTRACTION_RESTARTS = 2
DIRECT_SUM_DIMS = ((2, 3), (2, 4))
FACTORIZATION_CASES = ((2, 2), (4, 2), (6, 3))
FACTORIZATION_LAMBDAS = (0.0, 0.5, 1.0)
FACTORIZATION_EXPONENTS = (1.0, 2.0, 4.0)
SSA_DIMS = ((2, 2, 2), (2, 3, 2))
LAMBDA_GRID = tuple(round(0.05 * i, 12) for i in range(21))


@dataclass(frozen=True)
class VerifyOptions:
    n: int | None = None
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    dims: tuple[int, ...] | None = None
    jobs: int = DEFAULT_JOBS


def _residual(name: str, suite: VerifySuite, measured: float, tolerance: float) -> CheckResult:
    return CheckResult(
        name=name,
        suite=suite.value,
        passed=bool(measured <= tolerance),
        measured=measured,
        tolerance=tolerance,
    )


def _slack(suite: VerifySuite, report: InequalityReport) -> CheckResult:
    return CheckResult(
        name=report.name,
        suite=suite.value,
        passed=report.passed,
        measured=report.min_slack,
        tolerance=report.tolerance,
        detail=f"min slack over {report.trials} trials",
    )


def _fmt(p: float) -> str:
    return "inf" if math.isinf(p) else f"{p:g}"


class SuiteVerifier:
    """Runs the property suites and collects a VerificationReport."""

    def __init__(self, options: VerifyOptions | None = None) -> None:
        self._options = options or VerifyOptions()
        self._suites: dict[VerifySuite, Callable[[], list[CheckResult]]] = {
            VerifySuite.WEYL: self._weyl,
            VerifySuite.TELEPORT: self._teleport,
            VerifySuite.SUPERDENSE: self._superdense,
            VerifySuite.DIRECTSUM: self._direct_sum,
            VerifySuite.FACTORIZATION: self._factorization,
            VerifySuite.SSA: self._ssa,
            VerifySuite.ERASURE_ADD: self._erasure_add,
            VerifySuite.FANNES: self._fannes,
        }

    def verify(self, suite: VerifySuite) -> VerificationReport:
        selected = list(self._suites) if suite is VerifySuite.ALL else [suite]
        results: list[CheckResult] = []
        for name in selected:
            logger.info("running suite %s", name.value)
            results.extend(self._suites[name]())

        passed = sum(1 for r in results if r.passed)
        return VerificationReport(
            total=len(results),
            passed=passed,
            failed=len(results) - passed,
            results=tuple(results),
        )

    def _dims(self, default: Iterable[int]) -> tuple[int, ...]:
        return (self._options.n,) if self._options.n is not None else tuple(default)

    def _seeds(self, count: int) -> list[np.random.SeedSequence]:
        return spawn_seeds(self._options.seed, count)

    def _weyl(self) -> list[CheckResult]:
        suite = VerifySuite.WEYL
        results: list[CheckResult] = []
        for n in self._dims(WEYL_DIMS):
            state_seed, vector_seed = self._seeds(2)
            rho = random_density(n, n, state_seed)
            rng = rng_from(vector_seed)
            teleport = max(
                teleport_identity_residual(n, complex_gaussian(rng, (n,))) for _ in range(10)
            )
            gram = float(np.max(np.abs(eta_basis(n).gram() - np.eye(n * n))))
            measured = {
                "roots of unity": roots_of_unity_residual(n),
                "basis expansion": basis_expansion_residual(n),
                "eta orthonormal": gram,
                "teleport identity": teleport,
                "twirl": twirl_residual(n, rho),
                "unit twirl": unit_twirl_residual(n),
                "entangled expansion": entangled_state_expansion_residual(n, rho),
            }
            results += [
                _residual(f"{label} n={n}", suite, value, IDENTITY_TOL)
                for label, value in measured.items()
            ]
        return results

    def _pair_checks(
        self, suite: VerifySuite, pair: EmbeddingPair, seed: np.random.SeedSequence, cp: bool
    ) -> list[CheckResult]:
        residual = pair.complementation_residual(self._options.trials, seed)
        results = [_residual(f"{pair.name} complementation", suite, residual, IDENTITY_TOL)]
        if cp:
            lowest = min(pair.min_choi_eigenvalues())
            results.append(_residual(f"{pair.name} CP", suite, -lowest, CP_TOL))
        return results

    def _teleport(self) -> list[CheckResult]:
        suite = VerifySuite.TELEPORT
        results: list[CheckResult] = []
        for n in self._dims(TELEPORT_DIMS):
            seeds = self._seeds(len(EXPONENT_PAIRS) + 4 + len(MIXED_EXPONENT_PAIRS))
            for index, (p, q) in enumerate(EXPONENT_PAIRS):
                # the unscaled maps do not depend on (p, q)
                cp = n <= CHOI_MAX_DIM and index == 0
                results += self._pair_checks(suite, teleport_pair(n, p, q), seeds[index], cp)
            assisted_seed, *isometry_seeds = seeds[len(EXPONENT_PAIRS):len(EXPONENT_PAIRS) + 4]
            contraction_seeds = seeds[len(EXPONENT_PAIRS) + 4:]
            results.append(
                _residual(
                    f"assisted embedding n={n}",
                    suite,
                    assisted_embedding_residual(n, self._options.trials, assisted_seed),
                    IDENTITY_TOL,
                )
            )
            for p, seed in zip((1.0, 2.0, math.inf), isometry_seeds, strict=True):
                sample = teleport_isometry_sample(n, p, p, random_density(n, n, seed))
                results.append(
                    _residual(
                        f"isometry n={n} p=q={_fmt(p)}", suite, abs(sample.gap), ISOMETRY_TOL
                    )
                )
            # p != q: the mixed norm is a one-sided optimizer bound
            for (p, q), seed in zip(MIXED_EXPONENT_PAIRS, contraction_seeds, strict=True):
                settings = SearchSettings(restarts=CONTRACTION_RESTARTS, seed=seed)
                sample = teleport_isometry_sample(n, p, q, random_density(n, n, seed), settings)
                name = f"contraction n={n} p={_fmt(p)} q={_fmt(q)}"
                results.append(_residual(name, suite, abs(sample.gap), CONTRACTION_SLACK))
        return results

    def _superdense(self) -> list[CheckResult]:
        suite = VerifySuite.SUPERDENSE
        results: list[CheckResult] = []
        for n in self._dims(TELEPORT_DIMS):
            seeds = self._seeds(len(EXPONENT_PAIRS) + 1)
            for index, (p, q) in enumerate(EXPONENT_PAIRS):
                pair = superdense_pair(n, p, q)
                basis = 0.0
                for a in range(n * n):
                    unit = np.zeros((n * n, n * n), dtype=np.complex128)
                    unit[a, a] = 1.0
                    basis = max(basis, float(np.max(np.abs(pair.roundtrip(unit) - unit))))
                results.append(_residual(f"{pair.name} basis", suite, basis, IDENTITY_TOL))
                cp = n <= CHOI_MAX_DIM and index == 0
                results += self._pair_checks(suite, pair, seeds[index], cp)
            results += self._pair_checks(suite, eta_projection_pair(n), seeds[-1], False)
            results.append(
                _residual(f"eta projectors n={n}", suite, eta_projector_residual(n), IDENTITY_TOL)
            )
        return results

    def _direct_sum(self) -> list[CheckResult]:
        suite = VerifySuite.DIRECTSUM
        cases = (self._options.dims,) if self._options.dims else DIRECT_SUM_DIMS
        results: list[CheckResult] = []
        for dims in cases:
            seeds = self._seeds(len(EXPONENT_PAIRS))
            small = common_dimension(dims) <= CHOI_MAX_DIM
            for index, (p, q) in enumerate(EXPONENT_PAIRS):
                pair = direct_sum_pair(dims, p, q)
                results += self._pair_checks(suite, pair, seeds[index], small and index == 0)
        return results

    def _factorization(self) -> list[CheckResult]:
        suite = VerifySuite.FACTORIZATION
        results: list[CheckResult] = []
        seeds = self._seeds(len(FACTORIZATION_CASES))
        for (n, d), seed in zip(FACTORIZATION_CASES, seeds, strict=True):
            for lam in FACTORIZATION_LAMBDAS:
                for p in FACTORIZATION_EXPONENTS:
                    residual = factorization_residual(n, d, lam, p, probes=50, seed=seed)
                    name = f"factorization n={n} d={d} lam={lam:g} p={p:g}"
                    results.append(_residual(name, suite, residual, IDENTITY_TOL))
        for d in (1, 2, 3):
            for p in FACTORIZATION_EXPONENTS:
                alpha, beta, delta = 0.7, 0.2, 0.1
                gap = abs(
                    psi_norm(d, alpha, beta, delta, p) - psi_norm_by_basis(d, alpha, beta, delta, p)
                )
                results.append(_residual(f"Psi norm d={d} p={p:g}", suite, gap, IDENTITY_TOL))
        for lam in FACTORIZATION_LAMBDAS:
            report = theta_domination_check(4, 2, lam, 2.0)
            results.append(
                _residual(
                    f"theta domination n=4 d=2 lam={lam:g}",
                    suite,
                    closed_form_gap(4, 2, lam, 2.0, report),
                    IDENTITY_TOL,
                )
            )
        return results

    def _ssa(self) -> list[CheckResult]:
        suite = VerifySuite.SSA
        cases = (self._options.dims,) if self._options.dims else SSA_DIMS
        results: list[CheckResult] = []
        for dims in cases:
            seed, product_seed, pure_seed = self._seeds(3)
            report = ssa_check(dims, self._options.trials, seed, self._options.jobs)
            results.append(_slack(suite, report))
            product = abs(ssa_slack(product_state(dims, product_seed), dims))
            results.append(_residual(f"ssa product {dims}", suite, product, ADDITIVITY_TOL))
            pure = ssa_slack(pure_tripartite_state(dims, pure_seed), dims)
            results.append(_residual(f"ssa pure {dims}", suite, -pure, report.tolerance))
        return results

    def _erasure_add(self) -> list[CheckResult]:
        suite = VerifySuite.ERASURE_ADD
        results: list[CheckResult] = []
        seeds = self._seeds(2)
        for s, seed in zip((1, 2), seeds, strict=True):
            report = v_d_erasure_component_check(
                2, 3, s, 2**3, self._options.trials, seed, self._options.jobs
            )
            results.append(_slack(suite, report))
        worst = 0.0
        for lam in LAMBDA_GRID:
            bounds = erasure_power_bounds(2, 2, 2, lam)
            target = 2 * lam * math.log2(4)
            worst = max(
                worst,
                abs(bounds.upper - target),
                abs(bounds.lower - target),
                binomial_mean_residual(2, lam),
            )
        results.append(_residual("erasure two-copy pipeline n=2 d=2", suite, worst, BOUND_SLACK))
        return results

    def _fannes(self) -> list[CheckResult]:
        suite = VerifySuite.FANNES
        n = self._options.n or 4
        fannes_seed, limit_seed = self._seeds(2)
        results = [
            _slack(suite, fannes_check(n, self._options.trials, fannes_seed, self._options.jobs))
        ]
        worst = 0.0
        for child in spawn_seeds(limit_seed, self._options.trials):
            dim_seed, state_seed = child.spawn(2)
            dim = int(rng_from(dim_seed).integers(2, 9))
            rho = random_density(dim, dim, state_seed)
            quotient = entropy_quotient_F(rho, 1.0 + ENTROPY_LIMIT_STEP)
            worst = max(worst, abs(quotient - von_neumann_entropy(rho)))
        results.append(_residual("entropy quotient limit", suite, worst, ENTROPY_LIMIT_TOL))
        return results
