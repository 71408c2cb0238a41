"""Sampled entropy inequalities: strong subadditivity, the Fannes-Audenaert bound and
the averaged partial-trace bound behind erasure additivity.

Each trial owns a seed spawned from the master seed, so reports are the
same for any ``jobs``.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from qlp.capacities.entropy import binary_entropy, von_neumann_entropy
from qlp.config.constants import DEFAULT_JOBS, INEQUALITY_SLACK
from qlp.core.errors import ParameterError
from qlp.core.models import ComplexMatrix, InequalityReport
from qlp.linalg.matrix import kron_all, partial_trace
from qlp.linalg.norms import schatten_norm
from qlp.linalg.sampling import Seed, random_density, random_pure_state, rng_from, spawn_seeds

logger = logging.getLogger(__name__)

SlackFn = Callable[[np.random.SeedSequence], float]

SSA_MAX_DIM = 64
ERASURE_MAX_DIM = 27


def _min_slack(name: str, slack: SlackFn, trials: int, seed: Seed, jobs: int) -> InequalityReport:
    if trials < 1:
        raise ParameterError("trials", trials, "must be at least 1")
    seeds = spawn_seeds(seed, trials)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            slacks = list(pool.map(slack, seeds))
    else:
        slacks = [slack(s) for s in seeds]
    report = InequalityReport(
        name=name, trials=trials, min_slack=min(slacks), tolerance=INEQUALITY_SLACK
    )
    logger.info("%s: min slack %.3e over %d trials", name, report.min_slack, trials)
    return report


def random_mixed_state(
    dim: int, seed: np.random.SeedSequence, max_rank: int | None = None
) -> ComplexMatrix:
    """Random density matrix with a random rank in 1..max_rank (default dim)."""
    top = dim if max_rank is None else min(max_rank, dim)
    rank_seed, state_seed = seed.spawn(2)
    rank = int(rng_from(rank_seed).integers(1, top + 1))
    return random_density(dim, rank, state_seed)


def ssa_slack(rho: ComplexMatrix, dims: Sequence[int]) -> float:
    """S(AB) + S(BC) - S(ABC) - S(B)."""
    return (
        von_neumann_entropy(partial_trace(rho, dims, keep=[1, 2]))
        + von_neumann_entropy(partial_trace(rho, dims, keep=[2, 3]))
        - von_neumann_entropy(rho)
        - von_neumann_entropy(partial_trace(rho, dims, keep=[2]))
    )


def ssa_check(
    dims: Sequence[int], trials: int, seed: Seed, jobs: int = DEFAULT_JOBS
) -> InequalityReport:
    factors = tuple(int(d) for d in dims)
    if len(factors) != 3 or any(d < 1 for d in factors):
        raise ParameterError("dims", dims, "need three positive factor dimensions")
    total = math.prod(factors)
    if total > SSA_MAX_DIM:
        raise ParameterError("dims", dims, f"a*b*c must be at most {SSA_MAX_DIM}")
    return _min_slack(
        f"ssa{factors}",
        lambda s: ssa_slack(random_mixed_state(total, s), factors),
        trials,
        seed,
        jobs,
    )


def product_state(dims: Sequence[int], seed: Seed) -> ComplexMatrix:
    """rho_A (x) rho_B (x) ... with independent random factors."""
    children = spawn_seeds(seed, len(dims))
    return kron_all(random_density(d, d, child) for d, child in zip(dims, children, strict=True))


def pure_tripartite_state(dims: Sequence[int], seed: Seed) -> ComplexMatrix:
    return random_pure_state(dims, seed).density()


def fannes_slack(rho: ComplexMatrix, sigma: ComplexMatrix, n: int) -> float:
    """T log(n-1) + H(T, 1-T) - |S(rho) - S(sigma)| with T = ||rho - sigma||_1 / 2."""
    t = min(1.0, schatten_norm(rho - sigma, 1.0, hermitian=True) / 2.0)
    bound = t * math.log(n - 1) + binary_entropy(t)
    return bound - abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma))


def fannes_check(n: int, trials: int, seed: Seed, jobs: int = DEFAULT_JOBS) -> InequalityReport:
    if n < 2:
        raise ParameterError("n", n, "needs n >= 2")

    def slack(s: np.random.SeedSequence) -> float:
        first, second = s.spawn(2)
        return fannes_slack(random_mixed_state(n, first), random_mixed_state(n, second), n)

    return _min_slack(f"fannes(n={n})", slack, trials, seed, jobs)


def erasure_component_slack(rho: ComplexMatrix, n: int, k: int, s: int) -> float:
    """mean_{|A|=s} S(N_A(rho)) - (s/k) S(rho)."""
    dims = [n] * k
    subsets = list(itertools.combinations(range(1, k + 1), s))
    if s == 0:
        mean = 0.0
    else:
        mean = sum(
            von_neumann_entropy(partial_trace(rho, dims, keep=subset)) for subset in subsets
        ) / len(subsets)
    return mean - (s / k) * von_neumann_entropy(rho)


def v_d_erasure_component_check(
    n: int, k: int, s: int, d: int, trials: int, seed: Seed, jobs: int = DEFAULT_JOBS
) -> InequalityReport:
    """Sampled (s/k) S(rho) <= mean_A S(N_A(rho)), the step giving V_d(N_s) <= (s/k) ln d.

    rho is the input marginal of a pure state on C^d (x) C^{n^k}, so its rank
    is at most d and the slack also carries (s/k)(ln d - S(rho)).
    """
    if k < 1 or n ** k > ERASURE_MAX_DIM:
        raise ParameterError("k", k, f"need k >= 1 and n^k <= {ERASURE_MAX_DIM}")
    if not 0 <= s <= k:
        raise ParameterError("s", s, f"must satisfy 0 <= s <= k={k}")
    if d < 1:
        raise ParameterError("d", d, "must be at least 1")
    dim = n**k

    def slack(child: np.random.SeedSequence) -> float:
        rho = random_mixed_state(dim, child, d)
        ceiling = (s / k) * (math.log(d) - von_neumann_entropy(rho))
        return min(erasure_component_slack(rho, n, k, s), ceiling)

    return _min_slack(
        f"erasure-add(n={n},k={k},s={s},d={d})",
        slack,
        trials,
        seed,
        jobs,
    )
