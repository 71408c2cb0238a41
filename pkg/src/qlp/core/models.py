"""Frozen dataclass domain models for qlp."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from qlp.config.constants import UNIT_NORM_TOL, WEIGHT_TOL
from qlp.core.enums import BoundKind
from qlp.core.errors import DimensionMismatchError, ParameterError
from qlp.core.exponents import conjugate_exponent, reciprocal

ComplexMatrix = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]


@dataclass(frozen=True)
class HermitianSpectrum:
    eigenvalues: RealVector  # descending
    dimension: int


@dataclass(frozen=True)
class PureStateVector:
    factor_dims: tuple[int, ...]
    amplitudes: ComplexMatrix

    def __post_init__(self) -> None:
        size = math.prod(self.factor_dims)
        if self.amplitudes.shape != (size,):
            raise DimensionMismatchError("PureStateVector", size, self.amplitudes.shape)
        norm = float(np.linalg.norm(self.amplitudes))
        if abs(norm - 1.0) > UNIT_NORM_TOL:
            raise ParameterError("amplitudes", f"norm {norm!r}", "must be a unit vector")

    @property
    def dimension(self) -> int:
        return int(self.amplitudes.shape[0])

    def density(self) -> ComplexMatrix:
        """Return the rank-one projection |psi><psi|."""
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True)
class WeylIndex:
    n: int
    k: int
    l: int  # noqa: E741

    @classmethod
    def of(cls, n: int, k: int, l: int) -> WeylIndex:  # noqa: E741
        """Reduce indices mod n into 1..n, so that u_{-k} = u_{n-k}."""
        if n < 1:
            raise ParameterError("n", n, "dimension must be at least 1")
        return cls(n=n, k=(k - 1) % n + 1, l=(l - 1) % n + 1)


@dataclass(frozen=True)
class EtaBasis:
    """The n^2 vectors eta_{k,l}; row (k-1)*n + (l-1) holds eta_{k,l}."""

    n: int
    vectors: ComplexMatrix

    def vector(self, k: int, l: int) -> ComplexMatrix:  # noqa: E741
        index = WeylIndex.of(self.n, k, l)
        return self.vectors[(index.k - 1) * self.n + (index.l - 1)]

    def gram(self) -> ComplexMatrix:
        return self.vectors.conj() @ self.vectors.T


@dataclass(frozen=True)
class MixedNormSpec:
    """Identifies the norm of S_p^N[S_q^M] (outer exponent p, inner exponent q)."""

    outer_p: float
    inner_q: float
    outer_dim: int
    inner_dim: int

    @property
    def outer_conjugate(self) -> float:
        return conjugate_exponent(self.outer_p)

    @property
    def r(self) -> float:
        """The exponent with 1/r = |1/p - 1/q|; infinite when p == q."""
        inv = abs(reciprocal(self.outer_p) - reciprocal(self.inner_q))
        return math.inf if inv == 0.0 else 1.0 / inv

    @property
    def is_sup_type(self) -> bool:
        return self.outer_p >= self.inner_q


@dataclass(frozen=True)
class OptimizationReport:
    value: float
    witness: ComplexMatrix
    restarts_used: int
    converged: bool
    iterations: int
    bound: BoundKind
    restart_values: tuple[float, ...] = ()
    witness_value: float | None = None


@dataclass(frozen=True)
class ProbabilityVector:
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if any(w < 0.0 for w in self.weights):
            raise ParameterError("weights", self.weights, "must be nonnegative")
        if abs(math.fsum(self.weights) - 1.0) > WEIGHT_TOL:
            raise ParameterError("weights", self.weights, "must sum to 1")


@dataclass(frozen=True)
class CapacityReport:
    channel: str
    d: int
    lam: float
    closed_form_bits: float
    numeric_bits: float
    witness: PureStateVector
    abs_gap: float


@dataclass(frozen=True)
class CertificationReport:
    cp: bool
    min_choi_eigenvalue: float
    tp: bool
    tp_residual: float
    block_diagonal: bool
    block_residual: float
    covariant: bool | None
    covariance_residual: float | None


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of a sampled inequality: the smallest slack seen over all trials."""

    name: str
    trials: int
    min_slack: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.min_slack >= -self.tolerance


@dataclass(frozen=True)
class BoundsReport:
    lower: float
    value: float
    upper: float
    lower_slack: float
    upper_slack: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class CheckResult:
    name: str
    suite: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    total: int
    passed: int
    failed: int
    results: tuple[CheckResult, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class GapWitness:
    """Two strategies for two channel uses with d^2-dimensional entanglement in total."""

    one_sided: float  # all the entanglement in one use: C^{d^2} + C^1
    balanced: float  # d per use: 2 C^d

    @property
    def difference(self) -> float:
        return self.one_sided - self.balanced
