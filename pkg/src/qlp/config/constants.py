"""Key constants for qlp. Do not hardcode these values elsewhere."""

from __future__ import annotations

# Matrix-core tolerances
HERMITIAN_TOL: float = 1e-10
PSD_TOL: float = 1e-10
TRACE_TOL: float = 1e-8
EIGEN_CLAMP: float = 1e-12
UNIT_NORM_TOL: float = 1e-12

# Channel certification
CP_TOL: float = 1e-10
TP_TOL: float = 1e-10
WEIGHT_TOL: float = 1e-12
BLOCK_TOL: float = 1e-10
COVARIANCE_TOL: float = 1e-9
COVARIANCE_SAMPLES: int = 50

# Identity residual contracts
IDENTITY_TOL: float = 1e-12
ISOMETRY_TOL: float = 1e-8
CONTRACTION_SLACK: float = 1e-6
INEQUALITY_SLACK: float = 1e-9
ADDITIVITY_TOL: float = 1e-10
ENTROPY_LIMIT_TOL: float = 1e-4
ENTROPY_LIMIT_STEP: float = 1e-6
BOUND_SLACK: float = 1e-12

# Optimizer defaults
DEFAULT_RESTARTS: int = 32
DEFAULT_MAX_ITER: int = 2000
DEFAULT_VALUE_TOL: float = 1e-9

# Derivative at p = 1
RICHARDSON_STEPS: tuple[float, float, float] = (1e-3, 5e-4, 2.5e-4)

# CLI defaults
DEFAULT_TRIALS: int = 100
DEFAULT_TOL: float = 1e-8
DEFAULT_SEED: int = 0
DEFAULT_JOBS: int = 1
CAPACITY_TOL_BITS: float = 1e-3
SEED_ENV_VAR: str = "QLP_SEED"
CSV_SIGNIFICANT_DIGITS: int = 17
GRID_DECIMALS: int = 12
GAP_PEAK_STEP: float = 1e-3
GAP_ENDPOINT_TOL: float = 1e-12
GAP_DEFAULT_SWEEP: str = "0:1:0.05"
