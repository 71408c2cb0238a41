"""Kronecker products, partial traces and tensor-factor bookkeeping."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

import numpy as np
import numpy.typing as npt
from scipy.linalg import block_diag

from qlp.core.errors import DimensionMismatchError, NonFiniteError, ParameterError
from qlp.core.models import ComplexMatrix


def as_matrix(x: npt.ArrayLike) -> ComplexMatrix:
    return np.asarray(x, dtype=np.complex128)


def require_finite(x: ComplexMatrix, operation: str) -> ComplexMatrix:
    if not np.all(np.isfinite(x)):
        raise NonFiniteError(operation)
    return x


def require_square(x: ComplexMatrix, operation: str, size: int | None = None) -> int:
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise DimensionMismatchError(operation, "square matrix", x.shape)
    if size is not None and x.shape[0] != size:
        raise DimensionMismatchError(operation, (size, size), x.shape)
    return int(x.shape[0])


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(factors: Iterable[ComplexMatrix]) -> ComplexMatrix:
    result = np.ones((1, 1), dtype=np.complex128)
    for factor in factors:
        result = np.kron(result, as_matrix(factor))
    return result


def direct_sum(blocks: Sequence[ComplexMatrix]) -> ComplexMatrix:
    """Place blocks along the diagonal of one matrix."""
    return np.asarray(block_diag(*[as_matrix(b) for b in blocks]), dtype=np.complex128)


def diagonal_blocks(x: ComplexMatrix, sizes: Sequence[int]) -> list[ComplexMatrix]:
    require_square(x, "diagonal_blocks", sum(sizes))
    blocks: list[ComplexMatrix] = []
    start = 0
    for size in sizes:
        blocks.append(x[start:start + size, start:start + size])
        start += size
    return blocks


def off_block_residual(x: ComplexMatrix, sizes: Sequence[int]) -> float:
    """Largest entry of x outside the declared diagonal blocks."""
    mask = np.ones(x.shape, dtype=bool)
    start = 0
    for size in sizes:
        mask[start:start + size, start:start + size] = False
        start += size
    outside = np.abs(x[mask])
    return float(outside.max()) if outside.size else 0.0


def _check_dims(x: ComplexMatrix, dims: Sequence[int], operation: str) -> tuple[int, ...]:
    factors = tuple(int(d) for d in dims)
    if not factors or any(d < 1 for d in factors):
        raise ParameterError("dims", dims, "need at least one positive factor dimension")
    require_square(x, operation, math.prod(factors))
    return factors


def partial_trace(x: ComplexMatrix, dims: Sequence[int], keep: Iterable[int]) -> ComplexMatrix:
    """Trace out every factor not listed in keep (1-based factor positions)."""
    factors = _check_dims(as_matrix(x), dims, "partial_trace")
    kept = sorted(set(keep))
    if any(i < 1 or i > len(factors) for i in kept):
        raise ParameterError("keep", kept, f"factor positions must lie in 1..{len(factors)}")

    tensor = as_matrix(x).reshape(factors + factors)
    for axis in reversed(range(len(factors))):
        if axis + 1 not in kept:
            tensor = np.trace(tensor, axis1=axis, axis2=axis + tensor.ndim // 2)
    size = math.prod(factors[i - 1] for i in kept)
    return tensor.reshape(size, size)


def swap_factors(x: ComplexMatrix, dims: Sequence[int], order: Sequence[int]) -> ComplexMatrix:
    """Reorder tensor factors; order lists the old 1-based positions in their new order."""
    factors = _check_dims(as_matrix(x), dims, "swap_factors")
    if sorted(order) != list(range(1, len(factors) + 1)):
        raise ParameterError("order", order, "must be a permutation of the factor positions")
    axes = [i - 1 for i in order]
    m = len(factors)
    tensor = as_matrix(x).reshape(factors + factors)
    tensor = tensor.transpose(axes + [a + m for a in axes])
    size = math.prod(factors)
    return tensor.reshape(size, size)


def basis_unit(dim: int, i: int, j: int) -> ComplexMatrix:
    """Matrix unit e_{ij} (1-based)."""
    unit = np.zeros((dim, dim), dtype=np.complex128)
    unit[i - 1, j - 1] = 1.0
    return unit


def basis_vector(dim: int, i: int) -> ComplexMatrix:
    vector = np.zeros(dim, dtype=np.complex128)
    vector[i - 1] = 1.0
    return vector
