"""Channel and linear-map representations."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from qlp.config.constants import WEIGHT_TOL
from qlp.core.enums import ChannelFamily
from qlp.core.errors import ChannelError, DimensionMismatchError
from qlp.core.models import ComplexMatrix
from qlp.linalg.matrix import as_matrix, basis_unit, diagonal_blocks, partial_trace, require_square
from qlp.linalg.sampling import Seed, complex_gaussian, rng_from

MatrixAction = Callable[[ComplexMatrix], ComplexMatrix]


@dataclass(frozen=True)
class OutputBlock:
    dim: int
    weight: float


def choi_matrix(action: MatrixAction, in_dim: int, out_dim: int) -> ComplexMatrix:
    """sum_{ij} e_ij (x) action(e_ij), of dimension in_dim * out_dim."""
    choi = np.zeros((in_dim * out_dim, in_dim * out_dim), dtype=np.complex128)
    for i in range(in_dim):
        for j in range(in_dim):
            image = action(basis_unit(in_dim, i + 1, j + 1))
            choi[i * out_dim:(i + 1) * out_dim, j * out_dim:(j + 1) * out_dim] = image
    return choi


def apply_choi(choi: ComplexMatrix, rho: ComplexMatrix, in_dim: int, out_dim: int) -> ComplexMatrix:
    """N(rho) = tr_1[(rho^T (x) I) J]."""
    lifted = np.kron(as_matrix(rho).T, np.eye(out_dim)) @ choi
    return partial_trace(lifted, [in_dim, out_dim], keep=[2])


@dataclass(frozen=True)
class LinearMatrixMap:
    """A linear map M_in -> M_out given by its action; no CP/TP requirement."""

    name: str
    in_dim: int
    out_dim: int
    action: MatrixAction = field(repr=False)
    out_blocks: tuple[int, ...] = ()

    def __call__(self, x: ComplexMatrix) -> ComplexMatrix:
        x = as_matrix(x)
        require_square(x, self.name, self.in_dim)
        return as_matrix(self.action(x))

    def choi(self) -> ComplexMatrix:
        return choi_matrix(self, self.in_dim, self.out_dim)

    def apply_ancilla(self, x: ComplexMatrix, d: int) -> ComplexMatrix:
        """(id_d (x) map)(x), applied block by block."""
        x = as_matrix(x)
        require_square(x, self.name, d * self.in_dim)
        tensor = x.reshape(d, self.in_dim, d, self.in_dim)
        out = np.zeros((d, self.out_dim, d, self.out_dim), dtype=np.complex128)
        for a in range(d):
            for b in range(d):
                out[a, :, b, :] = self(tensor[a, :, b, :])
        return out.reshape(d * self.out_dim, d * self.out_dim)

    def then(self, other: LinearMatrixMap) -> LinearMatrixMap:
        """Composition other after self."""
        if other.in_dim != self.out_dim:
            raise DimensionMismatchError("then", self.out_dim, other.in_dim)
        return LinearMatrixMap(
            name=f"{other.name}.{self.name}",
            in_dim=self.in_dim,
            out_dim=other.out_dim,
            action=lambda x: other(self(x)),
            out_blocks=other.out_blocks,
        )

    def scaled(self, factor: float, name: str | None = None) -> LinearMatrixMap:
        return LinearMatrixMap(
            name=name or f"{factor:g}*{self.name}",
            in_dim=self.in_dim,
            out_dim=self.out_dim,
            action=lambda x: factor * self(x),
            out_blocks=self.out_blocks,
        )

    def linearity_residual(self, seed: Seed, probes: int = 10) -> float:
        """max || map(a x + b y) - a map(x) - b map(y) ||_max over random probes."""
        rng = rng_from(seed)
        worst = 0.0
        for _ in range(probes):
            x = complex_gaussian(rng, (self.in_dim, self.in_dim))
            y = complex_gaussian(rng, (self.in_dim, self.in_dim))
            a, b = complex_gaussian(rng, (2,))
            gap = self(a * x + b * y) - a * self(x) - b * self(y)
            worst = max(worst, float(np.max(np.abs(gap))))
        return worst


@dataclass(frozen=True)
class QuantumChannel:
    """A channel in Kraus form with a declared block-diagonal output structure.

    ``kraus`` has shape (count, out_dim, in_dim). ``family`` and ``copies``
    record which covariant family the channel belongs to, if any, and
    ``parameter`` its lambda.
    """

    name: str
    in_dim: int
    kraus: ComplexMatrix = field(repr=False)
    out_blocks: tuple[OutputBlock, ...]
    family: ChannelFamily | None = None
    copies: int = 1
    parameter: float | None = None

    def __post_init__(self) -> None:
        if self.kraus.ndim != 3 or self.kraus.shape[2] != self.in_dim:
            raise DimensionMismatchError(self.name, ("count", "out", self.in_dim), self.kraus.shape)
        if self.kraus.shape[1] != self.out_dim:
            raise DimensionMismatchError(self.name, self.out_dim, self.kraus.shape[1])
        total = math.fsum(self.block_weights)
        if any(w < 0.0 for w in self.block_weights) or abs(total - 1.0) > WEIGHT_TOL:
            raise ChannelError(f"{self.name} block weights {self.block_weights} do not sum to 1")

    @property
    def out_dim(self) -> int:
        return sum(block.dim for block in self.out_blocks)

    @property
    def block_dims(self) -> tuple[int, ...]:
        return tuple(block.dim for block in self.out_blocks)

    @property
    def block_weights(self) -> tuple[float, ...]:
        return tuple(block.weight for block in self.out_blocks)

    def apply(self, rho: ComplexMatrix) -> ComplexMatrix:
        rho = as_matrix(rho)
        require_square(rho, self.name, self.in_dim)
        return np.einsum("aij,jk,alk->il", self.kraus, rho, self.kraus.conj())

    def apply_ancilla(self, x: ComplexMatrix, d: int) -> ComplexMatrix:
        """(id_d (x) N)(x) for x on C^d (x) C^in."""
        x = as_matrix(x)
        require_square(x, self.name, d * self.in_dim)
        tensor = x.reshape(d, self.in_dim, d, self.in_dim)
        out = np.einsum("aij,pjqk,alk->piql", self.kraus, tensor, self.kraus.conj())
        return out.reshape(d * self.out_dim, d * self.out_dim)

    def choi(self) -> ComplexMatrix:
        return choi_matrix(self.apply, self.in_dim, self.out_dim)

    def apply_via_choi(self, rho: ComplexMatrix) -> ComplexMatrix:
        return apply_choi(self.choi(), rho, self.in_dim, self.out_dim)

    def blocks(self, output: ComplexMatrix) -> list[ComplexMatrix]:
        return diagonal_blocks(output, self.block_dims)

    def tp_residual(self) -> float:
        total = np.einsum("aji,ajk->ik", self.kraus.conj(), self.kraus)
        return float(np.max(np.abs(total - np.eye(self.in_dim))))

    def as_map(self) -> LinearMatrixMap:
        return LinearMatrixMap(
            name=self.name,
            in_dim=self.in_dim,
            out_dim=self.out_dim,
            action=self.apply,
            out_blocks=self.block_dims,
        )


def stack_kraus(operators: Sequence[ComplexMatrix]) -> ComplexMatrix:
    return np.array([as_matrix(k) for k in operators], dtype=np.complex128)
