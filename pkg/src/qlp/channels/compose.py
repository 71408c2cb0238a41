"""Tensor products of channels and the partial-trace components of erasure powers."""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence

import numpy as np

from qlp.channels.channel import OutputBlock, QuantumChannel, stack_kraus
from qlp.core.errors import ParameterError
from qlp.core.models import ComplexMatrix
from qlp.linalg.matrix import basis_vector, kron_all


def _block_of(sizes: Sequence[int]) -> list[int]:
    return [b for b, size in enumerate(sizes) for _ in range(size)]


def block_grouping(sizes_a: Sequence[int], sizes_b: Sequence[int]) -> ComplexMatrix:
    """Permutation taking kron(A, B) of block-diagonal A, B to block-diagonal form.

    Product blocks A_i (x) B_j appear in lexicographic (i, j) order.
    """
    owner_a = _block_of(sizes_a)
    owner_b = _block_of(sizes_b)
    dim_b = len(owner_b)
    pairs = sorted(
        itertools.product(range(len(owner_a)), range(dim_b)),
        key=lambda rs: (owner_a[rs[0]], owner_b[rs[1]], rs[0], rs[1]),
    )
    permutation = np.zeros((len(pairs), len(pairs)), dtype=np.complex128)
    for row, (r, s) in enumerate(pairs):
        permutation[row, r * dim_b + s] = 1.0
    return permutation


def tensor(ch1: QuantumChannel, ch2: QuantumChannel) -> QuantumChannel:
    """ch1 (x) ch2 with Kraus set {K_i (x) L_j} and lexicographic product blocks."""
    grouping = block_grouping(ch1.block_dims, ch2.block_dims)
    kraus = np.array(
        [grouping @ np.kron(k, l) for k in ch1.kraus for l in ch2.kraus],  # noqa: E741
        dtype=np.complex128,
    )
    blocks = tuple(
        OutputBlock(a.dim * b.dim, a.weight * b.weight)
        for a in ch1.out_blocks
        for b in ch2.out_blocks
    )
    same_family = ch1.family if ch1.family == ch2.family else None
    same_parameter = ch1.parameter if ch1.parameter == ch2.parameter else None
    return QuantumChannel(
        name=f"{ch1.name}*{ch2.name}",
        in_dim=ch1.in_dim * ch2.in_dim,
        kraus=kraus,
        out_blocks=blocks,
        family=same_family,
        copies=ch1.copies + ch2.copies,
        parameter=same_parameter if same_family else None,
    )


def tensor_power(ch: QuantumChannel, k: int) -> QuantumChannel:
    if k < 1:
        raise ParameterError("k", k, "tensor power must be at least 1")
    result = ch
    for _ in range(k - 1):
        result = tensor(result, ch)
    return result


def _check_subset(k: int, subset: Iterable[int]) -> tuple[int, ...]:
    members = tuple(sorted(set(subset)))
    if any(i < 1 or i > k for i in members):
        raise ParameterError("A", members, f"indices must lie in 1..{k}")
    return members


def partial_trace_kraus(k: int, subset: Sequence[int], n: int) -> list[ComplexMatrix]:
    """Kraus operators of id_A (x) tr_{A^c}: identity on kept factors, <b| on traced ones."""
    traced = [i for i in range(1, k + 1) if i not in subset]
    operators: list[ComplexMatrix] = []
    for labels in itertools.product(range(1, n + 1), repeat=len(traced)):
        chosen = dict(zip(traced, labels, strict=True))
        factors = [
            np.eye(n) if i in subset else basis_vector(n, chosen[i]).reshape(1, n)
            for i in range(1, k + 1)
        ]
        operators.append(kron_all(factors))
    return operators


def erasure_component(k: int, s: int, subset: Iterable[int], n: int) -> QuantumChannel:
    """N_A(rho) = (id_A (x) tr_{A^c})(rho): S_1^{n^k} -> S_1^{n^s}."""
    members = _check_subset(k, subset)
    if len(members) != s:
        raise ParameterError("A", members, f"must have exactly s={s} elements")
    return QuantumChannel(
        name=f"N_A{members}",
        in_dim=n**k,
        kraus=stack_kraus(partial_trace_kraus(k, members, n)),
        out_blocks=(OutputBlock(n**s, 1.0),),
    )


def erasure_average_component(k: int, s: int, n: int) -> QuantumChannel:
    """N_s = binom(k,s)^{-1} (+)_{|A|=s} N_A, one output block per subset."""
    if not 0 <= s <= k:
        raise ParameterError("s", s, f"must satisfy 0 <= s <= k={k}")
    subsets = list(itertools.combinations(range(1, k + 1), s))
    weight = 1.0 / math.comb(k, s)
    block = n**s
    out_dim = block * len(subsets)
    operators: list[ComplexMatrix] = []
    for position, members in enumerate(subsets):
        placement = np.zeros((out_dim, block), dtype=np.complex128)
        placement[position * block:(position + 1) * block, :] = np.eye(block)
        for op in partial_trace_kraus(k, members, n):
            operators.append(math.sqrt(weight) * (placement @ op))
    return QuantumChannel(
        name=f"N_s(k={k},s={s})",
        in_dim=n**k,
        kraus=stack_kraus(operators),
        out_blocks=tuple(OutputBlock(block, weight) for _ in subsets),
    )
