"""Tests for Kronecker products, partial traces, Schatten norms and sampling."""

from __future__ import annotations

import math

import numpy as np
import pytest

from qlp.core.errors import DimensionMismatchError, ExponentError, NotHermitianError, ParameterError
from qlp.core.exponents import conjugate_exponent
from qlp.linalg.matrix import basis_unit, kron, partial_trace, swap_factors
from qlp.linalg.norms import schatten_norm
from qlp.linalg.sampling import random_density, random_pure_state, random_unitary
from qlp.linalg.spectrum import hermitian_eigenvalues, psd_power, require_density
from qlp.weyl.operators import max_entangled


def _random_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


class TestKron:
    def test_identities(self) -> None:
        np.testing.assert_array_equal(kron(np.eye(2), np.eye(3)), np.eye(6))

    def test_matrix_units(self) -> None:
        result = kron(basis_unit(2, 1, 1), basis_unit(2, 2, 2))
        np.testing.assert_array_equal(result, basis_unit(4, 2, 2))

    def test_trace_is_multiplicative(self, rng: np.random.Generator) -> None:
        a, b = _random_matrix(rng, 3), _random_matrix(rng, 3)
        assert np.trace(kron(a, b)) == pytest.approx(np.trace(a) * np.trace(b), abs=1e-10)


class TestPartialTrace:
    def test_maximally_entangled_marginal(self) -> None:
        for n in (2, 3, 4):
            marginal = partial_trace(max_entangled(n).density(), [n, n], keep=[1])
            np.testing.assert_allclose(marginal, np.eye(n) / n, atol=1e-14)

    def test_product_input(self, rng: np.random.Generator) -> None:
        a, b = _random_matrix(rng, 2), _random_matrix(rng, 3)
        result = partial_trace(kron(a, b), [2, 3], keep=[1])
        np.testing.assert_allclose(result, np.trace(b) * a, atol=1e-12)

    def test_single_factor_is_noop(self) -> None:
        rho = random_density(3, 3, 5)
        np.testing.assert_array_equal(partial_trace(rho, [3], keep=[1]), rho)

    def test_keeps_middle_factor(self, rng: np.random.Generator) -> None:
        a, b, c = (random_density(d, d, rng) for d in (2, 3, 2))
        result = partial_trace(kron(kron(a, b), c), [2, 3, 2], keep=[2])
        np.testing.assert_allclose(result, b, atol=1e-12)

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError):
            partial_trace(np.eye(5), [2, 2], keep=[1])

    def test_bad_keep(self) -> None:
        with pytest.raises(ParameterError):
            partial_trace(np.eye(4), [2, 2], keep=[3])


class TestSwapFactors:
    def test_swaps_product(self, rng: np.random.Generator) -> None:
        a, b = _random_matrix(rng, 2), _random_matrix(rng, 3)
        np.testing.assert_allclose(swap_factors(kron(a, b), [2, 3], [2, 1]), kron(b, a))

    def test_rejects_non_permutation(self) -> None:
        with pytest.raises(ParameterError):
            swap_factors(np.eye(4), [2, 2], [1, 1])


class TestSchattenNorm:
    def test_identity(self) -> None:
        for p in (1.0, 1.5, 2.0, 4.0):
            assert schatten_norm(np.eye(3), p) == pytest.approx(3 ** (1 / p), rel=1e-12)
        assert schatten_norm(np.eye(3), math.inf) == pytest.approx(1.0)

    def test_density_trace_norm(self) -> None:
        rho = random_density(4, 2, 3)
        assert schatten_norm(rho, 1.0, hermitian=True) == pytest.approx(1.0, abs=1e-12)

    def test_three_four_five(self) -> None:
        assert schatten_norm(np.diag([3.0, 4.0]), 2.0) == pytest.approx(5.0, abs=1e-12)

    def test_hermitian_path_matches_svd(self, rng: np.random.Generator) -> None:
        x = _random_matrix(rng, 4)
        h = x + x.conj().T
        for p in (1.0, 3.0, math.inf):
            assert schatten_norm(h, p, hermitian=True) == pytest.approx(schatten_norm(h, p))

    def test_rejects_small_exponent(self) -> None:
        with pytest.raises(ExponentError):
            schatten_norm(np.eye(2), 0.5)

    def test_conjugate_exponent(self) -> None:
        assert conjugate_exponent(1.0) == math.inf
        assert conjugate_exponent(math.inf) == 1.0
        assert conjugate_exponent(4.0) == pytest.approx(4.0 / 3.0)


class TestSpectrum:
    def test_identity(self) -> None:
        np.testing.assert_allclose(hermitian_eigenvalues(np.eye(3)).eigenvalues, np.ones(3))

    def test_rank_one_projection(self) -> None:
        values = hermitian_eigenvalues(max_entangled(2).density()).eigenvalues
        np.testing.assert_allclose(values, [1.0, 0.0, 0.0, 0.0], atol=1e-14)

    def test_trace_oracle(self, rng: np.random.Generator) -> None:
        x = _random_matrix(rng, 5)
        h = x + x.conj().T
        values = hermitian_eigenvalues(h).eigenvalues
        assert values.sum() == pytest.approx(np.trace(h).real, abs=1e-10)
        assert list(values) == sorted(values, reverse=True)

    def test_rejects_non_hermitian(self) -> None:
        with pytest.raises(NotHermitianError):
            hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_psd_power_square_root(self) -> None:
        rho = random_density(3, 3, 9)
        root = psd_power(rho, 0.5)
        np.testing.assert_allclose(root @ root, rho, atol=1e-12)


class TestSampling:
    def test_random_density(self) -> None:
        rho = random_density(4, 4, 1)
        require_density(rho)
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)

    def test_random_pure_state(self) -> None:
        state = random_pure_state([2, 3], 2)
        assert np.linalg.norm(state.amplitudes) == pytest.approx(1.0, abs=1e-12)
        assert state.dimension == 6

    def test_seed_determinism(self) -> None:
        np.testing.assert_array_equal(random_density(3, 2, 42), random_density(3, 2, 42))
        np.testing.assert_array_equal(random_unitary(3, 42), random_unitary(3, 42))

    def test_rank_zero_rejected(self) -> None:
        with pytest.raises(ParameterError):
            random_density(3, 0, 1)
