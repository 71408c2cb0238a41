"""Tests for mixed norms, channel d-norms, S_d and the p -> 1 derivative."""

from __future__ import annotations

import math

import numpy as np
import pytest

from qlp.capacities.closed_forms import dnorm_depolarizing_closed, dnorm_erasure_closed
from qlp.capacities.entropy import binary_entropy, von_neumann_entropy
from qlp.channels.channel import OutputBlock, QuantumChannel, stack_kraus
from qlp.channels.compose import tensor_power
from qlp.channels.families import depolarizing, erasure, identity_channel
from qlp.core.enums import BoundKind
from qlp.core.errors import ChannelError, ExponentError, NonFiniteError, NotPositiveError
from qlp.core.models import MixedNormSpec
from qlp.linalg.matrix import kron, partial_trace
from qlp.linalg.norms import schatten_norm
from qlp.linalg.sampling import random_density, random_pure_state
from qlp.norms.dnorm import channel_d_norm, product_witness, s_d, witness_state
from qlp.norms.entropy_derivative import derivative_at_one, entropy_quotient_F
from qlp.norms.mixed import mixed_norm_positive
from qlp.norms.search import (
    SearchSettings,
    hermitian_from_params,
    params_from_hermitian,
    params_from_state,
    state_from_params,
)
from qlp.weyl.operators import max_entangled


class TestMixedNormSpec:
    def test_r_and_conjugate(self) -> None:
        spec = MixedNormSpec(outer_p=2.0, inner_q=4.0, outer_dim=2, inner_dim=2)
        assert 1.0 / spec.r == pytest.approx(0.25, abs=1e-14)
        assert spec.outer_conjugate == pytest.approx(2.0)
        assert not spec.is_sup_type

    def test_infinite_outer_exponent(self) -> None:
        spec = MixedNormSpec(outer_p=math.inf, inner_q=2.0, outer_dim=2, inner_dim=2)
        assert spec.r == pytest.approx(2.0)
        assert spec.outer_conjugate == 1.0
        assert spec.is_sup_type

    def test_equal_exponents(self) -> None:
        spec = MixedNormSpec(outer_p=3.0, inner_q=3.0, outer_dim=2, inner_dim=2)
        assert spec.r == math.inf
        assert MixedNormSpec(math.inf, 1.0, 2, 2).outer_conjugate == 1.0


class TestMixedNormPositive:
    def setup_method(self) -> None:
        self.settings = SearchSettings(restarts=2, seed=5)

    def test_equal_exponents_is_schatten(self) -> None:
        x = random_density(6, 6, 1)
        report = mixed_norm_positive(x, MixedNormSpec(2.0, 2.0, 2, 3), self.settings)
        assert report.bound is BoundKind.EXACT
        assert report.value == pytest.approx(schatten_norm(x, 2.0), rel=1e-12)

    def test_inner_trace_class(self) -> None:
        x = random_density(6, 3, 2)
        for p in (1.5, 2.0, 4.0, math.inf):
            report = mixed_norm_positive(x, MixedNormSpec(p, 1.0, 2, 3), self.settings)
            expected = schatten_norm(partial_trace(x, [2, 3], keep=[1]), p, hermitian=True)
            assert report.value == pytest.approx(expected, rel=1e-6)
            assert report.bound is BoundKind.LOWER

    def test_max_entangled_in_trace_class(self) -> None:
        d = 3
        x = max_entangled(d).density()
        for p in (2.0, 4.0):
            report = mixed_norm_positive(x, MixedNormSpec(p, 1.0, d, d), self.settings)
            assert report.value == pytest.approx(d ** (1 / p - 1), rel=1e-6)

    def test_inf_type_product(self) -> None:
        sigma = random_density(3, 3, 3)
        x = kron(np.eye(2) / 2, sigma)
        report = mixed_norm_positive(x, MixedNormSpec(1.0, 2.0, 2, 3), self.settings)
        assert report.bound is BoundKind.UPPER
        assert report.value == pytest.approx(schatten_norm(sigma, 2.0), abs=1e-9)

    def test_rejects_non_psd(self) -> None:
        x = np.diag([1.0, -0.5, 0.2, 0.3]).astype(np.complex128)
        with pytest.raises(NotPositiveError):
            mixed_norm_positive(x, MixedNormSpec(2.0, 1.0, 2, 2), self.settings)


class TestSearchParams:
    def test_hermitian_round_trip(self, rng: np.random.Generator) -> None:
        params = rng.standard_normal(9)
        h = hermitian_from_params(params, 3)
        np.testing.assert_allclose(h, h.conj().T)
        np.testing.assert_allclose(params_from_hermitian(h), params)

    def test_state_round_trip(self) -> None:
        state = random_pure_state([2, 2], 3).amplitudes
        np.testing.assert_allclose(state_from_params(params_from_state(state)), state)

    def test_zero_state_rejected(self) -> None:
        with pytest.raises(NonFiniteError):
            state_from_params(np.zeros(4))


class TestChannelDNorm:
    def test_identity_channel(self, quick_search: SearchSettings) -> None:
        for d, p in ((1, 2.0), (2, 2.0), (3, 4.0)):
            report = channel_d_norm(identity_channel(3), d, p, quick_search)
            assert report.witness_value == pytest.approx(d ** (1 - 1 / p), rel=1e-12)
            assert report.value <= d ** (1 - 1 / p) + 1e-8

    def test_trace_norm_is_one(self, quick_search: SearchSettings) -> None:
        report = channel_d_norm(depolarizing(2, 0.3), 2, 1.0, quick_search)
        assert report.value == pytest.approx(1.0, abs=1e-9)

    def test_depolarizing_closed_form(self, quick_search: SearchSettings) -> None:
        report = channel_d_norm(depolarizing(2, 0.5), 2, 2.0, quick_search)
        closed = dnorm_depolarizing_closed(2, 2, 0.5, 2.0)
        assert closed == pytest.approx(math.sqrt(0.875), rel=1e-14)
        assert report.witness_value == pytest.approx(closed, rel=1e-10)
        assert report.value <= closed + 1e-8
        assert report.value >= closed - 1e-6

    def test_erasure_closed_form(self, quick_search: SearchSettings) -> None:
        report = channel_d_norm(erasure(3, 0.5), 2, 2.0, quick_search)
        closed = dnorm_erasure_closed(3, 2, 0.5, 2.0)
        assert closed == pytest.approx(math.sqrt(0.75), rel=1e-14)
        assert report.witness_value == pytest.approx(closed, rel=1e-10)
        assert report.value <= closed + 1e-8

    def test_rejects_non_channel(self) -> None:
        scaled = QuantumChannel(
            name="double",
            in_dim=2,
            kraus=stack_kraus([2.0 * np.eye(2)]),
            out_blocks=(OutputBlock(2, 1.0),),
        )
        with pytest.raises(ChannelError):
            channel_d_norm(scaled, 2, 2.0)

    def test_product_witness_for_powers(self) -> None:
        ch = tensor_power(erasure(2, 0.5), 2)
        expected = product_witness(2, 2, 2)
        np.testing.assert_allclose(witness_state(ch, 4), expected)
        assert np.linalg.norm(expected) == pytest.approx(1.0)

    @pytest.mark.slow
    def test_depolarizing_grid(self) -> None:
        settings = SearchSettings(restarts=32, seed=0)
        for n in (2, 3):
            for d in range(1, n + 1):
                for p in (1.5, 2.0, 4.0):
                    for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
                        closed = dnorm_depolarizing_closed(n, d, lam, p)
                        report = channel_d_norm(depolarizing(n, lam), d, p, settings)
                        assert report.witness_value == pytest.approx(closed, rel=1e-10)
                        assert report.value <= closed + 1e-8

    @pytest.mark.slow
    def test_erasure_grid(self) -> None:
        settings = SearchSettings(restarts=32, seed=0)
        for n in (2, 3):
            for d in range(1, n + 1):
                for p in (1.5, 2.0, 4.0):
                    for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
                        closed = dnorm_erasure_closed(n, d, lam, p)
                        report = channel_d_norm(erasure(n, lam), d, p, settings)
                        assert report.witness_value == pytest.approx(closed, rel=1e-10)
                        assert report.value <= closed + 1e-8


class TestEntropyGain:
    def test_identity_channel(self, quick_search: SearchSettings) -> None:
        report = s_d(identity_channel(2), 2, quick_search)
        assert report.value == pytest.approx(math.log(2), abs=1e-9)

    def test_completely_depolarizing(self, quick_search: SearchSettings) -> None:
        report = s_d(depolarizing(3, 0.0), 2, quick_search)
        assert report.value == pytest.approx(-math.log(3), abs=1e-9)

    def test_erasure_witness(self, quick_search: SearchSettings) -> None:
        lam = 0.6
        report = s_d(erasure(2, lam), 2, quick_search)
        expected = lam * math.log(2) - binary_entropy(lam)
        assert report.witness_value == pytest.approx(expected, abs=1e-12)
        assert report.value <= expected + 1e-8


class TestEntropyQuotient:
    def test_pure_state(self) -> None:
        rho = random_pure_state([3], 1).density()
        for p in (1.5, 2.0, 5.0):
            assert entropy_quotient_F(rho, p) == pytest.approx(0.0, abs=1e-12)

    def test_maximally_mixed(self) -> None:
        for n in (2, 3, 4):
            assert entropy_quotient_F(np.eye(n) / n, 2.0) == pytest.approx(1 - n**-0.5)

    def test_limit_at_one(self) -> None:
        for seed in range(200):
            dim = 2 + seed % 7
            rho = random_density(dim, dim, seed)
            quotient = entropy_quotient_F(rho, 1.0 + 1e-6)
            assert abs(quotient - von_neumann_entropy(rho)) <= 1e-4

    def test_rejects_p_one(self) -> None:
        with pytest.raises(ExponentError):
            entropy_quotient_F(np.eye(2) / 2, 1.0)


class TestDerivativeAtOne:
    def test_linear(self) -> None:
        assert derivative_at_one(lambda p: p) == pytest.approx(1.0, abs=1e-8)

    def test_schatten_norm(self) -> None:
        rho = random_density(4, 4, 21)
        slope = derivative_at_one(lambda p: schatten_norm(rho, p, hermitian=True))
        assert slope == pytest.approx(-von_neumann_entropy(rho), abs=1e-4)

    def test_identity_d_norm(self) -> None:
        for d in (2, 3):
            slope = derivative_at_one(lambda p, d=d: d ** (1 - 1 / p))
            assert slope == pytest.approx(math.log(d), abs=1e-4)

    def test_non_finite(self) -> None:
        with pytest.raises(NonFiniteError):
            derivative_at_one(lambda p: math.nan)
