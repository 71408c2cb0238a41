"""Tests for the sampled entropy inequalities."""

from __future__ import annotations

import numpy as np
import pytest

from qlp.capacities.inequalities import (
    erasure_component_slack,
    fannes_check,
    fannes_slack,
    product_state,
    pure_tripartite_state,
    random_mixed_state,
    ssa_check,
    ssa_slack,
    v_d_erasure_component_check,
)
from qlp.core.errors import ParameterError
from qlp.linalg.sampling import random_density


class TestStrongSubadditivity:
    def test_random_states(self) -> None:
        report = ssa_check((2, 2, 2), trials=200, seed=1)
        assert report.passed
        assert report.trials == 200

    @pytest.mark.slow
    def test_full_count(self) -> None:
        for dims in ((2, 2, 2), (2, 3, 2)):
            report = ssa_check(dims, trials=1000, seed=11, jobs=4)
            assert report.passed, report.min_slack
            assert report.trials == 1000

    def test_product_state_saturates(self) -> None:
        dims = (2, 3, 2)
        assert ssa_slack(product_state(dims, 4), dims) == pytest.approx(0.0, abs=1e-10)

    def test_pure_state(self) -> None:
        dims = (2, 2, 2)
        assert ssa_slack(pure_tripartite_state(dims, 5), dims) >= -1e-9

    def test_jobs_do_not_change_result(self) -> None:
        serial = ssa_check((2, 2, 2), trials=20, seed=3, jobs=1)
        threaded = ssa_check((2, 2, 2), trials=20, seed=3, jobs=4)
        assert serial.min_slack == threaded.min_slack

    def test_rejects_bad_dims(self) -> None:
        with pytest.raises(ParameterError):
            ssa_check((2, 2), trials=1, seed=0)
        with pytest.raises(ParameterError):
            ssa_check((4, 4, 8), trials=1, seed=0)


class TestFannes:
    def test_random_states(self) -> None:
        assert fannes_check(4, trials=100, seed=2).passed

    @pytest.mark.slow
    def test_full_count(self) -> None:
        report = fannes_check(4, trials=500, seed=12, jobs=4)
        assert report.passed
        assert report.trials == 500

    def test_equal_states(self) -> None:
        rho = random_density(3, 3, 6)
        assert fannes_slack(rho, rho, 3) == pytest.approx(0.0, abs=1e-12)

    def test_orthogonal_qubits(self) -> None:
        zero = np.diag([1.0, 0.0]).astype(np.complex128)
        one = np.diag([0.0, 1.0]).astype(np.complex128)
        assert fannes_slack(zero, one, 2) == pytest.approx(0.0, abs=1e-12)

    def test_rejects_trivial_dimension(self) -> None:
        with pytest.raises(ParameterError):
            fannes_check(1, trials=1, seed=0)


class TestErasureComponents:
    def test_extreme_subsets_are_tight(self) -> None:
        rho = random_density(8, 8, 7)
        assert erasure_component_slack(rho, 2, 3, 3) == pytest.approx(0.0, abs=1e-10)
        assert erasure_component_slack(rho, 2, 3, 0) == pytest.approx(0.0, abs=1e-10)

    def test_sampled_bound(self) -> None:
        for s in (1, 2):
            assert v_d_erasure_component_check(2, 3, s, 2, trials=50, seed=s).passed

    @pytest.mark.slow
    def test_full_count(self) -> None:
        for s in (1, 2):
            report = v_d_erasure_component_check(2, 3, s, 8, trials=500, seed=13 + s, jobs=4)
            assert report.passed, report.min_slack
            assert report.trials == 500

    def test_ancilla_bounds_rank(self) -> None:
        seed = np.random.SeedSequence(14)
        for child in seed.spawn(20):
            rho = random_mixed_state(8, child, max_rank=2)
            assert np.linalg.matrix_rank(rho, tol=1e-10) <= 2
        assert v_d_erasure_component_check(2, 3, 1, 1, trials=20, seed=15).passed

    def test_rejects_out_of_range(self) -> None:
        with pytest.raises(ParameterError):
            v_d_erasure_component_check(2, 5, 1, 2, trials=1, seed=0)
        with pytest.raises(ParameterError):
            v_d_erasure_component_check(2, 3, 4, 2, trials=1, seed=0)

    def test_random_rank(self) -> None:
        rho = random_mixed_state(4, np.random.SeedSequence(9))
        assert np.trace(rho).real == pytest.approx(1.0)
