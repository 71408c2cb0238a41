"""Tests for the Weyl operators, the eta basis and the teleportation identities."""

from __future__ import annotations

import numpy as np
import pytest

from qlp.core.errors import ParameterError
from qlp.linalg.sampling import random_density
from qlp.weyl.identities import (
    basis_expansion_residual,
    entangled_state_expansion_residual,
    roots_of_unity_residual,
    twirl_residual,
    unit_twirl_residual,
)
from qlp.weyl.operators import (
    eta_basis,
    max_entangled,
    shift_op,
    teleport_identity_residual,
    weyl_u,
    weyl_v,
)

DIMS = (2, 3, 4, 5)


class TestWeylOperators:
    def test_full_phase_cycle(self) -> None:
        for n in DIMS:
            np.testing.assert_allclose(weyl_u(n, n), np.eye(n), atol=1e-15)

    def test_qubit_shift(self) -> None:
        np.testing.assert_array_equal(weyl_v(2, 1), np.array([[0, 1], [1, 0]]))

    def test_negative_index_wraps(self) -> None:
        np.testing.assert_array_equal(weyl_u(4, -1), weyl_u(4, 3))

    def test_commutation_relation(self, rng: np.random.Generator) -> None:
        for _ in range(10):
            n = int(rng.integers(2, 6))
            k, l = (int(v) for v in rng.integers(1, n + 1, size=2))  # noqa: E741
            lhs = weyl_u(n, k) @ weyl_v(n, l)
            rhs = np.exp(2j * np.pi * k * l / n) * weyl_v(n, l) @ weyl_u(n, k)
            np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    def test_rejects_zero_dimension(self) -> None:
        with pytest.raises(ParameterError):
            weyl_u(0, 1)


class TestShiftOperators:
    def test_unitary(self) -> None:
        for n in DIMS:
            for k in range(1, n + 1):
                for l in range(1, n + 1):  # noqa: E741
                    t = shift_op(n, k, l)
                    np.testing.assert_allclose(t.conj().T @ t, np.eye(n), atol=1e-12)

    def test_neutral_indices(self) -> None:
        np.testing.assert_allclose(shift_op(3, 3, 3), np.eye(3), atol=1e-15)

    def test_unit_twirl(self) -> None:
        for n in DIMS:
            assert unit_twirl_residual(n) <= 1e-12


class TestMaxEntangled:
    def test_trivial_dimension(self) -> None:
        np.testing.assert_allclose(max_entangled(1).amplitudes, [1.0])

    def test_unit_norm_and_marginal(self) -> None:
        state = max_entangled(3)
        assert np.vdot(state.amplitudes, state.amplitudes).real == pytest.approx(1.0)
        m = state.amplitudes.reshape(3, 3)
        np.testing.assert_allclose(m @ m.conj().T, np.eye(3) / 3, atol=1e-15)


class TestEtaBasis:
    def test_orthonormal(self) -> None:
        for n in DIMS:
            gram = eta_basis(n).gram()
            assert np.max(np.abs(gram - np.eye(n * n))) <= 1e-12

    def test_neutral_vector_is_max_entangled(self) -> None:
        np.testing.assert_allclose(eta_basis(3).vector(3, 3), max_entangled(3).amplitudes)

    def test_qubit_bell_states(self) -> None:
        s = 1 / np.sqrt(2)
        bell = [
            np.array([s, 0, 0, s]),
            np.array([s, 0, 0, -s]),
            np.array([0, s, s, 0]),
            np.array([0, s, -s, 0]),
        ]
        for vector in eta_basis(2).vectors:
            overlaps = [abs(np.vdot(b, vector)) for b in bell]
            assert max(overlaps) == pytest.approx(1.0, abs=1e-12)


class TestIdentities:
    def test_teleport_identity_basis_vector(self) -> None:
        assert teleport_identity_residual(3, np.array([1.0, 0.0, 0.0])) <= 1e-12

    def test_teleport_identity_zero(self) -> None:
        assert teleport_identity_residual(3, np.zeros(3)) == 0.0

    def test_teleport_identity_random(self, rng: np.random.Generator) -> None:
        h = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        assert teleport_identity_residual(4, h) <= 1e-12 * np.linalg.norm(h)

    def test_roots_and_expansion(self) -> None:
        for n in DIMS:
            assert roots_of_unity_residual(n) <= 1e-12
            assert basis_expansion_residual(n) <= 1e-12

    def test_twirls(self) -> None:
        for n in DIMS:
            rho = random_density(n, n, n)
            assert twirl_residual(n, rho) <= 1e-12
            assert entangled_state_expansion_residual(n, rho) <= 1e-12
