"""Tests for the Shannon and von Neumann entropies and probability vectors."""

from __future__ import annotations

import math

import numpy as np
import pytest

from qlp.capacities.entropy import (
    binary_entropy,
    entropy_of_psd,
    shannon_entropy,
    to_base,
    von_neumann_entropy,
)
from qlp.core.enums import EntropyBase
from qlp.core.errors import NotDensityError, ParameterError
from qlp.core.models import ProbabilityVector
from qlp.linalg.sampling import random_pure_state


class TestVonNeumannEntropy:
    def test_pure_state(self) -> None:
        rho = random_pure_state([4], 3).density()
        assert von_neumann_entropy(rho) == pytest.approx(0.0, abs=1e-12)

    def test_maximally_mixed(self) -> None:
        for n in (2, 3, 5):
            assert von_neumann_entropy(np.eye(n) / n) == pytest.approx(math.log(n))

    def test_bits(self) -> None:
        rho = np.diag([0.25, 0.75]).astype(np.complex128)
        assert von_neumann_entropy(rho, EntropyBase.BITS) == pytest.approx(0.8112781244591328)

    def test_rejects_wrong_trace(self) -> None:
        with pytest.raises(NotDensityError):
            von_neumann_entropy(np.eye(2, dtype=np.complex128))

    def test_unnormalized_block(self) -> None:
        assert entropy_of_psd(2.0 * np.eye(2)) == pytest.approx(-4.0 * math.log(2.0))


class TestShannonEntropy:
    def test_zero_weights(self) -> None:
        assert shannon_entropy([1.0, 0.0]) == 0.0

    def test_binary(self) -> None:
        assert binary_entropy(0.5, EntropyBase.BITS) == pytest.approx(1.0)
        assert binary_entropy(0.0) == 0.0

    def test_rejects_negative(self) -> None:
        with pytest.raises(ParameterError):
            shannon_entropy([1.5, -0.5])

    def test_to_base(self) -> None:
        assert to_base(math.log(2.0), EntropyBase.BITS) == pytest.approx(1.0)
        assert to_base(0.3, EntropyBase.NATS) == 0.3


class TestProbabilityVector:
    def test_accepts_distribution(self) -> None:
        assert ProbabilityVector((0.25, 0.75)).weights == (0.25, 0.75)

    @pytest.mark.parametrize("weights", [(0.5, 0.6), (1.2, -0.2)])
    def test_rejects(self, weights: tuple[float, ...]) -> None:
        with pytest.raises(ParameterError):
            ProbabilityVector(weights)
