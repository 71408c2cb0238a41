"""Tests for the property suites behind the verify command."""

from __future__ import annotations

import pytest

from qlp.core.enums import VerifySuite
from qlp.verify.suites import SuiteVerifier, VerifyOptions


class TestSuiteVerifier:
    def _make_verifier(self, **overrides: object) -> SuiteVerifier:
        fields: dict[str, object] = {"n": 2, "trials": 10, "seed": 3}
        fields.update(overrides)
        return SuiteVerifier(VerifyOptions(**fields))  # type: ignore[arg-type]

    @pytest.mark.parametrize(
        "suite",
        [VerifySuite.WEYL, VerifySuite.TELEPORT, VerifySuite.SUPERDENSE, VerifySuite.FANNES],
    )
    def test_small_suites_pass(self, suite: VerifySuite) -> None:
        report = self._make_verifier().verify(suite)
        assert report.total > 0
        assert report.failed == 0, [r.name for r in report.results if not r.passed]
        assert {r.suite for r in report.results} == {suite.value}

    def test_direct_sum_with_dims(self) -> None:
        report = self._make_verifier(dims=(2, 3)).verify(VerifySuite.DIRECTSUM)
        assert report.failed == 0
        assert all("(2, 3)" in r.name for r in report.results)

    def test_ssa_with_dims(self) -> None:
        report = self._make_verifier(dims=(2, 2, 2)).verify(VerifySuite.SSA)
        assert report.total == 3
        assert report.failed == 0

    def test_factorization(self) -> None:
        report = self._make_verifier().verify(VerifySuite.FACTORIZATION)
        assert report.failed == 0

    def test_erasure_additivity(self) -> None:
        report = self._make_verifier().verify(VerifySuite.ERASURE_ADD)
        assert report.total == 3
        assert report.failed == 0

    def test_counts_add_up(self) -> None:
        report = self._make_verifier().verify(VerifySuite.WEYL)
        assert report.passed + report.failed == report.total == len(report.results)

    def test_same_seed_same_measurements(self) -> None:
        first = self._make_verifier().verify(VerifySuite.FANNES)
        second = self._make_verifier().verify(VerifySuite.FANNES)
        assert [r.measured for r in first.results] == [r.measured for r in second.results]

    @pytest.mark.slow
    @pytest.mark.parametrize(
        ("suite", "trials", "n"),
        [
            (VerifySuite.SSA, 1000, 2),
            (VerifySuite.ERASURE_ADD, 500, 2),
            (VerifySuite.FANNES, 500, 4),
        ],
    )
    def test_sampled_suites_at_full_count(self, suite: VerifySuite, trials: int, n: int) -> None:
        report = self._make_verifier(n=n, trials=trials, jobs=4).verify(suite)
        assert report.failed == 0, [r.name for r in report.results if not r.passed]
