import math

import numpy as np
import pytest

from trimhill import (
    Pareto,
    biased_hill,
    classic_hill,
    diagnostic_series,
    hill_series,
    pareto_qq_series,
    sample,
    trimmed_hill,
    trimmed_profile,
)
from trimhill.errors import KOutOfRange


class TestDiagnosticSeries:
    def test_s5_values(self, s5):
        series = diagnostic_series(s5, 4)
        assert [y for _, y in series.points] == pytest.approx([2.5, 3.0, 3.5, 4.0], abs=1e-12)
        assert [x for x, _ in series.points] == [0.0, 1.0, 2.0, 3.0]
        for (x, y), (xb, lo, hi) in zip(series.points, series.band):
            assert xb == x
            se = y / math.sqrt(4 - x)
            assert lo == pytest.approx(y - se, abs=1e-12)
            assert hi == pytest.approx(y + se, abs=1e-12)

    def test_matches_profile_bit_exact(self):
        s = sample(Pareto(1.0, 2.0), 100, 4)
        k = 60
        series = diagnostic_series(s, k)
        assert np.array_equal([y for _, y in series.points], trimmed_profile(s, k))

    def test_range(self, s5):
        with pytest.raises(KOutOfRange):
            diagnostic_series(s5, 1)
        with pytest.raises(KOutOfRange):
            diagnostic_series(s5, 5)


class TestHillSeries:
    def test_matches_scalar_estimators(self):
        s = sample(Pareto(1.0, 2.0), 80, 6)
        k0, kmin, kmax = 3, 10, 50
        classic, trimmed, biased = hill_series(s, k0, kmin, kmax)
        for offset, k in enumerate(range(kmin, kmax + 1)):
            assert classic.points[offset] == (float(k), classic_hill(s, k).xi_hat)
            assert trimmed.points[offset] == (float(k), trimmed_hill(s, k0, k).xi_hat)
            assert biased.points[offset] == (float(k), biased_hill(s, k0, k).xi_hat)

    def test_labels(self, s5):
        classic, trimmed, biased = hill_series(s5, 1, 2, 4)
        assert classic.label == "classic"
        assert trimmed.label == "trimmed_k0_1"
        assert biased.label == "biased_k0_1"

    def test_range(self, s5):
        with pytest.raises(KOutOfRange):
            hill_series(s5, 2, 2, 4)  # k0 >= kmin
        with pytest.raises(KOutOfRange):
            hill_series(s5, 0, 3, 2)  # kmin > kmax
        with pytest.raises(KOutOfRange):
            hill_series(s5, 0, 2, 5)  # kmax = n


class TestQqSeries:
    def test_s5_values(self, s5):
        series = pareto_qq_series(s5)
        xs = [x for x, _ in series.points]
        ys = [y for _, y in series.points]
        assert xs == pytest.approx([-math.log(i / 6.0) for i in range(5, 0, -1)], abs=1e-15)
        assert ys == pytest.approx([0.0, 1.0, 2.0, 3.0, 4.0], abs=1e-12)
        assert np.all(np.diff(xs) > 0)

    def test_slope_recovers_tail_index(self):
        s = sample(Pareto(1.0, 2.0), 5000, 8)
        series = pareto_qq_series(s)
        xs = np.array([x for x, _ in series.points])
        ys = np.array([y for _, y in series.points])
        slope = np.polyfit(xs, ys, 1)[0]
        assert slope == pytest.approx(2.0, abs=0.1)
