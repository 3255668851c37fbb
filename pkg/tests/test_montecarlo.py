import math

import numpy as np
import pytest
import scipy.stats

from trimhill import (
    Exponentiated,
    McConfig,
    Mixed,
    Pareto,
    adaptive_trimmed_hill,
    classic_hill,
    inject,
    ks_uniformity,
    mixed_outlier_count,
    run_mc,
    sample,
    trimmed_hill,
)
from trimhill.errors import DomainError, EmptyValues, KOutOfRange
from trimhill.montecarlo import _parse_estimator
from trimhill.serialize import dumps, report_to_dict


SMALL = McConfig(model=Pareto(1.0, 2.0), n=60, k_grid=(20, 40), reps=40, seed=3)


class TestConfig:
    def test_validation(self):
        with pytest.raises(DomainError):
            McConfig(model=Pareto(), n=60, k_grid=(20,), reps=0)
        with pytest.raises(DomainError):
            McConfig(model=Pareto(), n=2, k_grid=(2,))
        with pytest.raises(KOutOfRange):
            McConfig(model=Pareto(), n=60, k_grid=(60,))
        with pytest.raises(KOutOfRange):
            McConfig(model=Pareto(), n=60, k_grid=(1,))
        with pytest.raises(DomainError):
            McConfig(model=Pareto(), n=60, k_grid=())
        with pytest.raises(DomainError):
            McConfig(model=Pareto(), n=60, k_grid=(20,), estimators=("median",))

    def test_parse_estimator(self):
        assert _parse_estimator("classic") == ("classic", 0)
        assert _parse_estimator("adaptive") == ("adaptive", 0)
        assert _parse_estimator("trimmed:5") == ("trimmed", 5)
        assert _parse_estimator("biased:0") == ("biased", 0)
        for bad in ("classic:3", "trimmed", "trimmed:x", "trimmed:-1", "huber"):
            with pytest.raises(DomainError):
                _parse_estimator(bad)


class TestRunMc:
    def test_matches_direct_replication(self):
        # re-run the same substreams through the public scalar API
        cfg = McConfig(
            model=Pareto(1.0, 2.0),
            n=50,
            k_grid=(15, 30),
            outliers=Exponentiated(k0=4, L=2.0),
            reps=25,
            seed=11,
            estimators=("classic", "adaptive", "trimmed:4"),
        )
        report = run_mc(cfg)
        sq_err = {est: {k: [] for k in cfg.k_grid} for est in cfg.estimators}
        k0_hats = {k: [] for k in cfg.k_grid}
        for r in range(cfg.reps):
            s = inject(sample(cfg.model, cfg.n, [cfg.seed, r]), cfg.outliers)
            for k in cfg.k_grid:
                det, est = adaptive_trimmed_hill(s, k, cfg.q, cfg.a)
                k0_hats[k].append(det.k0_hat)
                sq_err["classic"][k].append((classic_hill(s, k).xi_hat - 2.0) ** 2)
                sq_err["adaptive"][k].append((est.xi_hat - 2.0) ** 2)
                sq_err["trimmed:4"][k].append((trimmed_hill(s, 4, k).xi_hat - 2.0) ** 2)
        for row in report.estimates:
            expected = math.sqrt(np.mean(sq_err[row.estimator][row.k]))
            assert row.rmse == pytest.approx(expected, rel=1e-12)
        for row in report.detection:
            assert row.k0_mean == pytest.approx(np.mean(k0_hats[row.k]), rel=1e-12)
            assert row.k0_sd == pytest.approx(np.std(k0_hats[row.k], ddof=1), rel=1e-12)
            assert row.type1_rate is None
        assert report.true_k0_mean == 4.0

    def test_clean_run_reports_type1(self):
        report = run_mc(SMALL)
        for row in report.detection:
            assert 0.0 <= row.type1_rate <= 1.0
        assert report.true_k0_mean is None
        assert report.reps_used == SMALL.reps

    def test_mixed_tracks_realized_count(self):
        cfg = McConfig(
            model=Pareto(1.0, 1.0),
            n=80,
            k_grid=(40,),
            outliers=Mixed(tau=50.0, M=2.0),
            reps=30,
            seed=5,
        )
        report = run_mc(cfg)
        counts = [
            mixed_outlier_count(sample(cfg.model, cfg.n, [cfg.seed, r]), 50.0)
            for r in range(cfg.reps)
        ]
        assert report.true_k0_mean == pytest.approx(np.mean(counts), rel=1e-12)

    def test_deterministic_across_runs(self):
        a = dumps(report_to_dict(run_mc(SMALL)))
        b = dumps(report_to_dict(run_mc(SMALL)))
        assert a == b

    def test_worker_count_does_not_change_report(self):
        serial = dumps(report_to_dict(run_mc(SMALL, workers=1)))
        parallel = dumps(report_to_dict(run_mc(SMALL, workers=2)))
        assert serial == parallel

    def test_more_workers_than_reps(self):
        cfg = McConfig(model=Pareto(), n=20, k_grid=(8,), reps=3, seed=1)
        serial = dumps(report_to_dict(run_mc(cfg, workers=1)))
        parallel = dumps(report_to_dict(run_mc(cfg, workers=8)))
        assert serial == parallel


class TestKsUniformity:
    def test_matches_reference_statistic(self):
        rng = np.random.default_rng(12)
        v = rng.random(500)
        stat, reject = ks_uniformity(v)
        assert stat == pytest.approx(scipy.stats.kstest(v, "uniform").statistic, abs=1e-15)
        assert not reject

    def test_rejects_obviously_nonuniform(self):
        stat, reject = ks_uniformity(np.full(200, 0.01))
        assert reject

    def test_critical_value_boundary(self):
        # statistic just below the 1% cutoff must not reject
        m = 400
        crit = 1.628 / math.sqrt(m)
        v = np.arange(1, m + 1) / (m + 1.0)
        stat, reject = ks_uniformity(v)
        assert stat < crit and not reject

    def test_empty_rejected(self):
        with pytest.raises(EmptyValues):
            ks_uniformity([])
