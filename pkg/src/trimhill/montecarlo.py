"""Seeded Monte Carlo harness for RMSE, type-I and k0-recovery experiments.

Replication r draws its sample from the substream keyed by (seed, r), so the
report is bit-identical for a fixed seed no matter how the replications are
scheduled across workers. Aggregation walks the replications in index order
with Welford updates.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .distributions import Mixed, ModelSpec, OutlierSpec, inject
from .distributions import mixed_outlier_count, sample
from .errors import DomainError, EmptyValues, KOutOfRange
from .estimators import biased_profile, trimmed_profile
from .selection import _first_rejection, _t_u_from_profile, alpha_schedule

DEFAULT_REPS = 2500

# level-0.01 asymptotic one-sample KS critical value is 1.628/sqrt(m)
_KS_CRIT_1PCT = 1.628


@dataclass(frozen=True)
class McConfig:
    model: ModelSpec
    n: int
    k_grid: tuple[int, ...]
    outliers: OutlierSpec | None = None
    reps: int = DEFAULT_REPS
    q: float = 0.05
    a: float = 1.2
    seed: int = 0
    estimators: tuple[str, ...] = ("classic", "adaptive")

    def __post_init__(self):
        if self.reps < 1:
            raise DomainError(f"reps={self.reps} must be >= 1")
        if self.n < 3:
            raise DomainError(f"n={self.n} must be >= 3")
        for k in self.k_grid:
            if not (2 <= k <= self.n - 1):
                raise KOutOfRange(f"k={k} outside [2, n-1={self.n - 1}]")
        if not self.k_grid:
            raise DomainError("k_grid must be non-empty")
        for est in self.estimators:
            _parse_estimator(est)


@dataclass(frozen=True)
class EstimateRow:
    estimator: str
    k: int
    rmse: float


@dataclass(frozen=True)
class DetectionRow:
    k: int
    k0_mean: float
    k0_sd: float
    type1_rate: float | None


@dataclass
class McReport:
    config: McConfig
    estimates: list[EstimateRow]
    detection: list[DetectionRow]
    true_k0_mean: float | None  # realized count for Mixed, fixed k0 otherwise
    reps_used: int
    elapsed: float = field(compare=False)


def _parse_estimator(token: str) -> tuple[str, int]:
    """'classic' | 'adaptive' | 'trimmed:K0' | 'biased:K0' -> (kind, k0)."""
    name, _, arg = token.partition(":")
    if name in ("classic", "adaptive"):
        if arg:
            raise DomainError(f"estimator {token!r} takes no argument")
        return name, 0
    if name in ("trimmed", "biased"):
        try:
            k0 = int(arg)
        except ValueError:
            raise DomainError(f"estimator {token!r} needs an integer k0") from None
        if k0 < 0:
            raise DomainError(f"estimator {token!r}: k0 must be >= 0")
        return name, k0
    raise DomainError(f"unknown estimator {token!r}")


def _replicate_batch(cfg: McConfig, rep_indices) -> tuple:
    """Per-replication estimates and detections for a block of indices."""
    ests = [_parse_estimator(t) for t in cfg.estimators]
    n_k = len(cfg.k_grid)
    out_xi = np.empty((len(rep_indices), len(ests), n_k))
    out_k0 = np.empty((len(rep_indices), n_k), dtype=np.int64)
    out_true = np.empty(len(rep_indices))
    for row, r in enumerate(rep_indices):
        s = sample(cfg.model, cfg.n, [cfg.seed, int(r)])
        if cfg.outliers is None:
            out_true[row] = 0.0
        elif isinstance(cfg.outliers, Mixed):
            out_true[row] = mixed_outlier_count(s, cfg.outliers.tau)
            s = inject(s, cfg.outliers)
        else:
            out_true[row] = cfg.outliers.k0
            s = inject(s, cfg.outliers)
        for col, k in enumerate(cfg.k_grid):
            xi = trimmed_profile(s, k)
            _, u = _t_u_from_profile(xi, k)
            thresholds = 1.0 - alpha_schedule(k, cfg.q, cfg.a).alphas
            jstar = _first_rejection(u, thresholds)
            k0_hat = jstar + 1 if jstar >= 0 else 0
            out_k0[row, col] = k0_hat
            bprof = None
            for e, (kind, k0f) in enumerate(ests):
                if kind == "classic":
                    out_xi[row, e, col] = xi[0]
                elif kind == "adaptive":
                    out_xi[row, e, col] = xi[k0_hat]
                elif kind == "trimmed":
                    if k0f >= k:
                        raise KOutOfRange(f"trimmed:{k0f} needs k0 < k={k}")
                    out_xi[row, e, col] = xi[k0f]
                else:
                    if k0f >= k:
                        raise KOutOfRange(f"biased:{k0f} needs k0 < k={k}")
                    if bprof is None:
                        bprof = biased_profile(s, k)
                    out_xi[row, e, col] = bprof[k0f]
    return np.asarray(rep_indices), out_xi, out_k0, out_true


def run_mc(cfg: McConfig, workers: int = 1) -> McReport:
    """Run the configured replications and aggregate in replication order."""
    t0 = time.perf_counter()
    if workers <= 1:
        batches = [_replicate_batch(cfg, np.arange(cfg.reps))]
    else:
        chunks = [c for c in np.array_split(np.arange(cfg.reps), workers) if c.size]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_replicate_batch, [cfg] * len(chunks), chunks))

    n_est, n_k = len(cfg.estimators), len(cfg.k_grid)
    xi_all = np.empty((cfg.reps, n_est, n_k))
    k0_all = np.empty((cfg.reps, n_k), dtype=np.int64)
    true_all = np.empty(cfg.reps)
    for idx, xi, k0, true in batches:
        xi_all[idx] = xi
        k0_all[idx] = k0
        true_all[idx] = true

    true_xi = cfg.model.xi
    # Welford over replications, vectorized across (estimator, k) cells
    mse_mean = np.zeros((n_est, n_k))
    k0_mean = np.zeros(n_k)
    k0_m2 = np.zeros(n_k)
    for r in range(cfg.reps):
        w = 1.0 / (r + 1)
        mse_mean += ((xi_all[r] - true_xi) ** 2 - mse_mean) * w
        d = k0_all[r] - k0_mean
        k0_mean += d * w
        k0_m2 += d * (k0_all[r] - k0_mean)
    k0_sd = np.sqrt(k0_m2 / (cfg.reps - 1)) if cfg.reps > 1 else np.zeros(n_k)
    type1 = (
        np.mean(k0_all > 0, axis=0) if cfg.outliers is None else None
    )

    estimates = [
        EstimateRow(estimator=est, k=k, rmse=float(math.sqrt(mse_mean[e, c])))
        for e, est in enumerate(cfg.estimators)
        for c, k in enumerate(cfg.k_grid)
    ]
    detection = [
        DetectionRow(
            k=k,
            k0_mean=float(k0_mean[c]),
            k0_sd=float(k0_sd[c]),
            type1_rate=float(type1[c]) if type1 is not None else None,
        )
        for c, k in enumerate(cfg.k_grid)
    ]
    true_k0_mean = float(np.mean(true_all)) if cfg.outliers is not None else None
    return McReport(
        config=cfg,
        estimates=estimates,
        detection=detection,
        true_k0_mean=true_k0_mean,
        reps_used=cfg.reps,
        elapsed=time.perf_counter() - t0,
    )


def ks_uniformity(values) -> tuple[float, bool]:
    """One-sample Kolmogorov-Smirnov statistic against U(0,1).

    Returns (statistic, reject at the 1% level via 1.628/sqrt(m)).
    """
    v = np.sort(np.asarray(values, dtype=np.float64))
    m = v.size
    if m == 0:
        raise EmptyValues("ks_uniformity needs at least one value")
    i = np.arange(1, m + 1)
    d_plus = np.max(i / m - v)
    d_minus = np.max(v - (i - 1) / m)
    stat = float(max(d_plus, d_minus))
    return stat, stat > _KS_CRIT_1PCT / math.sqrt(m)
