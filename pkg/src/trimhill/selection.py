"""Data-driven selection of the trimming parameter.

The pipeline is: ratio statistics of consecutive trimmed Hill values
(Beta(k-k0-1, 1) and independent under Pareto), a folding into marginally
uniform statistics, a geometric schedule of per-index test levels whose
complements multiply to 1-q, and a right-to-left sequential scan whose
first rejection at index j yields k0_hat = j+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateEstimate,
    InvalidLevel,
    InvalidWeight,
    KOutOfRange,
    MismatchedK,
)
from .estimators import TailEstimate, trimmed_hill, trimmed_profile
from .sample import Sample

DEFAULT_Q = 0.05
DEFAULT_A = 1.2


@dataclass(frozen=True, eq=False)
class RatioSeries:
    """T and U statistics at a fixed k, indexed by k0 = 0..k-2."""

    k: int
    t_values: np.ndarray
    u_values: np.ndarray


@dataclass(frozen=True, eq=False)
class AlphaSchedule:
    """Per-index test levels alpha_j, j = 0..k-2, calibrated to global level q."""

    k: int
    q: float
    a: float
    alphas: np.ndarray


@dataclass(frozen=True)
class TestRecord:
    j: int
    u: float
    threshold: float
    rejected: bool


@dataclass(frozen=True)
class DetectionResult:
    k0_hat: int
    rejection_index: int | None
    u_tested: tuple[TestRecord, ...]
    schedule: AlphaSchedule = field(repr=False, compare=False)


def _t_u_from_profile(xi: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """T and U statistics from a trimmed Hill profile xi[k0], k0 = 0..k-1."""
    if np.any(xi == 0.0):
        raise DegenerateEstimate(
            "trimmed Hill value is 0 for some k0; break ties (dither) and retry"
        )
    m = np.arange(k - 1, 0, -1, dtype=np.float64)  # k - k0 - 1
    t = m * xi[1:] / ((m + 1.0) * xi[:-1])
    # T <= 1 almost surely; clip rounding excursions so the power stays in [0,1]
    t = np.minimum(t, 1.0)
    u = 2.0 * np.abs(np.exp(m * np.log(t)) - 0.5)
    return t, u


def ratio_statistics(s: Sample, k: int) -> RatioSeries:
    """Compute T_{k0,k} and U_{k0,k} for k0 = 0..k-2.

    Raises DegenerateEstimate when some trimmed Hill value is exactly 0
    (at least k-k0 tied top values): the caller should dither first.
    """
    if not (2 <= k <= s.n - 1):
        raise KOutOfRange(f"k={k} outside [2, n-1={s.n - 1}]")
    t, u = _t_u_from_profile(trimmed_profile(s, k), k)
    t.setflags(write=False)
    u.setflags(write=False)
    return RatioSeries(k=k, t_values=t, u_values=u)


def alpha_schedule(k: int, q: float = DEFAULT_Q, a: float = DEFAULT_A) -> AlphaSchedule:
    """Geometric level schedule alpha_j = 1 - (1-q)^{w_j} with sum(w_j) = 1.

    w_j = a^{-(j+1)} (a-1) / (1 - a^{-(k-1)}), evaluated in log space so k up
    to 1e6 neither overflows nor underflows (a naive sum of a^m overflows
    near k ~ 3000 already).
    """
    if k < 2:
        raise KOutOfRange(f"k={k} must be >= 2")
    if not (0.0 < q < 1.0):
        raise InvalidLevel(f"q={q} outside (0, 1)")
    if not (a > 1.0):
        raise InvalidWeight(f"a={a} must exceed 1")
    log_a = np.log(a)
    j = np.arange(k - 1, dtype=np.float64)
    log_w = -(j + 1.0) * log_a + np.log(a - 1.0) - np.log(-np.expm1(-(k - 1) * log_a))
    w = np.exp(log_w)
    alphas = -np.expm1(w * np.log1p(-q))
    alphas.setflags(write=False)
    return AlphaSchedule(k=k, q=q, a=a, alphas=alphas)


def _first_rejection(u: np.ndarray, thresholds: np.ndarray) -> int:
    """Largest index j with U_j >= 1 - alpha_j, or -1 if none rejects.

    Scanning j from k-2 downward, this is the first rejection.
    """
    rejected = np.nonzero(u >= thresholds)[0]
    return int(rejected[-1]) if rejected.size else -1


def select_k0(r: RatioSeries, sched: AlphaSchedule) -> DetectionResult:
    """Weighted sequential test: scan j = k-2..0, stop at the first rejection.

    First rejection at j gives k0_hat = j+1; exhaustive acceptance gives 0.
    u_tested records every visited index in scan order.
    """
    if r.k != sched.k:
        raise MismatchedK(f"ratio series k={r.k} != schedule k={sched.k}")
    thresholds = 1.0 - sched.alphas
    jstar = _first_rejection(r.u_values, thresholds)
    records = []
    for j in range(r.k - 2, max(jstar, 0) - 1, -1):
        records.append(
            TestRecord(
                j=j,
                u=float(r.u_values[j]),
                threshold=float(thresholds[j]),
                rejected=(j == jstar),
            )
        )
    if jstar >= 0:
        return DetectionResult(
            k0_hat=jstar + 1,
            rejection_index=jstar,
            u_tested=tuple(records),
            schedule=sched,
        )
    return DetectionResult(
        k0_hat=0, rejection_index=None, u_tested=tuple(records), schedule=sched
    )


def adaptive_trimmed_hill(
    s: Sample, k: int, q: float = DEFAULT_Q, a: float = DEFAULT_A
) -> tuple[DetectionResult, TailEstimate]:
    """Trimmed Hill at the automatically selected trimming parameter k0_hat."""
    r = ratio_statistics(s, k)
    sched = alpha_schedule(k, q, a)
    detection = select_k0(r, sched)
    return detection, trimmed_hill(s, detection.k0_hat, k)
