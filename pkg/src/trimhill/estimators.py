"""Hill-family point estimators over descending order statistics.

All three estimators are exact finite-sample formulas on log-spacings of
order statistics. k counts the used top order statistics and indexes the
denominator statistic X_(n-k,n), so k <= n-1 strictly; k0 counts the
trimmed top order statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import K0OutOfRange, KOutOfRange
from .sample import Sample


class HillKind(str, Enum):
    CLASSIC = "classic"
    TRIMMED = "trimmed"
    BIASED = "biased"


@dataclass(frozen=True)
class TailEstimate:
    kind: HillKind
    k0: int
    k: int
    xi_hat: float
    se: float


def _check_k(s: Sample, k: int, k_min: int = 1) -> None:
    if not (k_min <= k <= s.n - 1):
        raise KOutOfRange(f"k={k} outside [{k_min}, n-1={s.n - 1}]")


def _check_k0(k0: int, k: int) -> None:
    if not (0 <= k0 < k):
        raise K0OutOfRange(f"k0={k0} outside [0, k={k})")


def trimmed_profile(s: Sample, k: int) -> np.ndarray:
    """Trimmed Hill values for every k0 = 0..k-1 at a fixed k, in one pass.

    Entry 0 is the classic Hill value. Shared by the ratio statistics, the
    diagnostic plot and the Monte Carlo harness.
    """
    _check_k(s, k)
    ly, ls = s.log_values, s.log_suffix
    k0 = np.arange(k, dtype=np.float64)
    width = k - k0
    return (k0 * (ly[:k] - ly[k]) + (ls[:k] - ls[k] - width * ly[k])) / width


def biased_profile(s: Sample, k: int) -> np.ndarray:
    """Biased Hill values (second summand only) for k0 = 0..k-1."""
    _check_k(s, k)
    ly, ls = s.log_values, s.log_suffix
    k0 = np.arange(k, dtype=np.float64)
    width = k - k0
    return (ls[:k] - ls[k] - width * ly[k]) / width


def trimmed_hill(s: Sample, k0: int, k: int) -> TailEstimate:
    """Minimum-variance unbiased trimmed Hill estimator at (k0, k)."""
    _check_k(s, k)
    _check_k0(k0, k)
    ly, ls = s.log_values, s.log_suffix
    width = k - k0
    # Same expression and operand order as trimmed_profile, so the scalar
    # and vectorized paths agree bit-for-bit.
    xi = (k0 * (ly[k0] - ly[k]) + (ls[k0] - ls[k] - width * ly[k])) / width
    xi = float(xi)
    return TailEstimate(HillKind.TRIMMED, k0, k, xi, xi / math.sqrt(width))


def classic_hill(s: Sample, k: int) -> TailEstimate:
    """Classic Hill estimator: average log-ratio of the top k order statistics."""
    est = trimmed_hill(s, 0, k)
    return TailEstimate(HillKind.CLASSIC, 0, k, est.xi_hat, est.se)


def biased_hill(s: Sample, k0: int, k: int) -> TailEstimate:
    """Classic Hill applied to ranks k0+1..k, without the trimming correction."""
    _check_k(s, k)
    _check_k0(k0, k)
    ly, ls = s.log_values, s.log_suffix
    width = k - k0
    xi = float((ls[k0] - ls[k] - width * ly[k]) / width)
    return TailEstimate(HillKind.BIASED, k0, k, xi, xi / math.sqrt(width))
