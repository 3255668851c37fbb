"""Numeric series behind the three analyst plots (no rendering here)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import KOutOfRange
from .estimators import trimmed_profile
from .sample import Sample


@dataclass(frozen=True)
class Series:
    """A labelled polyline, optionally with a (lo, hi) band on the same x grid."""

    label: str
    points: tuple[tuple[float, float], ...]
    band: tuple[tuple[float, float, float], ...] | None = None


def diagnostic_series(s: Sample, k: int) -> Series:
    """Trimmed Hill value vs k0 at fixed k, with the plug-in +/- SE band.

    A change point in this plot marks the number of contaminated extremes.
    """
    if not (2 <= k <= s.n - 1):
        raise KOutOfRange(f"k={k} outside [2, n-1={s.n - 1}]")
    xi = trimmed_profile(s, k)
    se = xi / np.sqrt(k - np.arange(k, dtype=np.float64))
    points = tuple((float(k0), float(xi[k0])) for k0 in range(k))
    band = tuple(
        (float(k0), float(xi[k0] - se[k0]), float(xi[k0] + se[k0])) for k0 in range(k)
    )
    return Series(label=f"trimmed_hill_k{k}", points=points, band=band)


def hill_series(
    s: Sample, k0: int, k_min: int, k_max: int
) -> tuple[Series, Series, Series]:
    """Classic, trimmed and biased Hill values as functions of k in [k_min, k_max]."""
    if not (0 <= k0 < k_min <= k_max <= s.n - 1):
        raise KOutOfRange(
            f"need 0 <= k0={k0} < k_min={k_min} <= k_max={k_max} <= n-1={s.n - 1}"
        )
    ly, ls = s.log_values, s.log_suffix
    k = np.arange(k_min, k_max + 1)
    width = (k - k0).astype(np.float64)
    biased_xi = (ls[k0] - ls[k] - width * ly[k]) / width
    trimmed_xi = (k0 * (ly[k0] - ly[k]) + (ls[k0] - ls[k] - width * ly[k])) / width
    classic_xi = (ls[0] - ls[k] - k * ly[k]) / k
    xs = k.astype(np.float64)
    return (
        Series(label="classic", points=tuple(zip(map(float, xs), map(float, classic_xi)))),
        Series(label=f"trimmed_k0_{k0}", points=tuple(zip(map(float, xs), map(float, trimmed_xi)))),
        Series(label=f"biased_k0_{k0}", points=tuple(zip(map(float, xs), map(float, biased_xi)))),
    )


def pareto_qq_series(s: Sample) -> Series:
    """Pareto quantile plot: (-log(i/(n+1)), log X_(n-i+1,n)), increasing x.

    A linear trend of slope xi indicates Pareto-tailed observations; the
    plotting positions i/(n+1) are the standard convention.
    """
    n = s.n
    points = tuple(
        (-math.log(i / (n + 1)), float(s.log_values[i - 1])) for i in range(n, 0, -1)
    )
    return Series(label="pareto_qq", points=points)
