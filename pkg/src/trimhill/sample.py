"""Validated samples held as descending order statistics."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import NonPositiveValue, TooSmall


class Sample:
    """Strictly positive observations sorted descending.

    ``values[0]`` is the maximum X_(n,n) and ``values[i]`` the (i+1)-th
    largest order statistic. Logarithms and their prefix sums are computed
    once at construction; all estimators work in log space.
    """

    __slots__ = ("values", "log_values", "log_suffix")

    def __init__(self, values_desc: np.ndarray):
        v = np.asarray(values_desc, dtype=np.float64)
        if v.ndim != 1:
            raise ValueError("sample values must be one-dimensional")
        if v.size < 2:
            raise TooSmall(f"need at least 2 observations, got {v.size}")
        if not np.all(np.isfinite(v)) or np.any(v <= 0.0):
            raise NonPositiveValue("sample values must be finite and > 0")
        if np.any(np.diff(v) > 0):
            raise ValueError("values must be non-increasing")
        v = v.copy()
        v.setflags(write=False)
        ly = np.log(v)
        ly.setflags(write=False)
        # log_suffix[j] = sum of log-values from rank j down to the minimum;
        # summed from the bottom so that block sums over untouched lower
        # ranks stay bit-identical when only the top values change
        ls = np.concatenate((np.cumsum(ly[::-1])[::-1], [0.0]))
        ls.setflags(write=False)
        self.values = v
        self.log_values = ly
        self.log_suffix = ls

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Sample(n={self.n}, max={self.values[0]:g}, min={self.values[-1]:g})"


def make_sample(raw: Iterable[float]) -> Sample:
    """Validate and sort raw observations into a Sample.

    Raises NonPositiveValue for any x <= 0, NaN or infinity, and TooSmall
    for fewer than 2 values.
    """
    v = np.asarray(list(raw) if not isinstance(raw, np.ndarray) else raw,
                   dtype=np.float64).ravel()
    if v.size < 2:
        raise TooSmall(f"need at least 2 observations, got {v.size}")
    if not np.all(np.isfinite(v)) or np.any(v <= 0.0):
        raise NonPositiveValue("sample values must be finite and > 0")
    return Sample(np.sort(v)[::-1])
