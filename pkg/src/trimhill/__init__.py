"""Trimmed Hill tail-index estimation with data-driven trimming selection."""

from .distributions import (
    AbsT,
    Burr,
    Exponentiated,
    KOptParams,
    Mixed,
    Pareto,
    Scaled,
    inject,
    k_opt,
    k_opt_default,
    mixed_outlier_count,
    quantile,
    sample,
)
from .errors import TrimHillError
from .estimators import (
    HillKind,
    TailEstimate,
    biased_hill,
    biased_profile,
    classic_hill,
    trimmed_hill,
    trimmed_profile,
)
from .ingest import IngestOptions, ingest_csv
from .montecarlo import McConfig, McReport, ks_uniformity, run_mc
from .plots import Series, diagnostic_series, hill_series, pareto_qq_series
from .sample import Sample, make_sample
from .selection import (
    AlphaSchedule,
    DetectionResult,
    RatioSeries,
    adaptive_trimmed_hill,
    alpha_schedule,
    ratio_statistics,
    select_k0,
)

__version__ = "0.1.0"

__all__ = [
    "AbsT",
    "AlphaSchedule",
    "Burr",
    "DetectionResult",
    "Exponentiated",
    "HillKind",
    "IngestOptions",
    "KOptParams",
    "McConfig",
    "McReport",
    "Mixed",
    "Pareto",
    "RatioSeries",
    "Sample",
    "Scaled",
    "Series",
    "TailEstimate",
    "TrimHillError",
    "adaptive_trimmed_hill",
    "alpha_schedule",
    "biased_hill",
    "biased_profile",
    "classic_hill",
    "diagnostic_series",
    "hill_series",
    "ingest_csv",
    "inject",
    "k_opt",
    "k_opt_default",
    "ks_uniformity",
    "make_sample",
    "mixed_outlier_count",
    "pareto_qq_series",
    "quantile",
    "ratio_statistics",
    "run_mc",
    "sample",
    "select_k0",
    "trimmed_hill",
    "trimmed_profile",
]
