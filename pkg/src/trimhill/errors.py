"""Exception hierarchy shared across the package."""


class TrimHillError(Exception):
    """Base class for all errors raised by this package."""


class NonPositiveValue(TrimHillError, ValueError):
    """A sample value is <= 0, NaN or infinite (log must stay finite)."""


class TooSmall(TrimHillError, ValueError):
    """Fewer than 2 observations."""


class KOutOfRange(TrimHillError, ValueError):
    """k violates 1 <= k <= n-1 (or 2 <= k <= n-1 where ratios are needed)."""


class K0OutOfRange(TrimHillError, ValueError):
    """k0 violates 0 <= k0 < k."""


class K0TooLarge(TrimHillError, ValueError):
    """Outlier injection asked to perturb k0 >= n top order statistics."""


class DegenerateEstimate(TrimHillError, ValueError):
    """A trimmed Hill value is exactly 0 (tied top block); caller should dither."""


class MismatchedK(TrimHillError, ValueError):
    """Ratio series and alpha schedule were built for different k."""


class InvalidLevel(TrimHillError, ValueError):
    """Global test level q outside (0, 1)."""


class InvalidWeight(TrimHillError, ValueError):
    """Geometric weight a must exceed 1."""


class UnsupportedQuantile(TrimHillError, ValueError):
    """No closed-form quantile for this model (|T| is sampled directly)."""


class DomainError(TrimHillError, ValueError):
    """Parameter outside its mathematical domain."""


class NoDefaultAvailable(TrimHillError, ValueError):
    """No calibrated default k for this model parameterization."""


class EmptyValues(TrimHillError, ValueError):
    """An operation received an empty sequence."""


class ParseError(TrimHillError, ValueError):
    """CSV ingestion failed; carries the 1-based row and the column involved."""

    def __init__(self, message: str, row: int | None = None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class EmptyColumn(TrimHillError, ValueError):
    """The selected CSV column contains no usable values."""
