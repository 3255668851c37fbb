"""CSV ingestion with tie handling.

Exact ties zero out log-spacings and can degenerate the ratio statistics,
so ingestion offers deduplication or seeded uniform dithering before the
values become a Sample.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EmptyColumn, NonPositiveValue, ParseError
from .sample import Sample, make_sample

TIE_POLICIES = ("none", "unique", "dither")


@dataclass(frozen=True)
class IngestOptions:
    column: str | int | None = None  # name, index, or first numeric column
    header: str = "auto"  # auto | yes | no
    tie_policy: str = "unique"
    epsilon: float = 0.1
    dither_seed: int | None = None
    delimiter: str = ","

    def __post_init__(self):
        if self.tie_policy not in TIE_POLICIES:
            raise DomainError(f"tie_policy must be one of {TIE_POLICIES}")
        if self.tie_policy == "dither":
            if self.epsilon <= 0:
                raise DomainError("dither epsilon must be > 0")
            if self.dither_seed is None:
                raise DomainError("dither requires an explicit seed for reproducibility")
        if self.header not in ("auto", "yes", "no"):
            raise DomainError("header must be auto, yes or no")


def _is_number(cell: str) -> bool:
    try:
        float(cell)
        return True
    except ValueError:
        return False


def ingest_csv(text: str, opts: IngestOptions = IngestOptions()) -> Sample:
    """Parse one numeric column, apply the tie policy, and validate a Sample."""
    rows = list(csv.reader(io.StringIO(text), delimiter=opts.delimiter))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise EmptyColumn("no rows in input")

    has_header = opts.header == "yes" or (
        opts.header == "auto"
        and any(cell.strip() and not _is_number(cell) for cell in rows[0])
    )
    header = [c.strip() for c in rows[0]] if has_header else None
    data_rows = rows[1:] if has_header else rows
    if not data_rows:
        raise EmptyColumn("no data rows below the header")

    col = opts.column
    if isinstance(col, str) and col.strip().isdigit():
        col = int(col)
    if isinstance(col, str):
        if header is None or col not in header:
            raise ParseError(f"no column named {col!r}", column=col)
        col_idx = header.index(col)
    elif isinstance(col, int):
        col_idx = col
    else:
        # first column whose first data cell parses as a number
        col_idx = None
        for i, cell in enumerate(data_rows[0]):
            if _is_number(cell.strip()):
                col_idx = i
                break
        if col_idx is None:
            raise EmptyColumn("no numeric column found in the first data row")

    values = []
    offset = 2 if has_header else 1
    for r, row in enumerate(data_rows):
        if col_idx >= len(row) or not row[col_idx].strip():
            continue
        cell = row[col_idx].strip()
        try:
            values.append(float(cell))
        except ValueError:
            raise ParseError(
                f"row {r + offset}, column {col_idx}: {cell!r} is not a number",
                row=r + offset,
                column=col_idx,
            ) from None
    if not values:
        raise EmptyColumn(f"column {col_idx} has no values")

    v = np.asarray(values, dtype=np.float64)
    if opts.tie_policy == "unique":
        v = np.unique(v)  # drops exact duplicates, keeps one of each
    elif opts.tie_policy == "dither":
        rng = np.random.default_rng(opts.dither_seed)
        v = v + rng.uniform(0.0, opts.epsilon, size=v.size)
        if np.any(v <= 0.0):
            raise NonPositiveValue("dithered values must remain > 0")
    return make_sample(v)
