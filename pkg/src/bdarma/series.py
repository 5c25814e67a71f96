"""Calendar-indexed panels of compositions.

A series stores closed shares row-by-row together with the calendar month of
the first row and a *global* month index (t = 1 for the first observation of
the full dataset). Expanding-window slices keep the global index so seasonal
phase never shifts between estimation and forecasting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .simplex import SUM_TOL, Composition

_YM_RE = re.compile(r"^(\d{4})-(\d{2})$")


def parse_month(text: str) -> tuple[int, int]:
    m = _YM_RE.match(text.strip())
    if not m:
        raise DomainError(f"bad month {text!r}; expected YYYY-MM")
    year, month = int(m.group(1)), int(m.group(2))
    if not (1 <= month <= 12):
        raise DomainError(f"bad month number in {text!r}")
    return year, month


def month_number(year: int, month: int) -> int:
    """Months since year 0; consecutive calendar months differ by 1."""
    return year * 12 + (month - 1)


def month_label(num: int) -> str:
    return f"{num // 12:04d}-{num % 12 + 1:02d}"


@dataclass(frozen=True)
class CompositionalSeries:
    """T monthly compositions with labels and a designated reference part."""

    values: np.ndarray  # (T, J), each row closed to the simplex
    labels: tuple[str, ...]
    reference_index: int
    start_month: int  # month_number of row 0
    start_t: int = 1  # global month index of row 0

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", tuple(self.labels))
        if values.ndim != 2:
            raise DomainError(f"values must be (T, J), got {values.shape}")
        if len(self.labels) != values.shape[1]:
            raise DomainError("label count does not match number of parts")
        if not (0 <= self.reference_index < values.shape[1]):
            raise DomainError("reference_index out of range")
        if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
            raise DomainError("all shares must be finite and strictly positive")
        if np.max(np.abs(values.sum(axis=1) - 1.0)) > SUM_TOL:
            raise DomainError("rows must each sum to 1")

    @property
    def n_obs(self) -> int:
        return self.values.shape[0]

    @property
    def n_parts(self) -> int:
        return self.values.shape[1]

    def month_of(self, row: int) -> int:
        return self.start_month + row

    def date_of(self, row: int) -> str:
        return month_label(self.month_of(row))

    def t_of(self, row: int) -> int:
        """Global month index of a row (1-based over the full dataset)."""
        return self.start_t + row

    def row_for_month(self, num: int) -> int:
        row = num - self.start_month
        if not (0 <= row < self.n_obs):
            raise DomainError(f"month {month_label(num)} outside the series")
        return row

    def composition(self, row: int) -> Composition:
        return Composition(self.values[row], self.labels, self.reference_index)

    def window(self, n_rows: int) -> "CompositionalSeries":
        """First ``n_rows`` observations, global indexing preserved."""
        if not (1 <= n_rows <= self.n_obs):
            raise DomainError(f"window of {n_rows} rows outside 1..{self.n_obs}")
        return CompositionalSeries(
            self.values[:n_rows], self.labels, self.reference_index,
            self.start_month, self.start_t,
        )
