"""Harmonic seasonal regressors and their block replication.

The regressor row for month t is (1, sin 2πt/P, cos 2πt/P, ..., sin 2πKt/P,
cos 2πKt/P). Phase is reduced mod P before multiplying by 2π so rows repeat
with period P *exactly* (bit-identical), including for negative t.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class FourierSpec:
    """Period in months and number K of sin/cos harmonic pairs."""

    period: int = 12
    n_harmonics: int = 5

    def __post_init__(self):
        if self.period < 1 or self.n_harmonics < 1:
            raise DomainError("period and n_harmonics must be positive")
        if 2 * self.n_harmonics >= self.period:
            raise DomainError(
                f"2K = {2 * self.n_harmonics} must be < period {self.period}"
            )

    @property
    def n_terms(self) -> int:
        """Length of a design row: intercept plus 2K harmonic terms."""
        return 1 + 2 * self.n_harmonics


@dataclass(frozen=True)
class DesignRow:
    f: np.ndarray  # (1 + 2K,), intercept first
    t_index: int

    def __post_init__(self):
        f = np.asarray(self.f, dtype=float)
        object.__setattr__(self, "f", f)
        if f[0] != 1.0 or np.any(np.abs(f[1:]) > 1.0 + 1e-12):
            raise DomainError("design row must start with 1 and stay within [-1, 1]")


def fourier_row(t: int, spec: FourierSpec) -> DesignRow:
    """Harmonic regressor row for (global) month index t; t may be negative."""
    return DesignRow(fourier_values(t, spec), t)


def fourier_values(t: int, spec: FourierSpec) -> np.ndarray:
    k = np.arange(1, spec.n_harmonics + 1)
    # reduce k*t mod period first: exact periodicity and no large-angle loss
    angle = 2.0 * np.pi * ((k * int(t)) % spec.period) / spec.period
    row = np.empty(spec.n_terms)
    row[0] = 1.0
    row[1::2] = np.sin(angle)
    row[2::2] = np.cos(angle)
    return row


def design_matrix(t_first: int, n_rows: int, spec: FourierSpec) -> np.ndarray:
    """Stacked design rows for consecutive months starting at t_first."""
    return np.vstack([fourier_values(t_first + i, spec) for i in range(n_rows)])


def block_design(f: DesignRow, n_coords: int) -> np.ndarray:
    """Kronecker replication I_{n_coords} ⊗ f^T as a dense matrix.

    Exists for tests and inspection; hot paths evaluate the product X β via
    ``block_apply`` without materializing the matrix.
    """
    if n_coords < 1:
        raise DomainError("n_coords must be >= 1")
    return np.kron(np.eye(n_coords), f.f[None, :])


def block_apply(f: np.ndarray, beta: np.ndarray, n_coords: int) -> np.ndarray:
    """(I ⊗ f^T) β computed slice-wise: coordinate j gets dot(f, beta_j)."""
    return beta.reshape(n_coords, f.size) @ f
