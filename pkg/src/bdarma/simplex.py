"""Compositional geometry on the unit simplex.

Shares live on the simplex (positive, summing to one); log-ratio maps carry
them to unconstrained Euclidean space and back. The additive log-ratio (ALR)
uses one designated reference part as the common denominator; the centred
log-ratio (CLR) uses the geometric mean. All operations are pure and generic
in the number of parts J.

Array kernels (``closure_values``, ``alr_values``, ...) operate on 1-D or 2-D
float arrays and are what the model code calls in hot paths; the
``Composition``/``AlrVector`` API wraps them with validation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, IncompatibleComposition, ZeroComponent

SUM_TOL = 1e-10

# Smallest part magnitude kept after an inverse transform; exp() underflows to
# exact zero for arguments below about -745, which would violate strict
# positivity downstream.
_PART_FLOOR = 1e-300


def default_labels(n_parts: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n_parts))


# ---------------------------------------------------------------------------
# Array kernels
# ---------------------------------------------------------------------------


def closure_values(raw: np.ndarray) -> np.ndarray:
    """Normalize nonnegative rows to unit sum. No positivity checks here."""
    raw = np.asarray(raw, dtype=float)
    total = raw.sum(axis=-1, keepdims=True)
    return raw / total


def alr_values(parts: np.ndarray, reference_index: int) -> np.ndarray:
    """log(parts[j] / parts[ref]) for the non-reference parts, label order kept."""
    parts = np.asarray(parts, dtype=float)
    keep = _nonreference(parts.shape[-1], reference_index)
    return np.log(parts[..., keep]) - np.log(parts[..., reference_index : reference_index + 1])


def alr_inv_values(coords: np.ndarray, reference_index: int) -> np.ndarray:
    """Inverse ALR (softmax with an implicit zero at the reference slot).

    Guarded against overflow by max-subtraction; parts that underflow to zero
    are floored at 1e-300 so outputs stay strictly positive for finite input.
    """
    coords = np.asarray(coords, dtype=float)
    n_parts = coords.shape[-1] + 1
    shifted = coords - np.maximum(coords.max(axis=-1, keepdims=True), 0.0)
    parts = np.empty(coords.shape[:-1] + (n_parts,), dtype=float)
    keep = _nonreference(n_parts, reference_index)
    parts[..., keep] = np.exp(shifted)
    # the implicit reference coordinate is 0 before shifting
    parts[..., reference_index] = np.exp(
        -np.maximum(coords.max(axis=-1), 0.0)
    )
    np.maximum(parts, _PART_FLOOR, out=parts)
    parts /= parts.sum(axis=-1, keepdims=True)
    return parts


def clr_values(parts: np.ndarray) -> np.ndarray:
    """Centred log-ratio: log parts minus its row mean; rows sum to zero."""
    logp = np.log(np.asarray(parts, dtype=float))
    return logp - logp.mean(axis=-1, keepdims=True)


def _nonreference(n_parts: int, reference_index: int) -> np.ndarray:
    idx = np.arange(n_parts)
    return idx[idx != reference_index]


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Composition:
    """A point on the simplex: J strictly positive shares summing to one.

    ``reference_index`` names the ALR denominator part so compositions with
    different references cannot be mixed silently.
    """

    parts: np.ndarray
    labels: tuple[str, ...]
    reference_index: int

    def __post_init__(self):
        parts = np.asarray(self.parts, dtype=float)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "labels", tuple(self.labels))
        if parts.ndim != 1:
            raise DomainError(f"parts must be a vector, got shape {parts.shape}")
        if len(self.labels) != parts.size:
            raise IncompatibleComposition(
                f"{len(self.labels)} labels for {parts.size} parts"
            )
        if not (0 <= self.reference_index < parts.size):
            raise DomainError(f"reference_index {self.reference_index} out of [0, {parts.size})")
        if not np.all(np.isfinite(parts)) or np.any(parts <= 0.0):
            bad = self.labels[int(np.argmin(parts))]
            raise ZeroComponent(f"part {bad!r} is not strictly positive")
        if abs(parts.sum() - 1.0) > SUM_TOL:
            raise DomainError(f"parts sum to {parts.sum()!r}, not 1")

    @property
    def n_parts(self) -> int:
        return self.parts.size

    def __getitem__(self, label: str) -> float:
        return float(self.parts[self.labels.index(label)])


@dataclass(frozen=True)
class AlrVector:
    """ALR image of a composition: J-1 finite log-ratios against the reference.

    Labels are carried along so the inverse map can rebuild the composition.
    """

    coords: np.ndarray
    reference_index: int
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float)
        object.__setattr__(self, "coords", coords)
        labels = tuple(self.labels) or default_labels(coords.size + 1)
        object.__setattr__(self, "labels", labels)
        if coords.ndim != 1:
            raise DomainError(f"coords must be a vector, got shape {coords.shape}")
        if not np.all(np.isfinite(coords)):
            raise DomainError("ALR coordinates must be finite")
        if len(labels) != coords.size + 1:
            raise IncompatibleComposition(
                f"{len(labels)} labels for {coords.size} coordinates"
            )
        if not (0 <= self.reference_index < coords.size + 1):
            raise DomainError(f"reference_index {self.reference_index} out of range")


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def closure(
    raw,
    labels: tuple[str, ...] | None = None,
    reference_index: int | None = None,
) -> Composition:
    """Close a raw nonnegative vector to the simplex.

    Every entry must be strictly positive: exact zeros are rejected rather than
    imputed because the ALR transform is undefined at zero.
    """
    raw = np.asarray(raw, dtype=float)
    labels = tuple(labels) if labels is not None else default_labels(raw.size)
    if reference_index is None:
        reference_index = raw.size - 1
    if not np.all(np.isfinite(raw)):
        raise DomainError("raw shares must be finite")
    if np.any(raw <= 0.0):
        bad = labels[int(np.argmin(raw))]
        raise ZeroComponent(f"component {bad!r} is zero or negative; cannot close")
    return Composition(closure_values(raw), labels, reference_index)


def alr(y: Composition) -> AlrVector:
    """Additive log-ratio transform of ``y`` against its reference part."""
    return AlrVector(alr_values(y.parts, y.reference_index), y.reference_index, y.labels)


def alr_inv(e: AlrVector) -> Composition:
    """Map ALR coordinates back to the simplex."""
    return Composition(alr_inv_values(e.coords, e.reference_index), e.labels, e.reference_index)


def clr(y: Composition) -> np.ndarray:
    """Centred log-ratio coordinates of ``y`` (a length-J vector summing to 0)."""
    return clr_values(y.parts)


def aitchison_rmse_distance(y: Composition, mu: Composition) -> float:
    """Euclidean distance between CLR images, scaled by 1/sqrt(J).

    A scaled version of the Aitchison metric; symmetric and zero iff the
    arguments coincide.
    """
    if y.labels != mu.labels or y.reference_index != mu.reference_index:
        raise IncompatibleComposition(
            f"labels/reference differ: {y.labels}/{y.reference_index} vs "
            f"{mu.labels}/{mu.reference_index}"
        )
    diff = clr_values(y.parts) - clr_values(mu.parts)
    return float(np.linalg.norm(diff) / np.sqrt(y.n_parts))
