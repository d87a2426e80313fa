"""Minimum mean square error fitting of the close-in path loss model."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, NamedTuple, cast

import numpy as np

from chansim.constants import PATH_LOSS_KINDS, PathLossKind

from .ci import PathLossSample, fspl

if TYPE_CHECKING:
    from collections.abc import Sequence
    from pathlib import Path


class PathLossFit(NamedTuple):
    """Fitted close-in model parameters."""

    ple: float
    sigma: float
    """Root mean square of the residuals, dB."""


def fit_ple_mmse(samples: Sequence[PathLossSample], frequency: float) -> PathLossFit:
    """Fits the path loss exponent with the intercept anchored at FSPL(f, 1 m).

    With A = PL - FSPL(f, 1 m) and B = 10 log10(d), the least squares exponent
    is sum(A*B) / sum(B**2). Sigma is the RMS of A - n*B.

    Raises:
        ValueError: With fewer than two samples, a distance below 1 m, or when
            all distances are equal and the slope is undefined.
    """
    if len(samples) < 2:
        raise ValueError(f"Need at least 2 path loss samples, got {len(samples)}")
    distances = np.array([s.distance_3d for s in samples], dtype=np.float64)
    if np.any(distances < 1.0):
        raise ValueError(
            f"Distances must be at least the 1 m reference, got {distances.min():g} m"
        )
    if np.all(distances == distances[0]):
        raise ValueError(
            "All samples share one distance; the path loss exponent is undefined"
        )
    a = np.array([s.path_loss for s in samples], dtype=np.float64) - fspl(frequency)
    b = 10.0 * np.log10(distances)
    ple = float(np.dot(a, b) / np.dot(b, b))
    sigma = float(np.sqrt(np.mean((a - ple * b) ** 2)))
    return PathLossFit(ple, sigma)


def fit_by_kind(
    samples: Sequence[PathLossSample], frequency: float
) -> dict[PathLossKind, PathLossFit | None]:
    """Fits each path loss kind separately. None where a fit is undefined."""
    fits: dict[PathLossKind, PathLossFit | None] = {}
    for kind in PATH_LOSS_KINDS:
        subset = [s for s in samples if s.kind == kind]
        try:
            fits[kind] = fit_ple_mmse(subset, frequency)
        except ValueError:
            fits[kind] = None
    return fits


def load_path_loss_samples(path: Path) -> list[PathLossSample]:
    """Reads a scatter file of 'distance_m path_loss_db [kind]' rows.

    Lines starting with '%' or '#' are comments. Rows without a kind are omni.

    Raises:
        ValueError: A row that cannot be read or lies closer than 1 m, with its
            line number.
    """
    samples = []
    text = path.read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("%", "#")):
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"{path}:{lineno}: expected 2 or 3 columns")
        kind = parts[2] if len(parts) == 3 else "omni"
        if kind not in PATH_LOSS_KINDS:
            raise ValueError(f"{path}:{lineno}: unknown path loss kind {kind!r}")
        try:
            distance, loss = float(parts[0]), float(parts[1])
        except ValueError as e:
            raise ValueError(f"{path}:{lineno}: {e}") from e
        if not (math.isfinite(distance) and math.isfinite(loss)):
            raise ValueError(f"{path}:{lineno}: distance and path loss must be finite")
        if distance < 1.0:
            raise ValueError(
                f"{path}:{lineno}: distance {distance:g} m is below the 1 m reference"
            )
        samples.append(PathLossSample(distance, loss, cast(PathLossKind, kind)))
    return samples
