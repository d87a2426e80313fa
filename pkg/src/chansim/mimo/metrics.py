"""Condition numbers and spectral efficiency of channel matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final, Literal, TypeAlias

import numpy as np
from scipy.linalg import svdvals

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from numpy.typing import ArrayLike, NDArray

    from .channel import ChannelMatrixSet

PowerAllocation: TypeAlias = Literal["equal", "waterfilling"]
POWER_ALLOCATIONS: Final[tuple[PowerAllocation, ...]] = ("equal", "waterfilling")

RANK_DEFICIENCY_RATIO: Final[float] = 1e-12
INFINITE_CONDITION: Final[float] = math.inf
"""Condition number reported for numerically rank deficient matrices."""


def condition_number_db(matrix: ArrayLike) -> float:
    """Largest over smallest singular value, in dB.

    Returns INFINITE_CONDITION when the smallest singular value is below
    1e-12 of the largest.

    Raises:
        ValueError: If the matrix is empty or all zero.
    """
    h = np.asarray(matrix)
    if h.size == 0:
        raise ValueError("Condition number of an empty matrix")
    s = svdvals(h)
    if s[0] == 0:
        raise ValueError("Condition number of an all-zero matrix")
    if s[-1] < s[0] * RANK_DEFICIENCY_RATIO:
        return INFINITE_CONDITION
    return float(20.0 * np.log10(s[0] / s[-1]))


def condition_numbers(channels: ChannelMatrixSet) -> NDArray[np.float64]:
    """Condition number in dB of every subcarrier, in subcarrier order."""
    return np.array([condition_number_db(h) for h in channels], dtype=np.float64)


@dataclass(frozen=True)
class ConditionNumberCDF:
    """Empirical CDF of condition numbers.

    Only finite values enter the steps. Rank deficient matrices are counted in
    n_infinite, so the last probability is n_finite / n_total.
    """

    values: NDArray[np.float64]
    """Sorted finite condition numbers, dB."""

    probabilities: NDArray[np.float64]
    n_infinite: int

    @property
    def n_total(self) -> int:
        """Number of matrices the CDF was built from."""
        return self.values.size + self.n_infinite

    @property
    def points(self) -> list[tuple[float, float]]:
        """(dB value, cumulative probability) pairs."""
        return list(
            zip(self.values.tolist(), self.probabilities.tolist(), strict=True)
        )

    @property
    def median(self) -> float:
        """Median over all matrices, rank deficient ones counted as infinite."""
        pooled = np.concatenate((self.values, np.full(self.n_infinite, math.inf)))
        return float(np.median(pooled))


def empirical_cdf(values: Iterable[float]) -> ConditionNumberCDF:
    """Builds the CDF of condition numbers given in dB.

    Raises:
        ValueError: Without any values.
    """
    data = np.fromiter(values, dtype=np.float64)
    if data.size == 0:
        raise ValueError("Need at least one condition number")
    finite = np.sort(data[np.isfinite(data)])
    probabilities = np.arange(1, finite.size + 1) / data.size
    return ConditionNumberCDF(finite, probabilities, int(data.size - finite.size))


def condition_number_cdf(channels: ChannelMatrixSet) -> ConditionNumberCDF:
    """CDF of the condition numbers across the subcarriers of a set."""
    return empirical_cdf(condition_numbers(channels))


def waterfilling(gains: NDArray[np.float64], total_power: float) -> NDArray[np.float64]:
    """Optimal power per eigenmode for a total power at unit noise.

    Modes with zero gain get no power.
    """
    powers = np.zeros(gains.size)
    active = np.flatnonzero(gains > 0)
    if total_power <= 0 or active.size == 0:
        return powers
    order = active[np.argsort(gains[active])[::-1]]
    inverse = 1.0 / gains[order]
    for k in range(order.size, 0, -1):
        level = (total_power + np.sum(inverse[:k])) / k
        if level > inverse[k - 1]:
            powers[order[:k]] = level - inverse[:k]
            break
    return powers


def spectral_efficiency(
    matrix: ArrayLike,
    snr_linear: float,
    n_streams: int,
    allocation: PowerAllocation = "equal",
) -> float:
    """Rate of SVD eigenmode transmission over the strongest modes, bits/s/Hz.

    With equal allocation every stream gets snr / n_streams. Water-filling
    distributes the same total over the same modes. Streams beyond the rank
    of the matrix contribute nothing.

    Raises:
        ValueError: If n_streams is outside [1, min(N_t, N_r)] or the SNR is
            negative.
    """
    h = np.asarray(matrix)
    max_streams = min(h.shape)
    if not 1 <= n_streams <= max_streams:
        raise ValueError(f"number of streams must be in [1, {max_streams}]")
    if snr_linear < 0:
        raise ValueError(f"SNR must be >= 0, got {snr_linear:g}")
    gains = svdvals(h)[:n_streams] ** 2
    if allocation == "waterfilling":
        powers = waterfilling(gains, snr_linear)
    elif allocation == "equal":
        powers = np.full(n_streams, snr_linear / n_streams)
    else:
        raise ValueError(f"unknown power allocation {allocation!r}")
    return float(np.sum(np.log2(1.0 + powers * gains)))


def average_spectral_efficiency(
    sets: Sequence[ChannelMatrixSet],
    snr_linear: float,
    n_streams: int,
    allocation: PowerAllocation = "equal",
) -> float:
    """Mean over subcarriers, then mean over runs.

    Raises:
        ValueError: Without any channel matrix sets.
    """
    if not sets:
        raise ValueError("Need at least one channel matrix set")
    per_run = [
        np.mean(
            [spectral_efficiency(h, snr_linear, n_streams, allocation) for h in s]
        )
        for s in sets
    ]
    return float(np.mean(per_run))


def db_to_linear(value_db: float) -> float:
    """dB to a linear power ratio."""
    return float(10.0 ** (value_db / 10.0))
