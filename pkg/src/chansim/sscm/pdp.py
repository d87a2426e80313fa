"""Bandwidth-resolved power delay profiles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from .types import OmniCIR


@dataclass(frozen=True)
class PowerDelayProfile:
    """Received power per delay bin.

    Only occupied bins are kept. Bin delays are the bin start times, spaced by
    whole multiples of 1000/bandwidth ns. A zero bandwidth gives one bin at the
    first arrival holding all power.
    """

    delays: NDArray[np.float64]
    """ns, ascending."""

    powers_mw: NDArray[np.float64]
    bandwidth: float
    """MHz."""

    @property
    def powers_dbm(self) -> NDArray[np.float64]:
        """Bin powers in dBm."""
        with np.errstate(divide="ignore"):
            return 10.0 * np.log10(self.powers_mw)

    @property
    def bins(self) -> list[tuple[float, float]]:
        """(delay ns, power dBm) pairs."""
        return list(
            zip(self.delays.tolist(), self.powers_dbm.tolist(), strict=True)
        )

    @property
    def total_power_mw(self) -> float:
        """Sum over all bins, mW."""
        return float(np.sum(self.powers_mw))

    @property
    def received_power(self) -> float:
        """Total received power, dBm."""
        return float(10.0 * np.log10(self.total_power_mw))

    @property
    def rms_delay_spread(self) -> float:
        """RMS delay spread, ns."""
        return rms_delay_spread(self)


def bin_width(bandwidth: float) -> float:
    """Delay resolution in ns of a bandwidth in MHz."""
    if bandwidth <= 0:
        raise ValueError("A zero bandwidth has no delay resolution")
    return 1000.0 / bandwidth


def _bin_index(
    delays: NDArray[np.float64], bandwidth: float
) -> tuple[NDArray[np.float64], NDArray[np.intp]]:
    """Returns occupied bin delays and the bin each delay falls into."""
    if bandwidth == 0:
        return np.array([delays.min()]), np.zeros(delays.shape, dtype=np.intp)
    width = bin_width(bandwidth)
    index = np.floor(delays / width).astype(np.int64)
    occupied, inverse = np.unique(index, return_inverse=True)
    return occupied * width, inverse.reshape(-1)


def bin_powers(
    delays: NDArray[np.float64], powers: NDArray[np.float64], bandwidth: float
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Accumulates powers into delay bins. Returns (bin delays, bin powers)."""
    bin_delays, inverse = _bin_index(delays, bandwidth)
    return bin_delays, np.bincount(inverse, weights=powers, minlength=bin_delays.size)


def bin_voltages(
    delays: NDArray[np.float64], voltages: NDArray[np.complex128], bandwidth: float
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Sums complex amplitudes per delay bin and returns bin powers |sum|**2."""
    bin_delays, inverse = _bin_index(delays, bandwidth)
    real = np.bincount(inverse, weights=voltages.real, minlength=bin_delays.size)
    imag = np.bincount(inverse, weights=voltages.imag, minlength=bin_delays.size)
    return bin_delays, real**2 + imag**2


def compute_pdp(cir: OmniCIR, bandwidth: float) -> PowerDelayProfile:
    """Omnidirectional PDP of a CIR at an RF bandwidth in MHz."""
    if bandwidth < 0:
        raise ValueError(f"bandwidth must be >= 0 MHz, got {bandwidth:g}")
    delays, powers = bin_powers(cir.delays, cir.powers, bandwidth)
    return PowerDelayProfile(delays, powers, bandwidth)


def rms_delay_spread(pdp: PowerDelayProfile) -> float:
    """Power-weighted standard deviation of the delays, ns.

    Raises:
        ValueError: If the profile carries no power.
    """
    p = pdp.powers_mw
    total = float(np.sum(p))
    if not total > 0:
        raise ValueError("RMS delay spread of a profile with zero total power")
    mean = float(np.dot(p, pdp.delays)) / total
    variance = float(np.dot(p, (pdp.delays - mean) ** 2)) / total
    return float(np.sqrt(variance))
