"""Per-subcarrier MIMO channel matrices of a CIR."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Iterator

    from numpy.typing import NDArray

    from chansim.sscm import OmniCIR

    from .arrays import ArrayGeometry


@dataclass(frozen=True)
class ChannelMatrixSet:
    """Channel matrices of one CIR over an OFDM subcarrier grid."""

    frequencies: NDArray[np.float64]
    """Subcarrier offsets from the carrier, Hz."""

    matrices: NDArray[np.complex128]
    """Shape (n_subcarriers, n_rx, n_tx)."""

    def __post_init__(self) -> None:
        """Checks there is one finite matrix per subcarrier."""
        if (
            self.matrices.ndim != 3
            or self.matrices.shape[0] != self.frequencies.size
        ):
            raise ValueError("Expected one N_r x N_t matrix per subcarrier")
        if not np.all(np.isfinite(self.matrices)):
            raise ValueError("Channel matrices must have finite entries")

    def __len__(self) -> int:
        """Number of subcarriers."""
        return self.frequencies.size

    def __iter__(self) -> Iterator[NDArray[np.complex128]]:
        """Iterates over the per-subcarrier matrices."""
        return iter(self.matrices)

    @property
    def shape(self) -> tuple[int, int]:
        """(n_rx, n_tx)."""
        return self.matrices.shape[1], self.matrices.shape[2]


def subcarrier_grid(bandwidth: float, spacing: float) -> NDArray[np.float64]:
    """Subcarrier offsets in Hz, from -bandwidth/2 to +bandwidth/2.

    Args:
        bandwidth: MHz.
        spacing: MHz.

    Raises:
        ValueError: If the spacing is not in (0, bandwidth] or does not divide
            the bandwidth.
    """
    if not 0 < spacing <= bandwidth:
        raise ValueError(
            f"subcarrier spacing must be in (0, {bandwidth:g}] MHz, got {spacing:g}"
        )
    ratio = bandwidth / spacing
    count = round(ratio)
    if not math.isclose(ratio, count, rel_tol=1e-9):
        raise ValueError(
            f"subcarrier spacing {spacing:g} MHz does not divide the bandwidth "
            f"{bandwidth:g} MHz"
        )
    return np.linspace(-bandwidth / 2.0, bandwidth / 2.0, count + 1) * 1e6


def _path_gains(
    cir: OmniCIR, frequencies: NDArray[np.float64]
) -> NDArray[np.complex128]:
    """alpha_p e^{j phi_p} e^{-j 2 pi f tau_p}, shape (n_freq, n_paths)."""
    delays_s = cir.delays * 1e-9
    alpha = np.sqrt(cir.powers) * np.exp(1j * cir.phases)
    return alpha[None, :] * np.exp(-2j * np.pi * np.outer(frequencies, delays_s))


def channel_matrix(
    cir: OmniCIR, f_offset: float, tx: ArrayGeometry, rx: ArrayGeometry
) -> NDArray[np.complex128]:
    """The N_r x N_t channel matrix at one subcarrier offset in Hz.

    Entry (k, m) sums over paths p of
    alpha_p e^{j phi_p} e^{-j 2 pi f tau_p} a_T(m, p) a_R(k, p), where alpha_p is
    the square root of the path power in mW, tau_p the delay in seconds and
    a_T, a_R the array steering responses at the AOD and AOA.
    """
    gains = _path_gains(cir, np.array([f_offset]))[0]
    a_tx = tx.steering(cir.aod_az, cir.aod_el)
    a_rx = rx.steering(cir.aoa_az, cir.aoa_el)
    return (a_rx * gains) @ a_tx.T


def channel_matrices(
    cir: OmniCIR,
    frequencies: NDArray[np.float64],
    tx: ArrayGeometry,
    rx: ArrayGeometry,
) -> ChannelMatrixSet:
    """Channel matrices of a CIR at every subcarrier offset."""
    gains = _path_gains(cir, frequencies)
    a_tx = tx.steering(cir.aod_az, cir.aod_el)
    a_rx = rx.steering(cir.aoa_az, cir.aoa_el)
    matrices = np.einsum("kp,fp,mp->fkm", a_rx, gains, a_tx)
    return ChannelMatrixSet(np.asarray(frequencies, dtype=np.float64), matrices)


def normalize_channel_set(channels: ChannelMatrixSet) -> ChannelMatrixSet:
    """Scales a set so its average per-entry power gain is one.

    Raises:
        ValueError: If every entry is zero.
    """
    mean_gain = float(np.mean(np.abs(channels.matrices) ** 2))
    if mean_gain == 0:
        raise ValueError("Cannot normalize an all-zero channel")
    scale = 1.0 / np.sqrt(mean_gain)
    return ChannelMatrixSet(channels.frequencies, channels.matrices * scale)
