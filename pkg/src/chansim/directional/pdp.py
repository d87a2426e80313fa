"""Directional and small-scale power delay profiles of an omnidirectional CIR."""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from chansim.sscm import PowerDelayProfile, bin_powers, bin_voltages

from .antenna import PointingAngle

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from chansim.sscm import OmniCIR

    from .antenna import AntennaPattern


class BestDirection(NamedTuple):
    """Outcome of the exhaustive pointing search."""

    tx_pointing: PointingAngle
    rx_pointing: PointingAngle
    pdp: PowerDelayProfile


class PointedMPC(NamedTuple):
    """Directional reception with both antennas pointed along one MPC."""

    mpc_index: int
    path_loss: float
    """Directional path loss, dB."""

    rms_delay_spread: float
    """ns."""


def directional_path_loss(
    tx_power: float, g_tx: float, g_rx: float, p_rx_dir: float
) -> float:
    """Path loss with the antenna gains removed, dB.

    Args:
        tx_power: dBm.
        g_tx: TX boresight gain, dBi.
        g_rx: RX boresight gain, dBi.
        p_rx_dir: Directional received power, dBm.
    """
    return tx_power + g_tx + g_rx - p_rx_dir


def directional_powers(
    cir: OmniCIR,
    tx_pointing: PointingAngle,
    rx_pointing: PointingAngle,
    tx_pattern: AntennaPattern,
    rx_pattern: AntennaPattern,
) -> NDArray[np.float64]:
    """MPC powers in mW weighted by both antenna gains."""
    g_tx = tx_pattern.gain_towards(tx_pointing, cir.aod_az, cir.aod_el)
    g_rx = rx_pattern.gain_towards(rx_pointing, cir.aoa_az, cir.aoa_el)
    return cir.powers * g_tx * g_rx


def directional_pdp(
    cir: OmniCIR,
    tx_pointing: PointingAngle,
    rx_pointing: PointingAngle,
    tx_pattern: AntennaPattern,
    rx_pattern: AntennaPattern,
    bandwidth: float,
) -> PowerDelayProfile:
    """PDP seen with both antennas pointed at the given angles."""
    powers = directional_powers(cir, tx_pointing, rx_pointing, tx_pattern, rx_pattern)
    delays, binned = bin_powers(cir.delays, powers, bandwidth)
    return PowerDelayProfile(delays, binned, bandwidth)


def best_direction_search(
    cir: OmniCIR,
    tx_pattern: AntennaPattern,
    rx_pattern: AntennaPattern,
    bandwidth: float,
) -> BestDirection:
    """Finds the TX and RX pointing angles that maximize received power.

    Both ends step through their pointing grids in beamwidth increments. Ties
    go to the lexicographically smallest (tx_az, tx_el, rx_az, rx_el).
    """
    tx_az, tx_el = tx_pattern.pointing_grid()
    rx_az, rx_el = rx_pattern.pointing_grid()
    g_tx = tx_pattern.gain(
        cir.aod_az[None, :] - tx_az[:, None], cir.aod_el[None, :] - tx_el[:, None]
    )
    g_rx = rx_pattern.gain(
        cir.aoa_az[None, :] - rx_az[:, None], cir.aoa_el[None, :] - rx_el[:, None]
    )
    received = (g_tx * cir.powers) @ g_rx.T
    i, j = np.unravel_index(int(np.argmax(received)), received.shape)
    tx_pointing = PointingAngle(float(tx_az[i]), float(tx_el[i]))
    rx_pointing = PointingAngle(float(rx_az[j]), float(rx_el[j]))
    pdp = directional_pdp(
        cir, tx_pointing, rx_pointing, tx_pattern, rx_pattern, bandwidth
    )
    return BestDirection(tx_pointing, rx_pointing, pdp)


def best_direction_path_loss(
    cir: OmniCIR,
    best: BestDirection,
    tx_pattern: AntennaPattern,
    rx_pattern: AntennaPattern,
) -> float:
    """Directional path loss of the strongest pointing combination, dB."""
    return directional_path_loss(
        cir.tx_power,
        tx_pattern.boresight_gain_db,
        rx_pattern.boresight_gain_db,
        best.pdp.received_power,
    )


def pointed_at_mpcs(
    cir: OmniCIR,
    tx_pattern: AntennaPattern,
    rx_pattern: AntennaPattern,
    bandwidth: float,
) -> list[PointedMPC]:
    """Points both antennas along each MPC's AOD and AOA in turn.

    The path losses form the scatter of directional path loss over every
    direction that carries a resolvable MPC.
    """
    results = []
    for index, mpc in enumerate(cir.mpcs):
        pdp = directional_pdp(
            cir,
            PointingAngle.normalized(mpc.aod_az, mpc.aod_el),
            PointingAngle.normalized(mpc.aoa_az, mpc.aoa_el),
            tx_pattern,
            rx_pattern,
            bandwidth,
        )
        path_loss = directional_path_loss(
            cir.tx_power,
            tx_pattern.boresight_gain_db,
            rx_pattern.boresight_gain_db,
            pdp.received_power,
        )
        results.append(PointedMPC(index, path_loss, pdp.rms_delay_spread))
    return results


def small_scale_pdps(
    cir: OmniCIR, n_elements: int, spacing_wl: float, bandwidth: float
) -> list[tuple[float, PowerDelayProfile]]:
    """PDPs across the elements of a receive ULA.

    At element k each MPC's phase advances by
    2 pi k spacing sin(aoa_az) cos(aoa_el). MPCs falling into the same delay
    bin add as complex voltages.

    Returns:
        (element offset in wavelengths, PDP) per element.
    """
    if n_elements < 1:
        raise ValueError(f"need at least one element, got {n_elements}")
    if spacing_wl <= 0:
        raise ValueError(f"element spacing must be > 0, got {spacing_wl:g}")
    az = np.deg2rad(cir.aoa_az)
    el = np.deg2rad(cir.aoa_el)
    projection = np.sin(az) * np.cos(el)
    amplitude = np.sqrt(cir.powers)
    series = []
    for k in range(n_elements):
        offset = k * spacing_wl
        voltages = amplitude * np.exp(
            1j * (cir.phases + 2.0 * np.pi * offset * projection)
        )
        delays, powers = bin_voltages(cir.delays, voltages, bandwidth)
        series.append((offset, PowerDelayProfile(delays, powers, bandwidth)))
    return series
