"""Close-in free space reference distance path loss."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from chansim.config import Polarization
from chansim.constants import FREQUENCY_RANGE_GHZ, PathLossKind

from .atmosphere import AttenuationTable, WeatherConditions, attenuation_factor

if TYPE_CHECKING:
    import numpy as np

    from chansim.config import ModelParameters, SimulationConfig


@dataclass(frozen=True)
class PathLossSample:
    """One point of a path loss scatter."""

    distance_3d: float
    """T-R separation, m."""

    path_loss: float
    """dB."""

    kind: PathLossKind = "omni"


def fspl(frequency: float) -> float:
    """Free space path loss at 1 m, dB, for a carrier frequency in GHz.

    Raises:
        ValueError: If the frequency is outside [0.5, 100] GHz.
    """
    lo, hi = FREQUENCY_RANGE_GHZ
    if not lo <= frequency <= hi:
        raise ValueError(f"frequency out of [{lo:g}, {hi:g}] GHz")
    return 32.4 + 20.0 * math.log10(frequency)


def ci_path_loss(
    frequency: float,
    distance: float,
    ple: float,
    atmospheric_loss: float = 0.0,
    shadow_fading: float = 0.0,
) -> float:
    """Path loss in dB at a 3D distance >= 1 m.

    Args:
        frequency: Carrier frequency, GHz.
        distance: 3D T-R separation, m.
        ple: Path loss exponent.
        atmospheric_loss: Additive attenuation term, dB.
        shadow_fading: Shadow fading realization, dB.

    Raises:
        ValueError: If the distance is below 1 m.
    """
    if distance < 1.0:
        raise ValueError(f"distance {distance:g} m is below the 1 m reference")
    return (
        fspl(frequency)
        + 10.0 * ple * math.log10(distance)
        + atmospheric_loss
        + shadow_fading
    )


def sample_shadow_fading(sigma: float, rng: np.random.Generator) -> float:
    """Draws one zero-mean Gaussian shadow fading value, dB."""
    if sigma < 0:
        raise ValueError(f"shadow fading sigma must be >= 0, got {sigma:g}")
    return float(rng.normal(0.0, sigma))


def additional_losses(
    config: SimulationConfig,
    distance: float,
    params: ModelParameters,
    table: AttenuationTable | None = None,
) -> float:
    """Atmospheric, foliage and cross-polarization losses of a link, dB.

    The atmospheric part is alpha times the 3D distance. Foliage adds its
    attenuation times the foliage depth, and cross-polarized antennas add the
    configured cross-polarization discrimination.
    """
    loss = 0.0
    if params.apply_atmosphere:
        weather = WeatherConditions.from_config(config)
        loss += attenuation_factor(config.frequency, weather, table) * distance
    if config.foliage_loss:
        loss += config.foliage_attenuation * config.foliage_distance
    if config.polarization == Polarization.XPol:
        loss += config.xpd
    return loss
