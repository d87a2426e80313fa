"""Beamwidth parameterized antenna patterns."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal, Self, overload

import numpy as np

from chansim.constants import (
    AZIMUTH_HPBW_RANGE_DEG,
    DIRECTIVITY_CONSTANT,
    ELEVATION_HPBW_RANGE_DEG,
)

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from chansim.config import ModelParameters, SimulationConfig

_HALF_POWER_EXPONENT = 4.0 * math.log(2.0)


def wrap_angle(angle: ArrayLike) -> NDArray[np.float64]:
    """Wraps angles in degrees to (-180, 180]."""
    return 180.0 - np.mod(180.0 - np.asarray(angle, dtype=np.float64), 360.0)


def linear_to_db(value: float) -> float:
    """Converts a linear power ratio to dB."""
    return 10.0 * math.log10(value)


@dataclass(frozen=True)
class PointingAngle:
    """Direction an antenna boresight points to, degrees."""

    azimuth: float
    """In [0, 360)."""

    elevation: float
    """In [-90, 90]."""

    def __post_init__(self) -> None:
        """Checks the angles are normalized."""
        if not 0.0 <= self.azimuth < 360.0:
            raise ValueError(f"azimuth {self.azimuth:g}° out of [0, 360)")
        if not -90.0 <= self.elevation <= 90.0:
            raise ValueError(f"elevation {self.elevation:g}° out of [-90, 90]")

    @classmethod
    def normalized(cls, azimuth: float, elevation: float) -> Self:
        """Wraps the azimuth into [0, 360)."""
        az = float(np.mod(azimuth, 360.0))
        return cls(0.0 if az >= 360.0 else az, elevation)


@dataclass(frozen=True)
class AntennaPattern:
    """Gaussian main lobe antenna pattern with a constant sidelobe floor.

    The gain at an angular offset from boresight is
    G0 * exp(-4 ln2 * ((daz/az_hpbw)**2 + (del/el_hpbw)**2)), floored at
    sidelobe_level_db below G0. G0 is 41253 / (az_hpbw * el_hpbw) unless pinned
    by boresight_gain_dbi. An omni pattern has unit gain everywhere.
    """

    az_hpbw: float
    """Azimuth half-power beamwidth, degrees."""

    el_hpbw: float
    """Elevation half-power beamwidth, degrees."""

    sidelobe_level_db: float = 30.0
    boresight_gain_dbi: float | None = None
    omni: bool = False

    def __post_init__(self) -> None:
        """Checks the beamwidths, unless the pattern is omnidirectional."""
        if self.omni:
            return
        for value, (lo, hi), label in (
            (self.az_hpbw, AZIMUTH_HPBW_RANGE_DEG, "azimuth"),
            (self.el_hpbw, ELEVATION_HPBW_RANGE_DEG, "elevation"),
        ):
            if not lo <= value <= hi:
                raise ValueError(f"{label} HPBW out of [{lo:g}, {hi:g}]°")
        if self.sidelobe_level_db <= 0:
            raise ValueError("sidelobe level must be > 0 dB below boresight")

    @classmethod
    def isotropic(cls) -> Self:
        """A unit gain pattern."""
        return cls(az_hpbw=360.0, el_hpbw=45.0, omni=True)

    @classmethod
    def from_config(
        cls,
        config: SimulationConfig,
        side: Literal["tx", "rx"],
        params: ModelParameters | None = None,
    ) -> Self:
        """The TX or RX pattern described by a simulation config.

        The widest beamwidths, 360° by 45°, stand for an omnidirectional antenna
        and give the unit gain pattern.
        """
        az, el = (
            (config.tx_az_hpbw, config.tx_el_hpbw)
            if side == "tx"
            else (config.rx_az_hpbw, config.rx_el_hpbw)
        )
        if (az, el) == (AZIMUTH_HPBW_RANGE_DEG[1], ELEVATION_HPBW_RANGE_DEG[1]):
            return cls.isotropic()
        if params is None:
            return cls(az, el)
        return cls(az, el, params.sidelobe_level_db, params.boresight_gain_dbi)

    @property
    def boresight_gain(self) -> float:
        """G0, linear."""
        if self.omni:
            return 1.0
        if self.boresight_gain_dbi is not None:
            return float(10.0 ** (self.boresight_gain_dbi / 10.0))
        return DIRECTIVITY_CONSTANT / (self.az_hpbw * self.el_hpbw)

    @property
    def boresight_gain_db(self) -> float:
        """G0, dBi."""
        return linear_to_db(self.boresight_gain)

    @property
    def sidelobe_gain(self) -> float:
        """Gain floor, linear."""
        if self.omni:
            return 1.0
        return self.boresight_gain * 10.0 ** (-self.sidelobe_level_db / 10.0)

    @overload
    def gain(self, az_offset: float, el_offset: float) -> float: ...

    @overload
    def gain(
        self, az_offset: NDArray[np.float64], el_offset: NDArray[np.float64]
    ) -> NDArray[np.float64]: ...

    def gain(
        self,
        az_offset: float | NDArray[np.float64],
        el_offset: float | NDArray[np.float64],
    ) -> float | NDArray[np.float64]:
        """Linear gain at angular offsets from boresight, degrees.

        Azimuth offsets are wrapped to (-180, 180] first.
        """
        daz = wrap_angle(az_offset)
        delv = np.asarray(el_offset, dtype=np.float64)
        if self.omni:
            out = np.ones(np.broadcast(daz, delv).shape)
        else:
            rolloff = (daz / self.az_hpbw) ** 2 + (delv / self.el_hpbw) ** 2
            out = np.maximum(
                self.boresight_gain * np.exp(-_HALF_POWER_EXPONENT * rolloff),
                self.sidelobe_gain,
            )
        if out.ndim == 0:
            return float(out)
        return out

    def gain_towards(
        self,
        pointing: PointingAngle,
        azimuth: NDArray[np.float64],
        elevation: NDArray[np.float64],
    ) -> NDArray[np.float64]:
        """Linear gain towards directions when pointed at a given angle."""
        return self.gain(azimuth - pointing.azimuth, elevation - pointing.elevation)

    def pointing_grid(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """All pointing angles stepped by the beamwidths, in lexicographic order.

        Azimuths are k * az_hpbw for k < ceil(360 / az_hpbw) and elevations
        -90 + i * el_hpbw for i < ceil(180 / el_hpbw). Returns flattened azimuth
        and elevation arrays, azimuth varying slowest.
        """
        az = np.arange(math.ceil(360.0 / self.az_hpbw)) * self.az_hpbw
        el = -90.0 + np.arange(math.ceil(180.0 / self.el_hpbw)) * self.el_hpbw
        grid_az, grid_el = np.meshgrid(az, el, indexing="ij")
        return grid_az.ravel(), grid_el.ravel()


def antenna_gain(pattern: AntennaPattern, az_offset: float, el_offset: float) -> float:
    """Linear gain of a pattern at an offset from boresight, degrees."""
    return pattern.gain(az_offset, el_offset)
