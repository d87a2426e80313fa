"""Atmospheric attenuation from a tabulated dB/m profile."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import TYPE_CHECKING, Final, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

if TYPE_CHECKING:
    from pathlib import Path

    from numpy.typing import NDArray

    from chansim.config import SimulationConfig

DEFAULT_TABLE: Final[str] = "attenuation_v1.txt"
REFERENCE_HUMIDITY_PCT: Final[float] = 80.0
REFERENCE_RAIN_RATE_MMHR: Final[float] = 5.0


class WeatherConditions(BaseModel):
    """Atmospheric conditions along the link."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    pressure: float = Field(default=1013.25, gt=0)
    """Barometric pressure, mbar."""

    humidity: float = Field(default=REFERENCE_HUMIDITY_PCT, ge=0, le=100)
    """Relative humidity, percent."""

    temperature: float = 20.0
    """Celsius."""

    rain_rate: float = Field(default=0.0, ge=0)
    """mm/hr."""

    @classmethod
    def from_config(cls, config: SimulationConfig) -> Self:
        """Takes the weather inputs of a simulation config."""
        return cls(
            pressure=config.barometric_pressure,
            humidity=config.humidity,
            temperature=config.temperature,
            rain_rate=config.rain_rate,
        )


@dataclass(frozen=True)
class AttenuationTable:
    """Specific attenuation components on an ascending frequency grid.

    Values are interpolated linearly against log10 of frequency. The vapor
    column is scaled linearly with humidity and the rain column linearly with
    rain rate, relative to the conditions the table was recorded at. Pressure
    and temperature are taken to be at the reference values.
    """

    freq_ghz: NDArray[np.float64]
    dry: NDArray[np.float64]
    vapor: NDArray[np.float64]
    haze: NDArray[np.float64]
    rain: NDArray[np.float64]
    reference_humidity: float = REFERENCE_HUMIDITY_PCT
    reference_rain_rate: float = REFERENCE_RAIN_RATE_MMHR

    def __post_init__(self) -> None:
        """Checks the grid is usable for interpolation."""
        if self.freq_ghz.ndim != 1 or self.freq_ghz.size < 2:
            raise ValueError("Attenuation table needs at least two frequencies")
        if np.any(np.diff(self.freq_ghz) <= 0):
            raise ValueError("Attenuation table frequencies must be ascending")
        for column in (self.dry, self.vapor, self.haze, self.rain):
            if column.shape != self.freq_ghz.shape or np.any(column < 0):
                raise ValueError(
                    "Attenuation table columns must be non-negative and match "
                    "the frequency grid"
                )

    @classmethod
    def from_file(
        cls,
        path: Path | str,
        reference_humidity: float = REFERENCE_HUMIDITY_PCT,
        reference_rain_rate: float = REFERENCE_RAIN_RATE_MMHR,
    ) -> Self:
        """Loads a whitespace-delimited table.

        Columns: freq_ghz alpha_dry alpha_vapor alpha_haze alpha_rain, dB/m.
        """
        data = np.loadtxt(path, comments="#", ndmin=2, dtype=np.float64)
        if data.shape[1] != 5:
            raise ValueError(
                f"Attenuation table {path} has {data.shape[1]} columns, expected 5"
            )
        return cls(
            freq_ghz=data[:, 0],
            dry=data[:, 1],
            vapor=data[:, 2],
            haze=data[:, 3],
            rain=data[:, 4],
            reference_humidity=reference_humidity,
            reference_rain_rate=reference_rain_rate,
        )

    @property
    def frequency_range(self) -> tuple[float, float]:
        """Lowest and highest tabulated frequency, GHz."""
        return float(self.freq_ghz[0]), float(self.freq_ghz[-1])

    def components(
        self, frequency: float, weather: WeatherConditions
    ) -> dict[str, float]:
        """Returns the dry, vapor, haze and rain terms in dB/m."""
        lo, hi = self.frequency_range
        if not lo <= frequency <= hi:
            raise ValueError(
                f"frequency {frequency:g} GHz outside attenuation table range "
                f"[{lo:g}, {hi:g}] GHz"
            )
        x = np.log10(self.freq_ghz)
        xf = np.log10(frequency)

        def at(column: NDArray[np.float64]) -> float:
            return float(np.interp(xf, x, column))

        return {
            "dry": at(self.dry),
            "vapor": at(self.vapor) * weather.humidity / self.reference_humidity,
            "haze": at(self.haze),
            "rain": at(self.rain) * weather.rain_rate / self.reference_rain_rate,
        }

    def alpha(self, frequency: float, weather: WeatherConditions) -> float:
        """Total specific attenuation in dB/m."""
        return sum(self.components(frequency, weather).values())


@lru_cache(maxsize=8)
def load_attenuation_table(
    path: Path | None = None,
    reference_humidity: float = REFERENCE_HUMIDITY_PCT,
    reference_rain_rate: float = REFERENCE_RAIN_RATE_MMHR,
) -> AttenuationTable:
    """Loads and caches a table. Without a path the shipped table is used."""
    if path is not None:
        return AttenuationTable.from_file(path, reference_humidity, reference_rain_rate)
    source = resources.files("chansim.pathloss") / "data" / DEFAULT_TABLE
    with resources.as_file(source) as shipped:
        return AttenuationTable.from_file(
            shipped, reference_humidity, reference_rain_rate
        )


def default_attenuation_table() -> AttenuationTable:
    """The table shipped with the package."""
    return load_attenuation_table()


def attenuation_factor(
    frequency: float,
    weather: WeatherConditions,
    table: AttenuationTable | None = None,
) -> float:
    """Specific attenuation alpha in dB/m of dry air, vapor, haze and rain.

    Raises:
        ValueError: If the frequency is outside the table.
    """
    return (table or default_attenuation_table()).alpha(frequency, weather)
