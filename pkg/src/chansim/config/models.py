"""The simulation parameter model and the scenario default table."""

from collections.abc import Mapping
from enum import StrEnum
from typing import Any, Final, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationInfo,
    field_validator,
    model_validator,
)

from chansim.constants import (
    AZIMUTH_HPBW_RANGE_DEG,
    BANDWIDTH_RANGE_MHZ,
    ELEVATION_HPBW_RANGE_DEG,
    FREQUENCY_RANGE_GHZ,
)


class Scenario(StrEnum):
    """Propagation scenario."""

    UMi = "UMi"
    UMa = "UMa"
    RMa = "RMa"


class Environment(StrEnum):
    """Line-of-sight condition."""

    LOS = "LOS"
    NLOS = "NLOS"


class Polarization(StrEnum):
    """Relative polarization of the TX and RX antennas."""

    CoPol = "CoPol"
    XPol = "XPol"


class ArrayType(StrEnum):
    """Antenna array layout."""

    ULA = "ULA"
    URA = "URA"


def _fmt(value: float) -> str:
    return f"{value:g}"


def _check_range(
    value: float, bounds: tuple[float, float], label: str, unit: str
) -> float:
    lo, hi = bounds
    if not lo <= value <= hi:
        raise ValueError(f"{label} out of [{_fmt(lo)}, {_fmt(hi)}]{unit}")
    return value


class SimulationConfig(BaseModel):
    """All user inputs of a simulation: channel parameters and antenna properties.

    Attribute names are the Python names; aliases are the keys used in
    parameter files. Defaults are the 28 GHz UMi LOS 2x2 ULA example set. An
    instance that exists has passed every range and consistency check.
    """

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        populate_by_name=True,
        allow_inf_nan=False,
    )

    # Channel parameters
    frequency: float = Field(default=28.0, alias="frequency_ghz")
    rf_bandwidth: float = Field(default=800.0, alias="rf_bandwidth_mhz")
    scenario: Scenario = Field(default=Scenario.UMi, alias="scenario")
    environment: Environment = Field(default=Environment.LOS, alias="environment")
    tr_distance_min: float = Field(default=100.0, alias="tr_dist_min_m")
    tr_distance_max: float = Field(default=100.0, alias="tr_dist_max_m")
    tx_power: float = Field(default=30.0, alias="tx_power_dbm")
    barometric_pressure: float = Field(default=1013.25, alias="pressure_mbar")
    humidity: float = Field(default=50.0, alias="humidity_pct")
    temperature: float = Field(default=20.0, alias="temperature_c")
    rain_rate: float = Field(default=0.0, alias="rain_rate_mmhr")
    polarization: Polarization = Field(
        default=Polarization.CoPol, alias="polarization"
    )
    foliage_loss: bool = Field(default=False, alias="foliage")
    foliage_attenuation: float = Field(default=0.4, alias="foliage_atten_dbm_per_m")
    foliage_distance: float = Field(default=0.0, alias="foliage_dist_m")
    xpd: float = Field(default=25.0, alias="xpd_db")

    # Antenna properties
    tx_array_type: ArrayType = Field(default=ArrayType.ULA, alias="tx_array")
    rx_array_type: ArrayType = Field(default=ArrayType.ULA, alias="rx_array")
    num_tx_elements: int = Field(default=2, alias="n_tx")
    num_rx_elements: int = Field(default=2, alias="n_rx")
    tx_spacing: float = Field(default=0.5, alias="tx_spacing_wl")
    rx_spacing: float = Field(default=0.5, alias="rx_spacing_wl")
    tx_elements_per_row: int = Field(default=2, alias="w_tx")
    rx_elements_per_row: int = Field(default=2, alias="w_rx")
    tx_az_hpbw: float = Field(default=10.0, alias="tx_az_hpbw_deg")
    tx_el_hpbw: float = Field(default=10.0, alias="tx_el_hpbw_deg")
    rx_az_hpbw: float = Field(default=10.0, alias="rx_az_hpbw_deg")
    rx_el_hpbw: float = Field(default=10.0, alias="rx_el_hpbw_deg")

    @field_validator("frequency")
    @classmethod
    def _frequency_in_range(cls, v: float) -> float:
        return _check_range(v, FREQUENCY_RANGE_GHZ, "frequency", " GHz")

    @field_validator("rf_bandwidth")
    @classmethod
    def _bandwidth_in_range(cls, v: float) -> float:
        return _check_range(v, BANDWIDTH_RANGE_MHZ, "RF bandwidth", " MHz")

    @field_validator("tx_az_hpbw", "rx_az_hpbw")
    @classmethod
    def _azimuth_hpbw_in_range(cls, v: float) -> float:
        return _check_range(v, AZIMUTH_HPBW_RANGE_DEG, "azimuth HPBW", "°")

    @field_validator("tx_el_hpbw", "rx_el_hpbw")
    @classmethod
    def _elevation_hpbw_in_range(cls, v: float) -> float:
        return _check_range(v, ELEVATION_HPBW_RANGE_DEG, "elevation HPBW", "°")

    @field_validator("humidity")
    @classmethod
    def _humidity_in_range(cls, v: float) -> float:
        return _check_range(v, (0.0, 100.0), "humidity", " %")

    @field_validator("tr_distance_min", "tr_distance_max")
    @classmethod
    def _distance_at_least_one_metre(cls, v: float, info: ValidationInfo) -> float:
        if v < 1.0:
            raise ValueError(f"{info.field_name} must be >= 1 m")
        return v

    @field_validator(
        "rain_rate", "foliage_attenuation", "foliage_distance", "xpd"
    )
    @classmethod
    def _non_negative(cls, v: float, info: ValidationInfo) -> float:
        if v < 0.0:
            raise ValueError(f"{info.field_name} must be >= 0")
        return v

    @field_validator("barometric_pressure", "tx_spacing", "rx_spacing")
    @classmethod
    def _positive(cls, v: float, info: ValidationInfo) -> float:
        if v <= 0.0:
            raise ValueError(f"{info.field_name} must be > 0")
        return v

    @field_validator(
        "num_tx_elements",
        "num_rx_elements",
        "tx_elements_per_row",
        "rx_elements_per_row",
    )
    @classmethod
    def _at_least_one(cls, v: int, info: ValidationInfo) -> int:
        if v < 1:
            raise ValueError(f"{info.field_name} must be >= 1")
        return v

    @model_validator(mode="after")
    def _distance_bounds_ordered(self) -> Self:
        if self.tr_distance_min > self.tr_distance_max:
            raise ValueError(
                "T-R distance lower bound "
                f"({_fmt(self.tr_distance_min)} m) exceeds upper bound "
                f"({_fmt(self.tr_distance_max)} m)"
            )
        return self

    @model_validator(mode="before")
    @classmethod
    def _ula_row_defaults_to_count(cls, data: Any) -> Any:
        """An omitted ULA elements per row takes the number of elements."""
        if not isinstance(data, Mapping):
            return data
        data = dict(data)
        for side in ("tx", "rx"):
            if f"w_{side}" in data or f"{side}_elements_per_row" in data:
                continue
            kind = data.get(f"{side}_array", data.get(f"{side}_array_type"))
            if kind not in (None, ArrayType.ULA):
                continue
            n = data.get(f"n_{side}", data.get(f"num_{side}_elements"))
            if n is not None:
                data[f"{side}_elements_per_row"] = n
        return data

    @model_validator(mode="after")
    def _array_shapes_consistent(self) -> Self:
        for side, kind, n, w in (
            ("TX", self.tx_array_type, self.num_tx_elements, self.tx_elements_per_row),
            ("RX", self.rx_array_type, self.num_rx_elements, self.rx_elements_per_row),
        ):
            if kind == ArrayType.ULA and w != n:
                raise ValueError(
                    f"{side} ULA must have elements per row ({w}) equal to the "
                    f"number of elements ({n})"
                )
            if kind == ArrayType.URA and n % w != 0:
                raise ValueError(
                    f"{side} URA elements per row ({w}) must divide the number "
                    f"of elements ({n})"
                )
        return self


def validate_config(raw: SimulationConfig | Mapping[str, Any]) -> SimulationConfig:
    """Validates a set of simulation parameters.

    Accepts either a mapping keyed by attribute names or file keys, or an
    existing config which is revalidated from scratch. Idempotent.

    Raises:
        pydantic.ValidationError: One error per violated invariant.
    """
    data = raw.model_dump() if isinstance(raw, SimulationConfig) else dict(raw)
    return SimulationConfig.model_validate(data)


class ScenarioDefaults(BaseModel):
    """Large-scale path loss parameters of a (scenario, environment) pair."""

    model_config = ConfigDict(frozen=True)

    ple: float = Field(gt=0)
    """Path loss exponent n of the close-in model."""

    shadow_sigma: float = Field(gt=0)
    """Shadow fading standard deviation, dB."""


SCENARIO_DEFAULTS: Final[dict[tuple[Scenario, Environment], ScenarioDefaults]] = {
    (Scenario.UMi, Environment.LOS): ScenarioDefaults(ple=2.0, shadow_sigma=4.0),
    (Scenario.UMi, Environment.NLOS): ScenarioDefaults(ple=3.2, shadow_sigma=7.0),
    (Scenario.UMa, Environment.LOS): ScenarioDefaults(ple=2.0, shadow_sigma=4.0),
    (Scenario.UMa, Environment.NLOS): ScenarioDefaults(ple=3.2, shadow_sigma=7.0),
    (Scenario.RMa, Environment.LOS): ScenarioDefaults(ple=2.16, shadow_sigma=4.0),
    (Scenario.RMa, Environment.NLOS): ScenarioDefaults(ple=2.75, shadow_sigma=8.0),
}


def scenario_defaults(
    scenario: Scenario | str, environment: Environment | str
) -> ScenarioDefaults:
    """Returns the default path loss exponent and shadow fading of a scenario."""
    return SCENARIO_DEFAULTS[(Scenario(scenario), Environment(environment))]
