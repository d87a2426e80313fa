"""Calibration constants of the statistical model and simulation knobs.

The distributions that generate time clusters, spatial lobes and subpaths are
stand-ins chosen to satisfy the published clustering constraints. They are all
collected here so that a recalibrated set can be dropped in as a parameter
file without touching the generators.
"""

from pathlib import Path
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from chansim.constants import (
    MAX_SPATIAL_LOBES,
    MAX_TIME_CLUSTERS,
    MIN_INTER_CLUSTER_VOID_NS,
)


class ModelParameters(BaseModel):
    """Tunable model constants. Every field can be set from a parameter file."""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    params_version: str = "1"

    # Large-scale
    apply_atmosphere: bool = True
    ple_override: float | None = Field(default=None, gt=0)
    shadow_sigma_override_db: float | None = Field(default=None, ge=0)
    attenuation_table: Path | None = None
    reference_humidity_pct: float = Field(default=80.0, gt=0, le=100)
    reference_rain_rate_mmhr: float = Field(default=5.0, gt=0)

    # Time clusters
    max_time_clusters: int = Field(
        default=MAX_TIME_CLUSTERS, ge=1, le=MAX_TIME_CLUSTERS
    )
    min_void_ns: float = Field(
        default=MIN_INTER_CLUSTER_VOID_NS, ge=MIN_INTER_CLUSTER_VOID_NS
    )
    void_excess_mean_ns: float = Field(default=10.0, ge=0)
    cluster_duration_mean_ns: float = Field(default=20.0, gt=0)
    cluster_duration_cap_ns: float = Field(default=100.0, gt=0)
    cluster_decay_ns: float = Field(default=50.0, gt=0)
    cluster_shadowing_db: float = Field(default=3.0, ge=0)

    # Subpaths
    max_subpaths: int = Field(default=10, ge=1)
    subpath_decay_ns: float = Field(default=17.0, gt=0)
    subpath_power_spread_db: float = Field(default=6.0, ge=0)

    # Spatial lobes
    mean_spatial_lobes: float = Field(default=2.0, gt=0)
    max_spatial_lobes: int = Field(
        default=MAX_SPATIAL_LOBES, ge=1, le=MAX_SPATIAL_LOBES
    )
    lobe_min_separation_deg: float = Field(default=30.0, ge=0, lt=360)
    lobe_elevation_sigma_deg: float = Field(default=10.0, ge=0)
    lobe_elevation_limit_deg: float = Field(default=45.0, ge=0, le=90)
    mpc_azimuth_spread_deg: float = Field(default=10.0, ge=0)
    mpc_elevation_spread_deg: float = Field(default=5.0, ge=0)

    # LOS direct path
    los_power_fraction_min: float = Field(default=0.4, ge=0, le=1)
    los_power_fraction_max: float = Field(default=0.8, ge=0, lt=1)

    # Antennas
    sidelobe_level_db: float = Field(default=30.0, gt=0)
    boresight_gain_dbi: float | None = None
    small_scale_elements: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _los_fraction_ordered(self) -> Self:
        if self.los_power_fraction_min > self.los_power_fraction_max:
            raise ValueError(
                "los_power_fraction_min must not exceed los_power_fraction_max"
            )
        return self
