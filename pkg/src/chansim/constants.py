"""Physical constants and fixed model limits shared between modules."""

from typing import Final, Literal, TypeAlias

SPEED_OF_LIGHT: Final[float] = 2.99792458e8
"""Speed of light in vacuum, m/s."""

FREQUENCY_RANGE_GHZ: Final[tuple[float, float]] = (0.5, 100.0)
BANDWIDTH_RANGE_MHZ: Final[tuple[float, float]] = (0.0, 800.0)
AZIMUTH_HPBW_RANGE_DEG: Final[tuple[float, float]] = (7.0, 360.0)
ELEVATION_HPBW_RANGE_DEG: Final[tuple[float, float]] = (7.0, 45.0)

MIN_INTER_CLUSTER_VOID_NS: Final[float] = 25.0
MAX_TIME_CLUSTERS: Final[int] = 6
MAX_SPATIAL_LOBES: Final[int] = 5

DIRECTIVITY_CONSTANT: Final[float] = 41253.0
"""Square degrees in a sphere, used for the beamwidth directivity estimate."""

PathLossKind: TypeAlias = Literal["omni", "dir", "dir-best"]
PATH_LOSS_KINDS: Final[tuple[PathLossKind, ...]] = ("omni", "dir", "dir-best")
