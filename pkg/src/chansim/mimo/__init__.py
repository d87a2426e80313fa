"""MIMO-OFDM channel matrices and their condition numbers and capacity."""

from .arrays import ArrayGeometry
from .channel import (
    ChannelMatrixSet,
    channel_matrices,
    channel_matrix,
    normalize_channel_set,
    subcarrier_grid,
)
from .metrics import (
    INFINITE_CONDITION,
    POWER_ALLOCATIONS,
    ConditionNumberCDF,
    PowerAllocation,
    average_spectral_efficiency,
    condition_number_cdf,
    condition_number_db,
    condition_numbers,
    db_to_linear,
    empirical_cdf,
    spectral_efficiency,
    waterfilling,
)

__all__ = [
    "INFINITE_CONDITION",
    "POWER_ALLOCATIONS",
    "ArrayGeometry",
    "ChannelMatrixSet",
    "ConditionNumberCDF",
    "PowerAllocation",
    "average_spectral_efficiency",
    "channel_matrices",
    "channel_matrix",
    "condition_number_cdf",
    "condition_number_db",
    "condition_numbers",
    "db_to_linear",
    "empirical_cdf",
    "normalize_channel_set",
    "spectral_efficiency",
    "subcarrier_grid",
    "waterfilling",
]
