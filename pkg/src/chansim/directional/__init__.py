"""Antenna patterns, directional PDPs and pointing searches."""

from .antenna import (
    AntennaPattern,
    PointingAngle,
    antenna_gain,
    linear_to_db,
    wrap_angle,
)
from .pdp import (
    BestDirection,
    PointedMPC,
    best_direction_path_loss,
    best_direction_search,
    directional_path_loss,
    directional_pdp,
    directional_powers,
    pointed_at_mpcs,
    small_scale_pdps,
)

__all__ = [
    "AntennaPattern",
    "BestDirection",
    "PointedMPC",
    "PointingAngle",
    "antenna_gain",
    "best_direction_path_loss",
    "best_direction_search",
    "directional_path_loss",
    "directional_pdp",
    "directional_powers",
    "linear_to_db",
    "pointed_at_mpcs",
    "small_scale_pdps",
    "wrap_angle",
]
