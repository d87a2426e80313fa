"""Large-scale path loss: the close-in model, atmosphere and fitting."""

from .atmosphere import (
    AttenuationTable,
    WeatherConditions,
    attenuation_factor,
    default_attenuation_table,
    load_attenuation_table,
)
from .ci import (
    PathLossSample,
    additional_losses,
    ci_path_loss,
    fspl,
    sample_shadow_fading,
)
from .fit import PathLossFit, fit_by_kind, fit_ple_mmse, load_path_loss_samples

__all__ = [
    "AttenuationTable",
    "PathLossFit",
    "PathLossSample",
    "WeatherConditions",
    "additional_losses",
    "attenuation_factor",
    "ci_path_loss",
    "default_attenuation_table",
    "load_attenuation_table",
    "fit_by_kind",
    "fit_ple_mmse",
    "fspl",
    "load_path_loss_samples",
    "sample_shadow_fading",
]
