"""Simulation parameters, model constants and scenario defaults."""

from .models import (
    SCENARIO_DEFAULTS,
    ArrayType,
    Environment,
    Polarization,
    Scenario,
    ScenarioDefaults,
    SimulationConfig,
    scenario_defaults,
    validate_config,
)
from .params import ModelParameters
from .parse import (
    CONFIG_KEYS,
    load_config,
    load_model_parameters,
    parse_config,
    parse_model_parameters,
    serialize_config,
    serialize_model_parameters,
)

__all__ = [
    "CONFIG_KEYS",
    "SCENARIO_DEFAULTS",
    "ArrayType",
    "Environment",
    "ModelParameters",
    "Polarization",
    "Scenario",
    "ScenarioDefaults",
    "SimulationConfig",
    "load_config",
    "load_model_parameters",
    "parse_config",
    "parse_model_parameters",
    "scenario_defaults",
    "serialize_config",
    "serialize_model_parameters",
    "validate_config",
]
