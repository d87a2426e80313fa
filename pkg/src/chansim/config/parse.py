"""Reading and writing flat key=value parameter files.

One ``key = value`` per line, ``#`` starts a comment, blank lines are ignored.
The same format is used for simulation configs and model parameter files.
"""

from enum import Enum
from pathlib import Path
from typing import Any, Final, TypeVar

from pydantic import BaseModel, TypeAdapter, ValidationError

from chansim.exceptions import ConfigParseError

from .models import SimulationConfig
from .params import ModelParameters

ModelT = TypeVar("ModelT", bound=BaseModel)

CONFIG_KEYS: Final[tuple[str, ...]] = tuple(
    field.alias or name for name, field in SimulationConfig.model_fields.items()
)
"""Parameter file keys of a simulation config, in file order."""

_CONFIG_HEADER: Final[str] = "# chansim simulation parameters"
_PARAMS_HEADER: Final[str] = "# chansim model parameters"


def _read_lines(text: str) -> dict[str, tuple[int, str]]:
    """Splits text into key -> (line number, raw value)."""
    entries: dict[str, tuple[int, str]] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(f"expected 'key = value', got {line!r}", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigParseError("missing key before '='", lineno)
        if key in entries:
            raise ConfigParseError(
                f"duplicate key {key!r} (first set on line {entries[key][0]})",
                lineno,
                key,
            )
        entries[key] = (lineno, value)
    return entries


def _parse_model(text: str, model: type[ModelT]) -> ModelT:
    by_key = {
        field.alias or name: field.annotation
        for name, field in model.model_fields.items()
    }
    values: dict[str, Any] = {}
    for key, (lineno, raw) in _read_lines(text).items():
        if key not in by_key:
            raise ConfigParseError(f"unknown key {key!r}", lineno, key)
        try:
            values[key] = TypeAdapter(by_key[key]).validate_python(raw)
        except ValidationError as e:
            reason = e.errors()[0]["msg"]
            raise ConfigParseError(
                f"invalid value {raw!r} for {key!r}: {reason}", lineno, key
            ) from e
    return model.model_validate(values)


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _serialize_model(model: BaseModel, header: str) -> str:
    lines = [header]
    for name, field in type(model).model_fields.items():
        value = getattr(model, name)
        if value is None:
            continue
        lines.append(f"{field.alias or name} = {_format_value(value)}")
    return "\n".join(lines) + "\n"


def parse_config(text: str) -> SimulationConfig:
    """Parses simulation parameters from key=value text.

    Omitted keys take their defaults.

    Raises:
        ConfigParseError: A malformed line, unknown or duplicate key, or an
            unparsable value. Carries the line number.
        pydantic.ValidationError: The parsed values violate a range or
            consistency rule.
    """
    return _parse_model(text, SimulationConfig)


def serialize_config(config: SimulationConfig) -> str:
    """Writes every simulation parameter as key=value text."""
    return _serialize_model(config, _CONFIG_HEADER)


def load_config(path: Path) -> SimulationConfig:
    """Reads and parses a simulation parameter file."""
    return parse_config(path.read_text(encoding="utf-8"))


def parse_model_parameters(text: str) -> ModelParameters:
    """Parses model parameters from key=value text. See parse_config."""
    return _parse_model(text, ModelParameters)


def serialize_model_parameters(params: ModelParameters) -> str:
    """Writes every model parameter that is set as key=value text."""
    return _serialize_model(params, _PARAMS_HEADER)


def load_model_parameters(path: Path) -> ModelParameters:
    """Reads and parses a model parameter file."""
    return parse_model_parameters(path.read_text(encoding="utf-8"))
