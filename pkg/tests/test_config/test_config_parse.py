"""Tests for key=value parameter files."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from chansim.config import (
    CONFIG_KEYS,
    ModelParameters,
    Polarization,
    SimulationConfig,
    load_config,
    load_model_parameters,
    parse_config,
    parse_model_parameters,
    serialize_config,
    serialize_model_parameters,
)
from chansim.exceptions import ConfigParseError

# ruff: noqa: PLR2004


def test_config_keys_follow_field_order() -> None:
    """Tests the file keys and their order."""
    assert len(CONFIG_KEYS) == 28
    assert CONFIG_KEYS[0] == "frequency_ghz"
    assert CONFIG_KEYS[-1] == "rx_el_hpbw_deg"


def test_serialize_writes_every_key_once() -> None:
    """Tests that a serialized config lists each key on its own line."""
    text = serialize_config(SimulationConfig())
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    assert [line.split(" = ")[0] for line in lines] == list(CONFIG_KEYS)
    assert "foliage = false" in lines
    assert "scenario = UMi" in lines


def test_serialized_config_parses_back() -> None:
    """Tests that parsing a serialized config gives the same config."""
    config = SimulationConfig(
        frequency=73.0, polarization=Polarization.XPol, foliage_loss=True
    )
    assert parse_config(serialize_config(config)) == config


def test_omitted_keys_take_defaults() -> None:
    """Tests that a partial file fills in defaults."""
    config = parse_config("frequency_ghz = 60  # V band\n\nn_tx = 4\nw_tx = 4\n")
    assert config.frequency == 60.0
    assert config.num_tx_elements == 4
    assert config.rf_bandwidth == SimulationConfig().rf_bandwidth


@pytest.mark.parametrize(
    "text, line, key, message",
    [
        ("frequency_ghz = 28\nbogus\n", 2, None, "expected 'key = value'"),
        ("= 3\n", 1, None, "missing key"),
        ("# header\nfoo = 1\n", 2, "foo", "unknown key 'foo'"),
        ("n_tx = 2\nn_tx = 3\n", 2, "n_tx", "duplicate key 'n_tx'"),
        ("frequency_ghz = fast\n", 1, "frequency_ghz", "invalid value 'fast'"),
        ("scenario = InH\n", 1, "scenario", "invalid value 'InH'"),
    ],
)
def test_parse_errors_carry_line_and_key(
    text: str, line: int, key: str | None, message: str
) -> None:
    """Tests that malformed files raise ConfigParseError with context."""
    with pytest.raises(ConfigParseError) as exc_info:
        parse_config(text)
    assert exc_info.value.line == line
    assert exc_info.value.key == key
    assert message in str(exc_info.value)
    assert str(exc_info.value).startswith(f"line {line}: ")


def test_parse_error_is_a_value_error() -> None:
    """Tests the exception hierarchy."""
    with pytest.raises(ValueError):
        parse_config("nonsense")


def test_range_errors_use_file_keys() -> None:
    """Tests that validation errors point to the parameter file key."""
    with pytest.raises(ValidationError) as exc_info:
        parse_config("frequency_ghz = 200\n")
    assert exc_info.value.errors()[0]["loc"] == ("frequency_ghz",)


def test_load_config_reads_file(tmp_path: Path) -> None:
    """Tests loading a config from disk."""
    path = tmp_path / "sim.txt"
    path.write_text("environment = NLOS\n", encoding="utf-8")
    assert load_config(path).environment == "NLOS"


def test_load_config_missing_file_raises_os_error(tmp_path: Path) -> None:
    """Tests that a missing file is an I/O error."""
    with pytest.raises(OSError):
        load_config(tmp_path / "missing.txt")


def test_model_parameters_round_trip(tmp_path: Path) -> None:
    """Tests model parameter files."""
    params = ModelParameters(
        apply_atmosphere=False, ple_override=2.5, attenuation_table=tmp_path / "t.txt"
    )
    text = serialize_model_parameters(params)
    assert "apply_atmosphere = false" in text
    assert "shadow_sigma_override_db" not in text

    path = tmp_path / "params.txt"
    path.write_text(text, encoding="utf-8")
    assert load_model_parameters(path) == params


def test_model_parameters_reject_inverted_los_fraction() -> None:
    """Tests the LOS power fraction ordering."""
    with pytest.raises(ValidationError, match="los_power_fraction_min"):
        parse_model_parameters(
            "los_power_fraction_min = 0.7\nlos_power_fraction_max = 0.5\n"
        )
