"""Tests for the atmospheric attenuation table."""

from pathlib import Path

import numpy as np
import pytest

from chansim.pathloss import (
    AttenuationTable,
    WeatherConditions,
    default_attenuation_table,
    load_attenuation_table,
)

# ruff: noqa: PLR2004


def test_shipped_table_covers_the_frequency_range() -> None:
    """Tests the shipped table spans 0.5 to 100 GHz."""
    table = default_attenuation_table()
    assert table.frequency_range == (0.5, 100.0)


def test_shipped_table_is_cached() -> None:
    """Tests the shipped table is only read once."""
    assert load_attenuation_table() is load_attenuation_table()


def test_humidity_scales_vapor_only() -> None:
    """Tests the vapor column scales with relative humidity."""
    table = default_attenuation_table()
    humid = table.components(28.0, WeatherConditions(humidity=80.0))
    dry = table.components(28.0, WeatherConditions(humidity=40.0))
    assert dry["vapor"] == pytest.approx(humid["vapor"] / 2)
    assert dry["dry"] == humid["dry"]


def test_frequency_outside_table_raises() -> None:
    """Tests that extrapolation is refused."""
    table = AttenuationTable(
        freq_ghz=np.array([10.0, 20.0]),
        dry=np.zeros(2),
        vapor=np.zeros(2),
        haze=np.zeros(2),
        rain=np.zeros(2),
    )
    with pytest.raises(ValueError, match="outside attenuation table range"):
        table.alpha(28.0, WeatherConditions())


def test_table_must_be_ascending() -> None:
    """Tests the grid check."""
    with pytest.raises(ValueError, match="ascending"):
        AttenuationTable(
            freq_ghz=np.array([20.0, 10.0]),
            dry=np.zeros(2),
            vapor=np.zeros(2),
            haze=np.zeros(2),
            rain=np.zeros(2),
        )


def test_user_table_from_file(tmp_path: Path) -> None:
    """Tests substituting a table from disk."""
    path = tmp_path / "table.txt"
    path.write_text(
        "# freq dry vapor haze rain\n1 0.001 0 0 0\n100 0.001 0 0 0\n",
        encoding="utf-8",
    )
    table = load_attenuation_table(path)
    assert table.alpha(28.0, WeatherConditions()) == pytest.approx(0.001)


def test_user_table_with_wrong_columns_raises(tmp_path: Path) -> None:
    """Tests the column count check."""
    path = tmp_path / "table.txt"
    path.write_text("1 2 3\n4 5 6\n", encoding="utf-8")
    with pytest.raises(ValueError, match="expected 5"):
        AttenuationTable.from_file(path)
