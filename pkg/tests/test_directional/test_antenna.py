"""Tests for the beamwidth antenna pattern."""

import math
from typing import Literal

import numpy as np
import pytest

from chansim.config import ModelParameters, SimulationConfig
from chansim.directional import AntennaPattern, PointingAngle, antenna_gain, wrap_angle

# ruff: noqa: PLR2004


def test_boresight_gain_from_beamwidths() -> None:
    """Tests G0 = 41253 / (az_hpbw * el_hpbw)."""
    pattern = AntennaPattern(10.0, 10.0)
    assert pattern.boresight_gain == pytest.approx(412.53)
    assert antenna_gain(pattern, 0.0, 0.0) == pytest.approx(412.53)


@pytest.mark.parametrize("az_hpbw, el_hpbw", [(10.0, 10.0), (30.0, 7.0), (360.0, 45.0)])
def test_half_beamwidth_offset_is_half_power(az_hpbw: float, el_hpbw: float) -> None:
    """Tests the -3 dB points sit half a beamwidth off boresight."""
    pattern = AntennaPattern(az_hpbw, el_hpbw)
    g0 = pattern.boresight_gain
    az_drop = 10 * math.log10(pattern.gain(az_hpbw / 2, 0.0) / g0)
    el_drop = 10 * math.log10(pattern.gain(0.0, el_hpbw / 2) / g0)
    assert az_drop == pytest.approx(-10 * math.log10(2), abs=1e-9)
    assert el_drop == pytest.approx(-10 * math.log10(2), abs=1e-9)


def test_gain_is_floored_at_the_sidelobe_level() -> None:
    """Tests the sidelobe floor 30 dB below boresight."""
    pattern = AntennaPattern(10.0, 10.0)
    assert pattern.gain(180.0, 0.0) == pytest.approx(pattern.boresight_gain * 1e-3)
    assert pattern.sidelobe_gain == pytest.approx(pattern.boresight_gain * 1e-3)


def test_gain_wraps_azimuth_offsets() -> None:
    """Tests that 355° off boresight is 5° off."""
    pattern = AntennaPattern(10.0, 10.0)
    assert pattern.gain(355.0, 0.0) == pytest.approx(pattern.gain(-5.0, 0.0))


def test_gain_accepts_arrays() -> None:
    """Tests vectorized evaluation."""
    pattern = AntennaPattern(10.0, 10.0)
    gains = pattern.gain(np.array([0.0, 5.0, 90.0]), np.zeros(3))
    assert gains.shape == (3,)
    assert gains[0] > gains[1] > gains[2]


def test_isotropic_pattern_has_unit_gain() -> None:
    """Tests the omni pattern."""
    pattern = AntennaPattern.isotropic()
    assert pattern.gain(123.0, -40.0) == 1.0
    assert pattern.boresight_gain_db == 0.0


@pytest.mark.parametrize("az_hpbw, el_hpbw", [(6.0, 10.0), (10.0, 46.0), (361.0, 10.0)])
def test_beamwidths_out_of_range_raise(az_hpbw: float, el_hpbw: float) -> None:
    """Tests the beamwidth ranges."""
    with pytest.raises(ValueError, match="HPBW out of"):
        AntennaPattern(az_hpbw, el_hpbw)


def test_pattern_from_config_and_params() -> None:
    """Tests building the TX and RX patterns."""
    config = SimulationConfig(tx_az_hpbw=20.0, rx_el_hpbw=30.0)
    tx = AntennaPattern.from_config(config, "tx")
    rx = AntennaPattern.from_config(config, "rx")
    assert (tx.az_hpbw, tx.el_hpbw) == (20.0, 10.0)
    assert (rx.az_hpbw, rx.el_hpbw) == (10.0, 30.0)

    params = ModelParameters(boresight_gain_dbi=20.0, sidelobe_level_db=20.0)
    pinned = AntennaPattern.from_config(config, "tx", params)
    assert pinned.boresight_gain_db == pytest.approx(20.0)
    assert pinned.sidelobe_gain == pytest.approx(1.0)


def test_pointing_grid_is_lexicographic() -> None:
    """Tests the pointing grid steps and order."""
    az, el = AntennaPattern(30.0, 30.0).pointing_grid()
    assert az.size == el.size == 12 * 6
    assert (az[0], el[0]) == (0.0, -90.0)
    assert (az[1], el[1]) == (0.0, -60.0)
    assert (az[6], el[6]) == (30.0, -90.0)
    assert az.max() == 330.0
    assert el.max() == 60.0


@pytest.mark.parametrize(
    "angle, expected", [(0.0, 0.0), (190.0, -170.0), (-180.0, 180.0), (540.0, 180.0)]
)
def test_wrap_angle(angle: float, expected: float) -> None:
    """Tests wrapping into (-180, 180]."""
    assert float(wrap_angle(angle)) == pytest.approx(expected)


def test_pointing_angle_validation() -> None:
    """Tests normalized pointing angles."""
    with pytest.raises(ValueError, match="azimuth"):
        PointingAngle(360.0, 0.0)
    with pytest.raises(ValueError, match="elevation"):
        PointingAngle(0.0, 91.0)
    assert PointingAngle.normalized(-10.0, 5.0) == PointingAngle(350.0, 5.0)


@pytest.mark.parametrize("side", ["tx", "rx"])
def test_widest_configured_beam_is_isotropic(side: Literal["tx", "rx"]) -> None:
    """Tests 360° by 45° beamwidths give unit gain in every direction."""
    config = SimulationConfig(
        tx_az_hpbw=360.0,
        tx_el_hpbw=45.0,
        rx_az_hpbw=360.0,
        rx_el_hpbw=45.0,
    )
    for params in (None, ModelParameters(sidelobe_level_db=20.0)):
        pattern = AntennaPattern.from_config(config, side, params)
        assert pattern.omni
        assert pattern.boresight_gain_db == 0.0
        az, el = np.meshgrid(np.arange(0.0, 360.0, 15.0), np.arange(-90.0, 91.0, 15.0))
        np.testing.assert_array_equal(pattern.gain(az, el), np.ones(az.shape))
        assert pattern.gain(180.0, 0.0) == pattern.gain(0.0, 90.0) == 1.0


def test_narrower_configured_beam_stays_directional() -> None:
    """Tests only the widest beamwidths map to the omni pattern."""
    config = SimulationConfig(tx_az_hpbw=360.0, tx_el_hpbw=30.0)
    pattern = AntennaPattern.from_config(config, "tx")
    assert not pattern.omni
    assert pattern.gain(0.0, 0.0) > pattern.gain(0.0, 90.0)
