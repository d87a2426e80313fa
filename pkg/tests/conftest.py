"""Root configuration for pytest."""

from collections.abc import Callable, Generator
from pathlib import Path
from typing import Any

import numpy as np
import pytest
from pytest import MonkeyPatch

from chansim.config import SimulationConfig, serialize_config
from chansim.prints import set_quiet
from chansim.sscm import MultipathComponent, OmniCIR


@pytest.fixture(autouse=True)
def set_column_width(monkeypatch: MonkeyPatch) -> None:
    """Sets a higher column width to prevent tests from failing.

    Used for Typer CLI tests.
    """
    monkeypatch.setenv("TERMINAL_WIDTH", "3000")


@pytest.fixture(autouse=True)
def reset_quiet() -> Generator[None]:
    """Restores printing after tests that pass --quiet."""
    yield
    set_quiet(False)


@pytest.fixture
def in_tmp_path(tmp_path: Path, monkeypatch: MonkeyPatch) -> Generator[Path]:
    """Monkeypatches into a tmp_path."""
    monkeypatch.chdir(tmp_path)
    yield tmp_path


@pytest.fixture
def default_config() -> SimulationConfig:
    """The default 28 GHz UMi LOS configuration."""
    return SimulationConfig()


@pytest.fixture
def rng() -> np.random.Generator:
    """A seeded random generator."""
    return np.random.default_rng(20240611)


@pytest.fixture
def make_mpc() -> Callable[..., MultipathComponent]:
    """Builds MPCs with every angle at zero unless given."""

    def _make(delay: float, power: float, **kwargs: Any) -> MultipathComponent:
        fields: dict[str, Any] = {
            "phase": 0.0,
            "aod_az": 0.0,
            "aod_el": 0.0,
            "aoa_az": 0.0,
            "aoa_el": 0.0,
        }
        fields.update(kwargs)
        return MultipathComponent(delay=delay, power=power, **fields)

    return _make


@pytest.fixture
def two_tap_cir(make_mpc: Callable[..., MultipathComponent]) -> OmniCIR:
    """Two equal 1 mW taps 100 ns apart."""
    return OmniCIR.from_mpcs([make_mpc(0.0, 1.0), make_mpc(100.0, 1.0)])


@pytest.fixture
def lobed_cir(make_mpc: Callable[..., MultipathComponent]) -> OmniCIR:
    """Four MPCs in two time clusters and two lobes on each side."""
    return OmniCIR.from_mpcs(
        [
            make_mpc(333.6, 4e-6, aod_az=0.0, aoa_az=180.0),
            make_mpc(340.0, 2e-6, phase=1.0, aod_az=5.0, aoa_az=185.0),
            make_mpc(
                400.0,
                1e-6,
                phase=2.0,
                aod_az=90.0,
                aod_el=10.0,
                aoa_az=270.0,
                aoa_el=-5.0,
                cluster_id=1,
                lobe_id_tx=1,
                lobe_id_rx=1,
            ),
            make_mpc(
                420.0,
                5e-7,
                phase=3.0,
                aod_az=95.0,
                aoa_az=275.0,
                cluster_id=1,
                lobe_id_tx=1,
                lobe_id_rx=1,
            ),
        ],
        tr_distance=100.0,
        tx_power=30.0,
    )


@pytest.fixture
def small_config() -> SimulationConfig:
    """A quick configuration with wide beams and a narrow band."""
    return SimulationConfig(
        rf_bandwidth=100.0,
        tr_distance_min=20.0,
        tr_distance_max=150.0,
        tx_az_hpbw=30.0,
        tx_el_hpbw=30.0,
        rx_az_hpbw=30.0,
        rx_el_hpbw=30.0,
    )


@pytest.fixture
def config_file(tmp_path: Path, small_config: SimulationConfig) -> Path:
    """small_config written as a parameter file."""
    path = tmp_path / "config.txt"
    path.write_text(serialize_config(small_config), encoding="utf-8")
    return path
