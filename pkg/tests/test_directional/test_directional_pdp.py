"""Tests for directional and small-scale PDPs."""

from collections.abc import Callable

import numpy as np
import pytest

from chansim.config import Environment, SimulationConfig
from chansim.directional import (
    AntennaPattern,
    PointingAngle,
    best_direction_path_loss,
    best_direction_search,
    directional_path_loss,
    directional_pdp,
    pointed_at_mpcs,
    small_scale_pdps,
)
from chansim.sscm import MultipathComponent, OmniCIR, compute_pdp, generate_cir

# ruff: noqa: PLR2004


@pytest.fixture
def pencil() -> AntennaPattern:
    """A 10° by 10° beam."""
    return AntennaPattern(10.0, 10.0)


def test_directional_path_loss_removes_antenna_gains() -> None:
    """Tests PL_dir = P_t + G_t + G_r - P_r."""
    assert directional_path_loss(30.0, 26.0, 26.0, -40.0) == 122.0


def test_single_path_best_direction_is_its_angles(
    make_mpc: Callable[..., MultipathComponent], pencil: AntennaPattern
) -> None:
    """Tests that the search finds a lone path and loses nothing over omni."""
    cir = OmniCIR.from_mpcs(
        [make_mpc(400.0, 1e-6, aod_az=40.0, aod_el=10.0, aoa_az=220.0, aoa_el=-10.0)],
        tr_distance=100.0,
        tx_power=30.0,
    )
    best = best_direction_search(cir, pencil, pencil, 800.0)
    assert best.tx_pointing == PointingAngle(40.0, 10.0)
    assert best.rx_pointing == PointingAngle(220.0, -10.0)
    assert best_direction_path_loss(cir, best, pencil, pencil) == pytest.approx(
        cir.omni_path_loss, abs=1e-9
    )


def test_best_direction_never_beats_omni(
    lobed_cir: OmniCIR, pencil: AntennaPattern
) -> None:
    """Tests that directional path loss is at least the omni path loss."""
    best = best_direction_search(lobed_cir, pencil, pencil, 800.0)
    assert (
        best_direction_path_loss(lobed_cir, best, pencil, pencil)
        >= lobed_cir.omni_path_loss - 1e-9
    )


def test_best_direction_picks_the_strongest_lobe(
    lobed_cir: OmniCIR, pencil: AntennaPattern
) -> None:
    """Tests the search picks the lobe holding most of the power."""
    best = best_direction_search(lobed_cir, pencil, pencil, 800.0)
    assert best.tx_pointing.azimuth in (0.0, 10.0)
    assert best.rx_pointing.azimuth in (180.0, 190.0)
    assert best.tx_pointing.elevation == 0.0


def test_ties_go_to_the_first_pointing(lobed_cir: OmniCIR) -> None:
    """Tests the lexicographic tie-break with isotropic antennas."""
    omni = AntennaPattern.isotropic()
    best = best_direction_search(lobed_cir, omni, omni, 800.0)
    assert best.tx_pointing == PointingAngle(0.0, -90.0)
    assert best.rx_pointing == PointingAngle(0.0, -90.0)
    assert best.pdp.total_power_mw == pytest.approx(lobed_cir.powers.sum())


def test_directional_pdp_weights_by_both_gains(
    lobed_cir: OmniCIR, pencil: AntennaPattern
) -> None:
    """Tests that pointing away from a path suppresses it to the sidelobe floor."""
    pdp = directional_pdp(
        lobed_cir,
        PointingAngle(90.0, 10.0),
        PointingAngle(270.0, -5.0),
        pencil,
        pencil,
        800.0,
    )
    g0 = pencil.boresight_gain
    # the third path sits on both boresights
    third = lobed_cir.delays[2]
    index = int(np.flatnonzero(pdp.delays <= third)[-1])
    assert pdp.powers_mw[index] == pytest.approx(1e-6 * g0 * g0, rel=1e-9)


def test_pointed_at_mpcs_gives_one_point_per_path(
    lobed_cir: OmniCIR, pencil: AntennaPattern
) -> None:
    """Tests the 'dir' series has one path loss per MPC."""
    pointed = pointed_at_mpcs(lobed_cir, pencil, pencil, 800.0)
    assert [p.mpc_index for p in pointed] == [0, 1, 2, 3]
    assert all(p.path_loss >= lobed_cir.omni_path_loss - 1e-9 for p in pointed)
    assert all(p.rms_delay_spread >= 0 for p in pointed)


def test_small_scale_first_element_matches_omni(lobed_cir: OmniCIR) -> None:
    """Tests that element 0 sees the omni PDP when paths occupy separate bins."""
    series = small_scale_pdps(lobed_cir, 3, 0.5, 800.0)
    assert [offset for offset, _ in series] == [0.0, 0.5, 1.0]
    omni = compute_pdp(lobed_cir, 800.0)
    first = series[0][1]
    assert first.delays.tolist() == omni.delays.tolist()
    assert first.powers_mw == pytest.approx(omni.powers_mw, rel=1e-12)


def test_small_scale_single_path_is_flat(
    make_mpc: Callable[..., MultipathComponent],
) -> None:
    """Tests that one path has the same power at every element."""
    cir = OmniCIR.from_mpcs([make_mpc(10.0, 2.0, aoa_az=30.0)])
    for _, pdp in small_scale_pdps(cir, 8, 0.5, 800.0):
        assert pdp.total_power_mw == pytest.approx(2.0)


def test_small_scale_two_paths_in_one_bin_fade(
    make_mpc: Callable[..., MultipathComponent],
) -> None:
    """Tests that paths sharing a bin interfere across elements."""
    cir = OmniCIR.from_mpcs(
        [make_mpc(10.0, 1.0, aoa_az=0.0), make_mpc(10.1, 1.0, aoa_az=90.0)]
    )
    powers = [pdp.total_power_mw for _, pdp in small_scale_pdps(cir, 2, 0.5, 800.0)]
    # half a wavelength flips the second path's phase
    assert powers == pytest.approx([4.0, 0.0], abs=1e-12)


@pytest.mark.parametrize("n, spacing", [(0, 0.5), (2, 0.0)])
def test_small_scale_argument_checks(
    lobed_cir: OmniCIR, n: int, spacing: float
) -> None:
    """Tests the element count and spacing checks."""
    with pytest.raises(ValueError):
        small_scale_pdps(lobed_cir, n, spacing, 800.0)


@pytest.mark.parametrize("environment", [Environment.LOS, Environment.NLOS])
def test_small_scale_first_element_matches_omni_on_generated_cirs(
    environment: Environment, rng: np.random.Generator
) -> None:
    """Tests element 0 reproduces the omni PDP bin for bin."""
    config = SimulationConfig(environment=environment)
    for _ in range(200):
        cir = generate_cir(config, float(rng.uniform(10.0, 200.0)), rng)
        omni = compute_pdp(cir, config.rf_bandwidth)
        first = small_scale_pdps(cir, 2, 0.5, config.rf_bandwidth)[0][1]
        np.testing.assert_array_equal(first.delays, omni.delays)
        np.testing.assert_allclose(first.powers_mw, omni.powers_mw, rtol=1e-9)


def test_small_scale_average_stays_near_omni(rng: np.random.Generator) -> None:
    """Tests the element-averaged power of generated CIRs within 3 dB of omni."""
    config = SimulationConfig(environment=Environment.NLOS)
    checked = 0
    while checked < 20:
        cir = generate_cir(config, 60.0, rng)
        if len(cir.mpcs) < 10:
            continue
        checked += 1
        series = small_scale_pdps(cir, 16, 0.5, config.rf_bandwidth)
        average = np.mean([pdp.total_power_mw for _, pdp in series])
        omni = compute_pdp(cir, config.rf_bandwidth).total_power_mw
        assert abs(10.0 * np.log10(average / omni)) <= 3.0


def test_small_scale_average_of_one_fading_bin_stays_near_omni(
    make_mpc: Callable[..., MultipathComponent],
) -> None:
    """Tests eleven co-binned paths from spread directions average out."""
    angles = -77.5 + 15.0 * np.arange(11)
    cir = OmniCIR.from_mpcs(
        [
            make_mpc(10.0, 1.0 + 0.1 * i, phase=0.3 * i, aoa_az=float(az % 360.0))
            for i, az in enumerate(angles)
        ]
    )
    series = small_scale_pdps(cir, 1024, 0.5, 0.0)
    assert all(pdp.delays.size == 1 for _, pdp in series)
    average = np.mean([pdp.total_power_mw for _, pdp in series])
    omni = compute_pdp(cir, 0.0).total_power_mw
    assert abs(10.0 * np.log10(average / omni)) <= 3.0


def test_best_direction_matches_an_exhaustive_search(
    rng: np.random.Generator,
) -> None:
    """Tests the vectorized search against looping every pointing pair."""
    tx = AntennaPattern(60.0, 45.0)
    rx = AntennaPattern(90.0, 60.0)
    tx_grid = list(zip(*tx.pointing_grid(), strict=True))
    rx_grid = list(zip(*rx.pointing_grid(), strict=True))
    for environment in (Environment.LOS, Environment.NLOS):
        config = SimulationConfig(environment=environment)
        for _ in range(3):
            cir = generate_cir(config, 50.0, rng)
            best_power = max(
                directional_pdp(
                    cir,
                    PointingAngle(float(t_az), float(t_el)),
                    PointingAngle(float(r_az), float(r_el)),
                    tx,
                    rx,
                    800.0,
                ).total_power_mw
                for t_az, t_el in tx_grid
                for r_az, r_el in rx_grid
            )
            best = best_direction_search(cir, tx, rx, 800.0)
            assert (best.tx_pointing.azimuth, best.tx_pointing.elevation) in tx_grid
            assert (best.rx_pointing.azimuth, best.rx_pointing.elevation) in rx_grid
            assert best.pdp.total_power_mw == pytest.approx(best_power, rel=1e-9)
