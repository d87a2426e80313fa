"""Byte-exact comparison of per-run output files against checked-in copies."""

from pathlib import Path

import pytest

from chansim.directional import (
    AntennaPattern,
    best_direction_path_loss,
    best_direction_search,
    pointed_at_mpcs,
    small_scale_pdps,
)
from chansim.run import RunArtifacts, write_run_files
from chansim.sscm import MultipathComponent, OmniCIR, compute_pdp

GOLDEN_DIR = Path(__file__).parent / "golden"
BANDWIDTH = 800.0


@pytest.fixture
def golden_run() -> RunArtifacts:
    """Two paths in separate bins and lobes, received with isotropic antennas."""
    cir = OmniCIR.from_mpcs(
        [
            MultipathComponent(
                delay=100.0,
                power=1e-6,
                phase=0.5,
                aod_az=0.0,
                aod_el=0.0,
                aoa_az=180.0,
                aoa_el=0.0,
            ),
            MultipathComponent(
                delay=150.0,
                power=1e-7,
                phase=1.25,
                aod_az=90.0,
                aod_el=10.0,
                aoa_az=270.0,
                aoa_el=-5.0,
                cluster_id=1,
                lobe_id_tx=1,
                lobe_id_rx=1,
            ),
        ],
        tr_distance=30.0,
        tx_power=30.0,
    )
    omni = AntennaPattern.isotropic()
    best = best_direction_search(cir, omni, omni, BANDWIDTH)
    return RunArtifacts(
        run_index=1,
        cir=cir,
        omni_pdp=compute_pdp(cir, BANDWIDTH),
        best=best,
        dir_best_path_loss=best_direction_path_loss(cir, best, omni, omni),
        pointed=tuple(pointed_at_mpcs(cir, omni, omni, BANDWIDTH)),
        small_scale=tuple(small_scale_pdps(cir, 2, 0.5, BANDWIDTH)),
    )


def test_run_files_match_golden_copies(
    golden_run: RunArtifacts, tmp_path: Path
) -> None:
    """Tests every per-run file byte for byte."""
    written = write_run_files(golden_run, tmp_path)

    assert sorted(p.name for p in written) == sorted(
        p.name for p in GOLDEN_DIR.iterdir()
    )
    for path in written:
        assert path.read_bytes() == (GOLDEN_DIR / path.name).read_bytes(), path.name
