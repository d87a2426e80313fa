"""Text output files of a simulation.

Numbers are written in fixed notation with 6 significant digits, columns are
separated by tabs, lines end in '\\n' and every file starts with a single
'%' line naming its columns.
"""

from __future__ import annotations

import contextlib
import io
import zipfile
from typing import TYPE_CHECKING, Final

import numpy as np

from chansim.config import serialize_config
from chansim.exceptions import OutputWriteError
from chansim.sscm import LobeSide

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence
    from pathlib import Path

    from numpy.typing import ArrayLike

    from chansim.config import SimulationConfig
    from chansim.sscm import PowerDelayProfile

    from .runner import RunArtifacts, RunSummary

PDP_COLUMNS: Final = ("delay_ns", "power_dbm")
SMALL_SCALE_COLUMNS: Final = ("rx_element_offset_wl", "delay_ns", "power_dbm")
AOD_LOBE_COLUMNS: Final = (
    "delay_ns",
    "power_mw",
    "phase_rad",
    "aod_az_deg",
    "aod_el_deg",
)
AOA_LOBE_COLUMNS: Final = (
    "delay_ns",
    "power_mw",
    "phase_rad",
    "aoa_az_deg",
    "aoa_el_deg",
)
OMNI_INFO_COLUMNS: Final = (
    "distance_m",
    "received_power_dbm",
    "path_loss_db",
    "rms_delay_spread_ns",
)
DIR_INFO_COLUMNS: Final = (
    "run",
    "delay_ns",
    "power_dbm",
    "phase_rad",
    "aod_az_deg",
    "aod_el_deg",
    "aoa_az_deg",
    "aoa_el_deg",
    "dir_path_loss_db",
    "dir_rms_delay_spread_ns",
)

BASIC_PARAMETERS: Final[str] = "BasicParameters.txt"
OMNI_PDP_INFO: Final[str] = "OmniPDPInfo.txt"
DIR_PDP_INFO: Final[str] = "DirPDPInfo.txt"
_ZIP_EPOCH: Final = (1980, 1, 1, 0, 0, 0)


def format_number(value: float) -> str:
    """Fixed notation with 6 significant digits, trailing zeros trimmed."""
    return np.format_float_positional(
        value, precision=6, unique=False, fractional=False, trim="-"
    )


def format_table(columns: Sequence[str], rows: Iterable[Iterable[float]]) -> str:
    """A header line and one tab separated line per row."""
    lines = ["% " + "\t".join(columns)]
    lines.extend("\t".join(format_number(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def atomic_write_bytes(path: Path, data: bytes) -> Path:
    """Writes to a temporary sibling and renames it into place.

    Raises:
        OutputWriteError: If the file cannot be written.
    """
    tmp = path.with_name(f".{path.name}.tmp")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp.write_bytes(data)
        tmp.replace(path)
    except OSError as e:
        with contextlib.suppress(OSError):
            tmp.unlink(missing_ok=True)
        raise OutputWriteError(path, e.strerror or str(e)) from e
    return path


def atomic_write_text(path: Path, text: str) -> Path:
    """UTF-8 text through atomic_write_bytes."""
    return atomic_write_bytes(path, text.encode("utf-8"))


def pdp_rows(pdp: PowerDelayProfile) -> list[tuple[float, float]]:
    """(delay ns, power dBm) rows of a PDP."""
    return pdp.bins


def run_file_names(artifacts: RunArtifacts) -> list[str]:
    """Names of every per-run file of a run, in write order."""
    n = artifacts.run_index
    names = [f"OmniPDP{n}.txt", f"DirectionalPDP{n}.txt", f"SmallScalePDP{n}.txt"]
    names.extend(
        f"AODLobePowerSpectrum{n}_Lobe{lobe.lobe_id + 1}.txt"
        for lobe in artifacts.cir.aod_lobes
    )
    names.extend(
        f"AOALobePowerSpectrum{n}_Lobe{lobe.lobe_id + 1}.txt"
        for lobe in artifacts.cir.aoa_lobes
    )
    return names


def _lobe_rows(artifacts: RunArtifacts, side: LobeSide) -> list[list[list[float]]]:
    cir = artifacts.cir
    tables = []
    for lobe in cir.lobes(side):
        rows = []
        for i in lobe.members:
            m = cir.mpcs[i]
            az, el = (
                (m.aod_az, m.aod_el) if side == LobeSide.AOD else (m.aoa_az, m.aoa_el)
            )
            rows.append([m.delay, m.power, m.phase, az, el])
        tables.append(rows)
    return tables


def write_run_files(artifacts: RunArtifacts, out_dir: Path) -> list[Path]:
    """Writes the PDP and lobe spectrum files of one run.

    Lobe files are numbered from 1, one per spatial lobe on each side.
    """
    n = artifacts.run_index
    small_scale_rows = [
        (offset, delay, power)
        for offset, pdp in artifacts.small_scale
        for delay, power in pdp.bins
    ]
    contents = {
        f"OmniPDP{n}.txt": format_table(PDP_COLUMNS, pdp_rows(artifacts.omni_pdp)),
        f"DirectionalPDP{n}.txt": format_table(
            PDP_COLUMNS, pdp_rows(artifacts.best.pdp)
        ),
        f"SmallScalePDP{n}.txt": format_table(SMALL_SCALE_COLUMNS, small_scale_rows),
    }
    for lobe, rows in zip(
        artifacts.cir.aod_lobes, _lobe_rows(artifacts, LobeSide.AOD), strict=True
    ):
        name = f"AODLobePowerSpectrum{n}_Lobe{lobe.lobe_id + 1}.txt"
        contents[name] = format_table(AOD_LOBE_COLUMNS, rows)
    for lobe, rows in zip(
        artifacts.cir.aoa_lobes, _lobe_rows(artifacts, LobeSide.AOA), strict=True
    ):
        name = f"AOALobePowerSpectrum{n}_Lobe{lobe.lobe_id + 1}.txt"
        contents[name] = format_table(AOA_LOBE_COLUMNS, rows)
    return [atomic_write_text(out_dir / name, text) for name, text in contents.items()]


def write_summary_files(
    summary: RunSummary, config: SimulationConfig, out_dir: Path
) -> list[Path]:
    """Writes BasicParameters.txt, OmniPDPInfo.txt and DirPDPInfo.txt."""
    return [
        atomic_write_text(out_dir / BASIC_PARAMETERS, serialize_config(config)),
        atomic_write_text(
            out_dir / OMNI_PDP_INFO,
            format_table(OMNI_INFO_COLUMNS, summary.omni_info.tolist()),
        ),
        atomic_write_text(
            out_dir / DIR_PDP_INFO,
            format_table(DIR_INFO_COLUMNS, summary.dir_info.tolist()),
        ),
    ]


def npz_bytes(arrays: Mapping[str, ArrayLike]) -> bytes:
    """A numpy .npz archive with fixed member timestamps."""
    buffer = io.BytesIO()
    with zipfile.ZipFile(buffer, "w", zipfile.ZIP_STORED) as archive:
        for name, value in arrays.items():
            info = zipfile.ZipInfo(f"{name}.npy", date_time=_ZIP_EPOCH)
            with archive.open(info, "w", force_zip64=True) as member:
                np.lib.format.write_array(
                    member, np.asanyarray(value), allow_pickle=False
                )
    return buffer.getvalue()


def write_npz_sidecar(artifacts: RunArtifacts, out_dir: Path) -> Path:
    """Writes Run{n}.npz with the CIR, pointing result and channel matrices."""
    cir = artifacts.cir
    best = artifacts.best
    arrays: dict[str, ArrayLike] = {
        "delay_ns": cir.delays,
        "power_mw": cir.powers,
        "phase_rad": cir.phases,
        "aod_az_deg": cir.aod_az,
        "aod_el_deg": cir.aod_el,
        "aoa_az_deg": cir.aoa_az,
        "aoa_el_deg": cir.aoa_el,
        "cluster_id": [m.cluster_id for m in cir.mpcs],
        "lobe_id_tx": [m.lobe_id_tx for m in cir.mpcs],
        "lobe_id_rx": [m.lobe_id_rx for m in cir.mpcs],
        "tr_distance_m": cir.tr_distance,
        "omni_path_loss_db": cir.omni_path_loss,
        "tx_power_dbm": cir.tx_power,
        "best_tx_pointing_deg": [best.tx_pointing.azimuth, best.tx_pointing.elevation],
        "best_rx_pointing_deg": [best.rx_pointing.azimuth, best.rx_pointing.elevation],
        "dir_best_path_loss_db": artifacts.dir_best_path_loss,
    }
    if artifacts.channels is not None:
        arrays["subcarrier_offset_hz"] = artifacts.channels.frequencies
        arrays["channel_matrices"] = artifacts.channels.matrices
    path = out_dir / f"Run{artifacts.run_index}.npz"
    return atomic_write_bytes(path, npz_bytes(arrays))
