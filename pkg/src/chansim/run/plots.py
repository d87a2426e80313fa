"""Data behind the summary figures, with optional SVG renderings."""

from __future__ import annotations

import io
from typing import TYPE_CHECKING, Final

import numpy as np

from chansim.constants import PATH_LOSS_KINDS
from chansim.exceptions import MissingExtraError
from chansim.sscm import LobeSide

from .writers import atomic_write_bytes, atomic_write_text, format_number, format_table

if TYPE_CHECKING:
    from pathlib import Path

    from chansim.pathloss import PathLossFit

    from .runner import RunArtifacts, RunSummary

PLOTS_DIR: Final[str] = "plots"
SPECTRUM_COLUMNS: Final = ("lobe", "azimuth_deg", "elevation_deg", "power_dbm")
SCATTER_COLUMNS: Final = ("distance_m", "path_loss_db", "kind")


def fit_annotation(kind: str, fit: PathLossFit | None) -> str:
    """The legend text of one path loss series."""
    if fit is None:
        return f"% {kind}: fit undefined"
    return f"% {kind}: n={format_number(fit.ple)} sigma={format_number(fit.sigma)} dB"


def scatter_text(summary: RunSummary) -> str:
    """Path loss scatter of every series, readable by 'chansim fit'."""
    lines = ["% " + "\t".join(SCATTER_COLUMNS)]
    lines.extend(fit_annotation(kind, summary.fits[kind]) for kind in PATH_LOSS_KINDS)
    lines.extend(
        f"{format_number(s.distance_3d)}\t{format_number(s.path_loss)}\t{s.kind}"
        for s in summary.samples
    )
    return "\n".join(lines) + "\n"


def _spectrum_rows(artifacts: RunArtifacts, side: LobeSide) -> list[list[float]]:
    cir = artifacts.cir
    rows = []
    for lobe in cir.lobes(side):
        for i in lobe.members:
            m = cir.mpcs[i]
            az, el = (
                (m.aod_az, m.aod_el) if side == LobeSide.AOD else (m.aoa_az, m.aoa_el)
            )
            rows.append([lobe.lobe_id + 1, az, el, 10.0 * np.log10(m.power)])
    return rows


def plot_tables(summary: RunSummary, first: RunArtifacts) -> dict[str, str]:
    """File name to contents of every plot-data file."""
    small_scale = [
        (offset, delay, power)
        for offset, pdp in first.small_scale
        for delay, power in pdp.bins
    ]
    return {
        "AODSpectrum.txt": format_table(
            SPECTRUM_COLUMNS, _spectrum_rows(first, LobeSide.AOD)
        ),
        "AOASpectrum.txt": format_table(
            SPECTRUM_COLUMNS, _spectrum_rows(first, LobeSide.AOA)
        ),
        "OmniPDP.txt": format_table(("delay_ns", "power_dbm"), first.omni_pdp.bins),
        "DirectionalPDP.txt": format_table(
            ("delay_ns", "power_dbm"), first.best.pdp.bins
        ),
        "SmallScalePDP.txt": format_table(
            ("rx_element_offset_wl", "delay_ns", "power_dbm"), small_scale
        ),
        "PathLossScatter.txt": scatter_text(summary),
    }


def emit_plot_data(
    summary: RunSummary,
    artifacts: list[RunArtifacts],
    out_dir: Path,
    svg: bool = False,
) -> list[Path]:
    """Writes the plot-data files of the first run and the path loss scatter.

    Raises:
        MissingExtraError: If SVG output is requested without matplotlib.
        OutputWriteError: If a file cannot be written.
    """
    plots_dir = out_dir / PLOTS_DIR
    first = artifacts[0]
    written = [
        atomic_write_text(plots_dir / name, text)
        for name, text in plot_tables(summary, first).items()
    ]
    if svg:
        written.extend(render_svgs(summary, first, plots_dir))
    return written


def render_svgs(
    summary: RunSummary, first: RunArtifacts, plots_dir: Path
) -> list[Path]:
    """Renders each plot-data set with matplotlib."""
    try:
        from matplotlib.figure import Figure
    except ImportError as e:
        raise MissingExtraError("SVG output needs matplotlib", "svg") from e

    def save(name: str, figure: Figure) -> Path:
        buffer = io.BytesIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
        return atomic_write_bytes(plots_dir / name, buffer.getvalue())

    written = []
    for side in (LobeSide.AOD, LobeSide.AOA):
        figure = Figure()
        ax = figure.add_subplot(projection="polar")
        rows = np.array(_spectrum_rows(first, side)).reshape(-1, 4)
        ax.stem(np.deg2rad(rows[:, 1]), rows[:, 3] - rows[:, 3].min() + 1.0)
        ax.set_title(f"{side.value} power spectrum, run {first.run_index}")
        written.append(save(f"{side.value}Spectrum.svg", figure))

    for name, pdp, title in (
        ("OmniPDP.svg", first.omni_pdp, "Omnidirectional PDP"),
        ("DirectionalPDP.svg", first.best.pdp, "Strongest directional PDP"),
    ):
        figure = Figure()
        ax = figure.add_subplot()
        ax.stem(pdp.delays, pdp.powers_dbm, bottom=float(pdp.powers_dbm.min()) - 10)
        ax.set_xlabel("Delay (ns)")
        ax.set_ylabel("Received power (dBm)")
        ax.set_title(title)
        written.append(save(name, figure))

    figure = Figure()
    ax = figure.add_subplot(projection="3d")
    for offset, pdp in first.small_scale:
        ax.plot(pdp.delays, [offset] * pdp.delays.size, pdp.powers_dbm)
    ax.set_xlabel("Delay (ns)")
    ax.set_ylabel("RX element offset (wavelengths)")
    ax.set_zlabel("Received power (dBm)")
    written.append(save("SmallScalePDP.svg", figure))

    figure = Figure()
    ax = figure.add_subplot()
    for kind in PATH_LOSS_KINDS:
        points = [s for s in summary.samples if s.kind == kind]
        if not points:
            continue
        fit = summary.fits[kind]
        label = kind
        if fit is not None:
            label = f"{kind}: n={fit.ple:.2f}, σ={fit.sigma:.2f} dB"
        ax.scatter(
            [s.distance_3d for s in points],
            [s.path_loss for s in points],
            s=8,
            label=label,
        )
    ax.set_xscale("log")
    ax.set_xlabel("T-R separation (m)")
    ax.set_ylabel("Path loss (dB)")
    ax.legend()
    written.append(save("PathLossScatter.svg", figure))
    return written
