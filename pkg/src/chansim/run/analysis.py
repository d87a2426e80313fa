"""MIMO analyses over the channel matrices of all runs."""

from __future__ import annotations

from enum import StrEnum
from typing import TYPE_CHECKING, Final, NamedTuple

import numpy as np

from chansim.mimo import (
    average_spectral_efficiency,
    condition_numbers,
    db_to_linear,
    empirical_cdf,
    normalize_channel_set,
)

from .writers import atomic_write_text, format_number, format_table

if TYPE_CHECKING:
    from collections.abc import Sequence
    from pathlib import Path

    from chansim.mimo import ChannelMatrixSet, ConditionNumberCDF

    from .runner import RunArtifacts

ANALYSIS_DIR: Final[str] = "analysis"
DEFAULT_SUBCARRIER_SPACING_MHZ: Final[float] = 10.0
DEFAULT_SNR_DB: Final[tuple[float, ...]] = (-20.0, -10.0, 0.0, 10.0, 20.0, 30.0)


class Analysis(StrEnum):
    """Optional analyses of a simulation."""

    mimo = "mimo"
    se = "se"


class SpectralEfficiencyRow(NamedTuple):
    """Average spectral efficiency at one SNR and stream count, bits/s/Hz."""

    snr_db: float
    streams: int
    equal: float
    waterfilling: float


def collect_channels(artifacts: Sequence[RunArtifacts]) -> list[ChannelMatrixSet]:
    """The channel matrix sets of all runs, in run order.

    Raises:
        ValueError: If a run was simulated without channel matrices.
    """
    channels = [run.channels for run in artifacts]
    if any(c is None for c in channels):
        raise ValueError("Runs were simulated without a subcarrier grid")
    return [c for c in channels if c is not None]


def pooled_condition_cdf(channels: Sequence[ChannelMatrixSet]) -> ConditionNumberCDF:
    """CDF of the condition numbers of every subcarrier of every run."""
    return empirical_cdf(np.concatenate([condition_numbers(c) for c in channels]))


def spectral_efficiency_table(
    channels: Sequence[ChannelMatrixSet],
    snr_db: Sequence[float],
    streams: Sequence[int],
) -> list[SpectralEfficiencyRow]:
    """Average SE of normalized channels for each SNR and stream count.

    Channels are scaled to unit average per-entry gain first, so the SNR is the
    per receive antenna SNR.
    """
    normalized = [normalize_channel_set(c) for c in channels]
    rows = []
    for snr in snr_db:
        for n in streams:
            args = (normalized, db_to_linear(snr), n)
            rows.append(
                SpectralEfficiencyRow(
                    snr,
                    n,
                    average_spectral_efficiency(*args, allocation="equal"),
                    average_spectral_efficiency(*args, allocation="waterfilling"),
                )
            )
    return rows


def coefficient_table(channels: ChannelMatrixSet) -> str:
    """|h_{k,m}| in dB of every matrix entry across the subcarriers."""
    n_rx, n_tx = channels.shape
    columns = ["subcarrier_offset_mhz"] + [
        f"h_{k}_{m}_db" for k in range(n_rx) for m in range(n_tx)
    ]
    with np.errstate(divide="ignore"):
        magnitudes = 20.0 * np.log10(np.abs(channels.matrices)).reshape(
            len(channels), -1
        )
    rows = np.column_stack((channels.frequencies / 1e6, magnitudes))
    return format_table(columns, rows.tolist())


def write_mimo_analysis(
    artifacts: Sequence[RunArtifacts], out_dir: Path
) -> tuple[list[Path], ConditionNumberCDF]:
    """Writes per-run coefficient tables and the pooled condition number CDF."""
    analysis_dir = out_dir / ANALYSIS_DIR
    channels = collect_channels(artifacts)
    written = [
        atomic_write_text(
            analysis_dir / f"ChannelCoefficients{run.run_index}.txt",
            coefficient_table(c),
        )
        for run, c in zip(artifacts, channels, strict=True)
    ]
    cdf = pooled_condition_cdf(channels)
    text = format_table(
        ("condition_number_db", "cumulative_probability"), cdf.points
    ) + (f"% rank deficient: {cdf.n_infinite} of {cdf.n_total}\n")
    written.append(atomic_write_text(analysis_dir / "ConditionNumberCDF.txt", text))
    return written, cdf


def write_se_analysis(
    artifacts: Sequence[RunArtifacts],
    out_dir: Path,
    snr_db: Sequence[float],
    streams: Sequence[int],
) -> tuple[Path, list[SpectralEfficiencyRow]]:
    """Writes the average spectral efficiency table."""
    rows = spectral_efficiency_table(collect_channels(artifacts), snr_db, streams)
    text = format_table(
        ("snr_db", "streams", "equal_bps_hz", "waterfilling_bps_hz"),
        [list(row) for row in rows],
    )
    path = atomic_write_text(out_dir / ANALYSIS_DIR / "SpectralEfficiency.txt", text)
    return path, rows


def median_condition_db(cdf: ConditionNumberCDF) -> str:
    """Median condition number for display."""
    return format_number(cdf.median)
