"""Monte Carlo runs: one CIR per run and everything derived from it."""

from __future__ import annotations

import signal
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import TYPE_CHECKING, Self

import numpy as np

from chansim.config import ModelParameters, validate_config
from chansim.directional import (
    AntennaPattern,
    best_direction_path_loss,
    best_direction_search,
    pointed_at_mpcs,
    small_scale_pdps,
)
from chansim.mimo import ArrayGeometry, channel_matrices, subcarrier_grid
from chansim.pathloss import PathLossSample, fit_by_kind
from chansim.sscm import compute_pdp, generate_cir

from .writers import write_npz_sidecar, write_run_files

if TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path

    from numpy.typing import NDArray

    from chansim.config import SimulationConfig
    from chansim.constants import PathLossKind
    from chansim.directional import BestDirection, PointedMPC
    from chansim.mimo import ChannelMatrixSet
    from chansim.pathloss import PathLossFit
    from chansim.sscm import OmniCIR, PowerDelayProfile


def init_worker() -> None:  # pragma: no cover
    """Initializer to ignore signal interrupts on workers."""
    signal.signal(signal.SIGINT, signal.SIG_IGN)
    signal.signal(signal.SIGTERM, signal.SIG_IGN)


def run_rng(master_seed: int, run_index: int) -> np.random.Generator:
    """The random stream of one run, independent of every other run."""
    return np.random.default_rng(
        np.random.SeedSequence(master_seed, spawn_key=(run_index,))
    )


def sample_distance(config: SimulationConfig, rng: np.random.Generator) -> float:
    """T-R distance of a run, uniform between the configured bounds, m."""
    if config.tr_distance_min == config.tr_distance_max:
        return config.tr_distance_min
    return float(rng.uniform(config.tr_distance_min, config.tr_distance_max))


@dataclass(frozen=True)
class RunArtifacts:
    """Everything one simulation run produces."""

    run_index: int
    """1-based run number n used in file names."""

    cir: OmniCIR
    omni_pdp: PowerDelayProfile
    best: BestDirection
    dir_best_path_loss: float
    """Directional path loss of the strongest pointing, dB."""

    pointed: tuple[PointedMPC, ...]
    """Directional reception pointed along every MPC, in MPC order."""

    small_scale: tuple[tuple[float, PowerDelayProfile], ...]
    channels: ChannelMatrixSet | None = None

    @property
    def distance(self) -> float:
        """T-R separation, m."""
        return self.cir.tr_distance

    @property
    def omni_rms_delay_spread(self) -> float:
        """ns."""
        return self.omni_pdp.rms_delay_spread

    def path_loss_samples(self) -> list[PathLossSample]:
        """The omni, dir and dir-best path loss points of this run."""
        d = self.distance
        samples = [PathLossSample(d, self.cir.omni_path_loss, "omni")]
        samples.extend(PathLossSample(d, p.path_loss, "dir") for p in self.pointed)
        samples.append(PathLossSample(d, self.dir_best_path_loss, "dir-best"))
        return samples


def simulate_run(
    config: SimulationConfig,
    run_index: int,
    master_seed: int,
    params: ModelParameters | None = None,
    subcarrier_spacing: float | None = None,
) -> RunArtifacts:
    """Draws the CIR of one run and derives its PDPs, path losses and channels.

    Args:
        config: Validated simulation parameters.
        run_index: 1-based run number.
        master_seed: Seed shared by all runs of a simulation.
        params: Model constants. Defaults are used if not given.
        subcarrier_spacing: MHz. If given, channel matrices are computed on
            the subcarrier grid spanning the RF bandwidth.
    """
    params = params or ModelParameters()
    rng = run_rng(master_seed, run_index)
    cir = generate_cir(config, sample_distance(config, rng), rng, params)
    bandwidth = config.rf_bandwidth

    tx_pattern = AntennaPattern.from_config(config, "tx", params)
    rx_pattern = AntennaPattern.from_config(config, "rx", params)
    best = best_direction_search(cir, tx_pattern, rx_pattern, bandwidth)
    n_elements = params.small_scale_elements or config.num_rx_elements

    channels = None
    if subcarrier_spacing is not None:
        channels = channel_matrices(
            cir,
            subcarrier_grid(bandwidth, subcarrier_spacing),
            ArrayGeometry.from_config(config, "tx"),
            ArrayGeometry.from_config(config, "rx"),
        )
    return RunArtifacts(
        run_index=run_index,
        cir=cir,
        omni_pdp=compute_pdp(cir, bandwidth),
        best=best,
        dir_best_path_loss=best_direction_path_loss(cir, best, tx_pattern, rx_pattern),
        pointed=tuple(pointed_at_mpcs(cir, tx_pattern, rx_pattern, bandwidth)),
        small_scale=tuple(
            small_scale_pdps(cir, n_elements, config.rx_spacing, bandwidth)
        ),
        channels=channels,
    )


@dataclass(frozen=True)
class RunJob:
    """Arguments of one run handed to a worker."""

    config: SimulationConfig
    run_index: int
    master_seed: int
    params: ModelParameters
    subcarrier_spacing: float | None = None
    out_dir: Path | None = None
    npz: bool = False


def execute_job(job: RunJob) -> RunArtifacts:
    """Simulates a run and writes its files, if an output directory is set."""
    artifacts = simulate_run(
        job.config,
        job.run_index,
        job.master_seed,
        job.params,
        job.subcarrier_spacing,
    )
    if job.out_dir is not None:
        write_run_files(artifacts, job.out_dir)
        if job.npz:
            write_npz_sidecar(artifacts, job.out_dir)
    return artifacts


@dataclass(frozen=True)
class RunSummary:
    """Aggregates over all runs, in run order."""

    config: SimulationConfig
    master_seed: int
    omni_info: NDArray[np.float64]
    """One row per run: distance m, received power dBm, path loss dB, RMS
    delay spread ns."""

    dir_info: NDArray[np.float64]
    """One row per MPC of every run: run index, delay ns, power dBm, phase rad,
    AOD az/el, AOA az/el deg, directional path loss dB, directional RMS delay
    spread ns."""

    samples: tuple[PathLossSample, ...]
    fits: dict[PathLossKind, PathLossFit | None]

    @property
    def n_runs(self) -> int:
        """Number of runs summarized."""
        return int(self.omni_info.shape[0])

    @classmethod
    def from_artifacts(
        cls,
        config: SimulationConfig,
        master_seed: int,
        artifacts: list[RunArtifacts],
    ) -> Self:
        """Builds the summary tables and path loss fits."""
        omni_rows = []
        dir_rows = []
        samples: list[PathLossSample] = []
        for run in artifacts:
            cir = run.cir
            received = cir.received_power
            omni_rows.append(
                [
                    run.distance,
                    received,
                    cir.tx_power - received,
                    run.omni_rms_delay_spread,
                ]
            )
            for mpc, pointed in zip(cir.mpcs, run.pointed, strict=True):
                dir_rows.append(
                    [
                        run.run_index,
                        mpc.delay,
                        10.0 * np.log10(mpc.power),
                        mpc.phase,
                        mpc.aod_az,
                        mpc.aod_el,
                        mpc.aoa_az,
                        mpc.aoa_el,
                        pointed.path_loss,
                        pointed.rms_delay_spread,
                    ]
                )
            samples.extend(run.path_loss_samples())
        return cls(
            config=config,
            master_seed=master_seed,
            omni_info=np.array(omni_rows, dtype=np.float64).reshape(-1, 4),
            dir_info=np.array(dir_rows, dtype=np.float64).reshape(-1, 10),
            samples=tuple(samples),
            fits=fit_by_kind(samples, config.frequency),
        )


def run_monte_carlo(
    config: SimulationConfig,
    n_runs: int,
    master_seed: int,
    params: ModelParameters | None = None,
    workers: int = 1,
    subcarrier_spacing: float | None = None,
    out_dir: Path | None = None,
    npz: bool = False,
    on_progress: Callable[[int], None] | None = None,
) -> tuple[RunSummary, list[RunArtifacts]]:
    """Runs n_runs independent simulations.

    Run i draws from the stream (master_seed, i), so results do not depend on
    the number of workers or the order runs finish in. With an output
    directory each run writes its own files as soon as it is done.

    Args:
        config: Simulation parameters, revalidated here.
        n_runs: Number of runs, at least 1.
        master_seed: Seed of the whole simulation.
        params: Model constants.
        workers: Number of worker processes. 1 runs in this process.
        subcarrier_spacing: MHz. Computes channel matrices when set.
        out_dir: Directory the per-run files are written to.
        npz: Also write a Run{n}.npz sidecar per run.
        on_progress: Called with the number of finished runs.

    Raises:
        ValueError: If n_runs or workers is below 1, or the seed is negative.
        pydantic.ValidationError: If the config is invalid.
    """
    if n_runs < 1:
        raise ValueError(f"number of runs must be >= 1, got {n_runs}")
    if workers < 1:
        raise ValueError(f"number of workers must be >= 1, got {workers}")
    if master_seed < 0:
        raise ValueError(f"seed must be >= 0, got {master_seed}")
    config = validate_config(config)
    params = params or ModelParameters()
    jobs = [
        RunJob(config, i, master_seed, params, subcarrier_spacing, out_dir, npz)
        for i in range(1, n_runs + 1)
    ]

    results: dict[int, RunArtifacts] = {}
    if workers == 1:
        for job in jobs:
            results[job.run_index] = execute_job(job)
            if on_progress:
                on_progress(len(results))
    else:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=init_worker
        ) as executor:
            futures = [executor.submit(execute_job, job) for job in jobs]
            for future in as_completed(futures):
                artifacts = future.result()
                results[artifacts.run_index] = artifacts
                if on_progress:
                    on_progress(len(results))

    ordered = [results[i] for i in sorted(results)]
    return RunSummary.from_artifacts(config, master_seed, ordered), ordered
