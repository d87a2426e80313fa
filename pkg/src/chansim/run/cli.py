"""The 'run' command."""

from collections.abc import Callable
from pathlib import Path
from typing import Annotated, Final, TypeVar

import typer
from pydantic import ValidationError
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from chansim.config import ModelParameters, load_config, load_model_parameters
from chansim.exceptions import ChansimError, ConfigParseError, MissingExtraError
from chansim.fit import fit_table
from chansim.mimo import POWER_ALLOCATIONS
from chansim.prints import (
    config_error,
    error,
    info,
    is_quiet,
    set_quiet,
    success,
    validation_error,
)

from .analysis import (
    DEFAULT_SNR_DB,
    DEFAULT_SUBCARRIER_SPACING_MHZ,
    Analysis,
    median_condition_db,
    write_mimo_analysis,
    write_se_analysis,
)
from .plots import emit_plot_data
from .runner import run_monte_carlo
from .writers import write_summary_files

EXIT_INVALID: Final[int] = 1
EXIT_IO: Final[int] = 2

T = TypeVar("T")

run_cmd = typer.Typer(
    help=(
        "Simulate independent channel realizations and write their PDPs, lobe "
        "spectra and path loss summaries."
    ),
    add_completion=True,
)


def _read_parameter_file(loader: Callable[[Path], T], path: Path) -> T:
    """Loads a key=value file, printing the problem and exiting on failure."""
    try:
        return loader(path)
    except ConfigParseError as e:
        config_error(e, str(path), suggestion="Run 'chansim defaults' for a template.")
        raise typer.Exit(code=EXIT_INVALID) from e
    except ValidationError as e:
        validation_error(e, f"Invalid parameters in [bold]{path}[/bold]")
        raise typer.Exit(code=EXIT_INVALID) from e
    except OSError as e:
        error(f"Unable to read [bold]{path}[/bold]", reason=str(e))
        raise typer.Exit(code=EXIT_IO) from e


@run_cmd.callback(invoke_without_command=True)
def run(  # noqa: PLR0912, PLR0913, PLR0915
    ctx: typer.Context,
    config_path: Annotated[
        Path,
        typer.Option(
            ...,
            "--config",
            "-c",
            help="Simulation parameter file of key = value lines.",
        ),
    ],
    runs: Annotated[
        int,
        typer.Option(..., "--runs", "-n", help="Number of runs, at least 1."),
    ],
    seed: Annotated[
        int,
        typer.Option(..., "--seed", "-s", help="Master random seed, >= 0."),
    ],
    out_dir: Annotated[
        Path,
        typer.Option(..., "--out", "-o", help="Directory output files go to."),
    ],
    params_path: Annotated[
        Path | None,
        typer.Option(
            "--params",
            help="Model parameter file overriding the calibration constants.",
        ),
    ] = None,
    svg: Annotated[
        bool,
        typer.Option("--svg", help="Also render plot data as SVG (matplotlib)."),
    ] = False,
    npz: Annotated[
        bool,
        typer.Option("--npz", help="Also write a Run{n}.npz sidecar per run."),
    ] = False,
    workers: Annotated[
        int,
        typer.Option(
            "--workers",
            envvar="CHANSIM_WORKERS",
            help="Number of worker processes.",
        ),
    ] = 1,
    quiet: Annotated[
        bool,
        typer.Option("--quiet", "-q", help="Only print warnings and errors."),
    ] = False,
    subcarrier_spacing: Annotated[
        float | None,
        typer.Option(
            "--subcarrier-spacing-mhz",
            help=(
                "Compute channel matrices on subcarriers this far apart. "
                f"Defaults to {DEFAULT_SUBCARRIER_SPACING_MHZ:g} MHz when an "
                "analysis is requested."
            ),
        ),
    ] = None,
    analyses: Annotated[
        list[Analysis] | None,
        typer.Option("--analyze", help="MIMO analysis to run. Repeatable."),
    ] = None,
    snr_db: Annotated[
        list[float] | None,
        typer.Option(
            "--snr-db",
            help="SNR of the spectral efficiency analysis, dB. Repeatable.",
            show_default=", ".join(f"{v:g}" for v in DEFAULT_SNR_DB),
        ),
    ] = None,
    streams: Annotated[
        list[int] | None,
        typer.Option(
            "--streams",
            help="Number of data streams. Repeatable.",
            show_default="1 up to the smaller array size",
        ),
    ] = None,
    power_allocation: Annotated[
        str,
        typer.Option(
            "--power-allocation",
            help=(
                "Allocation shown in the spectral efficiency summary. Both are "
                "written to the output file."
            ),
        ),
    ] = "equal",
) -> None:
    """The main entry point for the run command."""
    if ctx.invoked_subcommand is not None:  # pragma: no cover
        return

    set_quiet(quiet)
    if power_allocation not in POWER_ALLOCATIONS:
        error(
            f"Unknown power allocation [bold]{power_allocation}[/bold]",
            suggestion=f"Use one of: {', '.join(POWER_ALLOCATIONS)}.",
        )
        raise typer.Exit(code=EXIT_INVALID)

    config = _read_parameter_file(load_config, config_path)
    params = (
        _read_parameter_file(load_model_parameters, params_path)
        if params_path is not None
        else ModelParameters()
    )

    requested = list(dict.fromkeys(analyses or []))
    if requested and subcarrier_spacing is None:
        subcarrier_spacing = DEFAULT_SUBCARRIER_SPACING_MHZ
    max_streams = min(config.num_tx_elements, config.num_rx_elements)
    stream_counts = streams or list(range(1, max_streams + 1))
    snrs = snr_db or list(DEFAULT_SNR_DB)

    info(
        f"Simulating {runs} run(s) of {config.scenario} {config.environment} at "
        f"{config.frequency:g} GHz with seed {seed}",
    )
    try:
        with Progress(
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            disable=is_quiet(),
            transient=True,
        ) as progress:
            task = progress.add_task("Running", total=runs)
            summary, artifacts = run_monte_carlo(
                config,
                runs,
                seed,
                params=params,
                workers=workers,
                subcarrier_spacing=subcarrier_spacing,
                out_dir=out_dir,
                npz=npz,
                on_progress=lambda done: progress.update(task, completed=done),
            )
        write_summary_files(summary, config, out_dir)
        emit_plot_data(summary, artifacts, out_dir, svg=svg)

        if Analysis.mimo in requested:
            _, cdf = write_mimo_analysis(artifacts, out_dir)
            info(
                f"Median condition number {median_condition_db(cdf)} dB, "
                f"{cdf.n_infinite} of {cdf.n_total} subcarriers rank deficient",
            )
        if Analysis.se in requested:
            _, rows = write_se_analysis(artifacts, out_dir, snrs, stream_counts)
            for row in rows:
                value = getattr(row, power_allocation)
                info(
                    f"SNR {row.snr_db:g} dB, {row.streams} stream(s): "
                    f"{value:.3f} bits/s/Hz ({power_allocation})"
                )
    except ValidationError as e:
        validation_error(e, "Invalid simulation parameters")
        raise typer.Exit(code=EXIT_INVALID) from e
    except OSError as e:
        error("Unable to write the simulation output", reason=str(e))
        raise typer.Exit(code=EXIT_IO) from e
    except MissingExtraError as e:
        error(
            "Unable to render the SVG plots",
            reason=str(e),
            suggestion=(
                f"Install the {e.extra} extra: pip install 'chansim\\[{e.extra}]'"
            ),
        )
        raise typer.Exit(code=EXIT_INVALID) from e
    except (ValueError, ChansimError) as e:
        error(
            "Unable to complete the simulation",
            reason=str(e),
            suggestion=(
                "Check the subcarrier spacing divides the RF bandwidth and the "
                "stream counts do not exceed the array sizes."
            ),
        )
        raise typer.Exit(code=EXIT_INVALID) from e

    if not is_quiet():
        fit_table(summary.fits)
    success(f"Wrote {summary.n_runs} run(s) to [bold]{out_dir}[/bold]")
