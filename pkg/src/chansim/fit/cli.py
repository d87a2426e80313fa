"""The 'fit' command."""

from pathlib import Path
from typing import Annotated, Final

import typer
from rich.console import Console
from rich.table import Table

from chansim.constants import PATH_LOSS_KINDS, PathLossKind
from chansim.pathloss import PathLossFit, fit_by_kind, fspl, load_path_loss_samples
from chansim.prints import error, info

EXIT_INVALID: Final[int] = 1
EXIT_IO: Final[int] = 2

fit_cmd = typer.Typer(
    help=(
        "Fit the close-in path loss model to a path loss scatter file.\n\n"
        "Rows are 'distance_m path_loss_db [kind]' with kind one of omni, dir "
        "or dir-best. Lines starting with '%' or '#' are ignored."
    ),
    add_completion=True,
)


def fit_table(
    fits: dict[PathLossKind, PathLossFit | None], console: Console | None = None
) -> None:
    """Prints the fitted exponent and shadow fading of each path loss kind."""
    console = console or Console()
    table = Table(
        title="Close-in path loss fit (1 m reference)",
        show_header=True,
        header_style="bold",
    )
    table.add_column("Kind", style="cyan", no_wrap=True)
    table.add_column("PLE n", justify="right")
    table.add_column("σ (dB)", justify="right")
    for kind in PATH_LOSS_KINDS:
        fit = fits.get(kind)
        if fit is None:
            table.add_row(kind, "[dim italic]undefined[/dim italic]", "")
        else:
            table.add_row(kind, f"{fit.ple:.3f}", f"{fit.sigma:.3f}")
    console.print(table)


@fit_cmd.callback(invoke_without_command=True)
def fit(
    ctx: typer.Context,
    input_path: Annotated[
        Path,
        typer.Option(..., "--input", "-i", help="Path loss scatter file."),
    ],
    frequency: Annotated[
        float,
        typer.Option(
            "--frequency-ghz",
            "-f",
            help="Carrier frequency anchoring the 1 m free space intercept.",
        ),
    ] = 28.0,
) -> None:
    """The main entry point for the fit command."""
    if ctx.invoked_subcommand is not None:  # pragma: no cover
        return

    try:
        samples = load_path_loss_samples(input_path)
    except OSError as e:
        error(f"Unable to read [bold]{input_path}[/bold]", reason=str(e))
        raise typer.Exit(code=EXIT_IO) from e
    except ValueError as e:
        error(
            f"Unable to parse [bold]{input_path}[/bold]",
            reason=str(e),
            suggestion="Each row needs a distance, a path loss and optionally a kind.",
        )
        raise typer.Exit(code=EXIT_INVALID) from e

    try:
        fspl(frequency)
        fits = fit_by_kind(samples, frequency)
    except ValueError as e:
        error("Unable to fit the path loss samples", reason=str(e))
        raise typer.Exit(code=EXIT_INVALID) from e

    if all(f is None for f in fits.values()):
        error(
            "No path loss kind has enough samples to fit",
            reason=f"{len(samples)} sample(s) read from {input_path}",
            suggestion="A fit needs at least 2 samples at different distances.",
        )
        raise typer.Exit(code=EXIT_INVALID)

    info(f"Read {len(samples)} path loss sample(s) at {frequency:g} GHz")
    fit_table(fits)
