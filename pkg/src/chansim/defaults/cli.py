"""The 'defaults' command."""

from typing import Annotated

import typer
from rich.console import Console
from rich.table import Table

from chansim.config import (
    SCENARIO_DEFAULTS,
    ModelParameters,
    SimulationConfig,
    serialize_config,
    serialize_model_parameters,
)

defaults_cmd = typer.Typer(
    help=(
        "Print the scenario path loss defaults and a default parameter file.\n\n"
        "Redirect the output to a file to start a new configuration."
    ),
    add_completion=True,
)


def scenario_table() -> Table:
    """The path loss exponent and shadow fading of every scenario."""
    table = Table(
        title="Scenario defaults",
        show_header=True,
        header_style="bold",
    )
    table.add_column("Scenario", style="cyan", no_wrap=True)
    table.add_column("Environment", style="cyan", no_wrap=True)
    table.add_column("PLE n", justify="right")
    table.add_column("σ (dB)", justify="right")
    for (scenario, environment), values in SCENARIO_DEFAULTS.items():
        table.add_row(
            scenario.value,
            environment.value,
            f"{values.ple:g}",
            f"{values.shadow_sigma:g}",
        )
    return table


@defaults_cmd.callback(invoke_without_command=True)
def defaults(
    ctx: typer.Context,
    params: Annotated[
        bool,
        typer.Option(
            "--params",
            help="Print the default model parameter file instead.",
        ),
    ] = False,
    config_only: Annotated[
        bool,
        typer.Option(
            "--config-only",
            help="Print only the parameter file text, without the scenario table.",
        ),
    ] = False,
) -> None:
    """The main entry point for the defaults command."""
    if ctx.invoked_subcommand is not None:  # pragma: no cover
        return

    text = (
        serialize_model_parameters(ModelParameters())
        if params
        else serialize_config(SimulationConfig())
    )
    if not config_only:
        console = Console()
        console.print(scenario_table())
        console.print()
    typer.echo(text, nl=False)
