"""The main entry point for chansim."""

import typer

from .defaults import defaults_cmd
from .fit import fit_cmd
from .run import run_cmd

app = typer.Typer(
    name="chansim",
    help="chansim - statistical mmWave channel simulator",
    add_completion=True,
    no_args_is_help=True,
)

app.add_typer(run_cmd, name="run")
app.add_typer(fit_cmd, name="fit")
app.add_typer(defaults_cmd, name="defaults")


def main() -> None:
    """The main entry point."""
    app()


if __name__ == "__main__":  # pragma: no cover
    main()
