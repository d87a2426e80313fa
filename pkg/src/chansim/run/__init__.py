"""Monte Carlo runner, output files and the 'run' command."""

from .analysis import (
    Analysis,
    SpectralEfficiencyRow,
    spectral_efficiency_table,
    write_mimo_analysis,
    write_se_analysis,
)
from .cli import run_cmd
from .plots import emit_plot_data, plot_tables
from .runner import (
    RunArtifacts,
    RunSummary,
    run_monte_carlo,
    run_rng,
    simulate_run,
)
from .writers import (
    format_number,
    format_table,
    npz_bytes,
    run_file_names,
    write_npz_sidecar,
    write_run_files,
    write_summary_files,
)

__all__ = [
    "Analysis",
    "RunArtifacts",
    "RunSummary",
    "SpectralEfficiencyRow",
    "emit_plot_data",
    "format_number",
    "format_table",
    "npz_bytes",
    "plot_tables",
    "run_cmd",
    "run_file_names",
    "run_monte_carlo",
    "run_rng",
    "simulate_run",
    "spectral_efficiency_table",
    "write_mimo_analysis",
    "write_npz_sidecar",
    "write_run_files",
    "write_summary_files",
]
