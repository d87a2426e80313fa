"""The 'defaults' command."""

from .cli import defaults_cmd, scenario_table

__all__ = ["defaults_cmd", "scenario_table"]
