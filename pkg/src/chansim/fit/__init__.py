"""The standalone 'fit' command."""

from .cli import fit_cmd, fit_table

__all__ = ["fit_cmd", "fit_table"]
