"""Exceptions raised by chansim."""

from pathlib import Path


class ChansimError(Exception):
    """Base class for all chansim specific errors."""


class ConfigParseError(ChansimError, ValueError):
    """A key=value parameter file could not be parsed.

    Attributes:
        line: 1-based line number the problem was found on.
        key: The offending key, if one could be identified.
    """

    def __init__(self, message: str, line: int, key: str | None = None) -> None:
        """Initialize the error with its line context."""
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.key = key


class OutputWriteError(ChansimError, OSError):
    """Writing an output file failed."""

    def __init__(self, path: Path, reason: str) -> None:
        """Initialize the error with the path that could not be written."""
        super().__init__(f"Could not write {path}: {reason}")
        self.path = path
        self.reason = reason

    def __reduce__(self) -> tuple[type["OutputWriteError"], tuple[Path, str]]:
        """Rebuilds the error when it crosses a process boundary."""
        return type(self), (self.path, self.reason)


class MissingExtraError(ChansimError):
    """An optional dependency group is not installed.

    Attributes:
        extra: Name of the package extra that provides it.
    """

    def __init__(self, message: str, extra: str) -> None:
        """Initialize the error with the extra to install."""
        super().__init__(message)
        self.extra = extra
