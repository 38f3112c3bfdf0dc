"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class MctError(Exception):
    """Base class for all errors raised by :mod:`mct`."""


class ParseError(MctError, ValueError):
    """Malformed ideal text. ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariableError(MctError, ValueError):
    pass


class AmbientMismatchError(MctError, ValueError):
    pass


class NotSquareFreeError(MctError, ValueError):
    pass


class DegenerateIdealError(MctError, ValueError):
    """Zero or unit ideal handed to an operation that needs a proper nonzero one."""


class SizeLimitError(MctError, RuntimeError):
    """A configured enumeration or evaluation cap would be exceeded."""


class NotPrimeError(MctError, ValueError):
    pass


class InvalidRootingMapError(MctError, ValueError):
    pass


class LatticeConsistencyError(MctError, RuntimeError):
    """An internal structural check failed; indicates a bug, not bad input."""
