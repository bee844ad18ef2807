"""Exception types shared across the library."""

from __future__ import annotations


class RawIspError(ValueError):
    """Base class for all validation and processing errors."""


class ParseError(RawIspError):
    """Malformed file content; carries the byte offset where parsing failed."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DegenerateDataError(RawIspError):
    """Sample set carries no usable variation (e.g. zero variance)."""


class DivergenceError(RawIspError):
    """Optimization produced a non-finite quantity; carries the iteration."""

    def __init__(self, message: str, iteration: int | None = None):
        if iteration is not None:
            message = f"{message} (iteration {iteration})"
        super().__init__(message)
        self.iteration = iteration
