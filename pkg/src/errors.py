"""Exception hierarchy for QubitKit."""

from typing import Optional


class QubitKitError(Exception):
    """Base class for all errors raised by QubitKit."""

    pass


class ValidationError(QubitKitError, ValueError):
    """Input violates a documented precondition (range, shape, unitarity, ...)."""

    pass


class DimensionError(ValidationError):
    """Dimension is not a power of two, or exceeds a dense-size guard."""

    pass


class PromiseViolationError(QubitKitError):
    """Oracle table is neither constant nor balanced."""

    pass


class MethodFailureError(QubitKitError):
    """Period finding produced no usable even period."""

    def __init__(self, message: str, period: Optional[int] = None):
        super().__init__(message)
        self.period = period


class UsageError(QubitKitError):
    """Command-line flags are missing or inconsistent."""

    pass


class CircuitParseError(QubitKitError):
    """Text input could not be parsed.

    Attributes:
        kind: Stable diagnostic identifier (e.g. "unknown-mnemonic").
        line: 1-based line number.
        column: 1-based column number.
    """

    def __init__(self, kind: str, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {kind}: {message}")
        self.kind = kind
        self.message = message
        self.line = line
        self.column = column
