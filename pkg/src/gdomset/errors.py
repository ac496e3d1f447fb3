"""Exception types shared across the package."""


class GdomsetError(Exception):
    """Base class for all package errors."""


class GraphBuildError(GdomsetError, ValueError):
    """Raised for malformed graph construction input (self-loop, bad endpoint)."""


class DisconnectedError(GdomsetError, ValueError):
    """Raised when an operation requires G and its complement to be connected."""


class InfeasibleSetError(GdomsetError, ValueError):
    """Raised when a vertex set fails a required feasibility precondition."""


class ParseError(GdomsetError, ValueError):
    """Raised for malformed instance files; carries a line position when known."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class GenerationError(GdomsetError, RuntimeError):
    """Raised when a random generator exhausts its retry budget."""


class InvariantError(GdomsetError, AssertionError):
    """Raised when an internal invariant (e.g. the A/B/C/D partition) breaks."""
