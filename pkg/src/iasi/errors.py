"""Exception types shared across the package.

Everything user-facing derives from IasiError so the CLI can map library
failures to exit codes without catching bare Exception.
"""


class IasiError(Exception):
    """Base class for all errors raised by this package."""


class EmptySetError(IasiError):
    """An operation received an empty integer set; labels must be non-empty."""


class BoundExceededError(IasiError):
    """A set element or sum would exceed the configured universe bound."""


class ParseError(IasiError):
    """A text document failed to parse. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CoverageError(IasiError):
    """A labeling does not cover exactly the vertex set it is used with."""


class GraphError(IasiError):
    """A graph operation was asked for something the graph cannot supply."""


class InvalidSpecError(IasiError):
    """A search specification violates its own invariants."""
