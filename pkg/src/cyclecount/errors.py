"""Exception types used across the package."""


class CycleCountError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(CycleCountError):
    """Raised when an input file or structure cannot be parsed."""


class ValidationError(CycleCountError):
    """Raised when a graph fails a structural invariant."""


class EngineError(CycleCountError):
    """Raised when the counting engine encounters an internal failure,
    for example when no balanced cycle separator can be found."""
