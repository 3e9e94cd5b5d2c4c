"""Domain error types.

Argument validation raises plain ``ValueError``; the classes below mark
numerical failure modes that the CLI maps to exit code 1.
"""


class NumericsError(RuntimeError):
    """Base class for numerical failures of the pipeline."""


class DegenerateDrivingError(NumericsError):
    """Driving envelope is identically zero where a finite one is required."""


class SeriesCancellationError(NumericsError):
    """Alternating-series bracket lost all significant digits.

    Raised when the series evaluation of the shaping bracket produces a
    non-positive value at some sample; the caller should switch the
    shaper to quadrature mode.
    """


class DegenerateResponseError(NumericsError):
    """Spin-wave response has (near-)zero norm and cannot be normalized."""
