"""Exception types shared across the package.

The CLI maps each class to a distinct exit code, so raising the right type
matters more than the message text.
"""

from __future__ import annotations


class StagGridError(ValueError):
    """Base class for all staggrid-specific errors."""


class ParityError(StagGridError):
    """Requested operation is incompatible with the parity of the edge count
    (or with the staggering state of the field): e.g. asking for the unique
    solution on an even grid, or a completion strategy on an odd one."""


class InconsistentDataError(StagGridError):
    """Center data admits no edge solution: the alternating-sum consistency
    residual exceeds the tolerance on an even grid."""

    def __init__(self, message: str, residual: float | object = None,
                 line_coords: tuple[int, ...] | None = None) -> None:
        super().__init__(message)
        self.residual = residual
        self.line_coords = line_coords


class FieldFormatError(StagGridError):
    """Field file cannot be parsed or violates its own header."""
