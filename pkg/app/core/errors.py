"""
Exceptions raised by the V-order toolkit.

Every error derives from ValueError so callers that only guard against
invalid input keep working.
"""

from typing import Any


class VOrderError(ValueError):
    """Base class for all toolkit errors."""


class UnknownSymbol(VOrderError):
    """A raw symbol does not belong to the bound alphabet."""

    def __init__(self, position: int, symbol: Any):
        """Initialize the error.

        Args:
            position: 1-based position of the offending symbol
            symbol: The symbol that could not be ranked
        """
        self.position = position
        self.symbol = symbol
        super().__init__(f"Unknown symbol {symbol!r} at position {position}")


class EmptyString(VOrderError):
    """An operation that needs a maximal letter was given the empty string."""

    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"{operation} requires a nonempty string")


class InvalidAlphabet(VOrderError):
    """An alphabet specification is malformed."""


class SegmentMismatch(VOrderError):
    """Suffix arrays or strings that should line up do not."""


class IndexOutOfRange(VOrderError):
    """A factor index lies outside the factorization."""

    def __init__(self, index: int, bound: int):
        self.index = index
        self.bound = bound
        super().__init__(f"Index {index} out of range 1..{bound}")
