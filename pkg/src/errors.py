"""Typed errors raised by the algebra, polar and reliability packages.

All domain errors derive from PolarityError (a ValueError), so callers that
only care about "bad input" can keep catching ValueError. The CLI maps
PolarityError to exit code 1.
"""


class PolarityError(ValueError):
    """Base class for domain errors."""


class ImproperIdealError(PolarityError):
    """Raised when an analysis operation receives the zero or unit ideal."""


class CapExceededError(PolarityError):
    """Raised when an exponent exceeds the polarization cap of its variable."""

    def __init__(self, variable: int, exponent: int, cap: int):
        self.variable = variable
        self.exponent = exponent
        self.cap = cap
        super().__init__(
            f"cap exceeded: variable {variable} has exponent {exponent} > cap {cap}"
        )


class GeneratorLimitError(PolarityError):
    """Raised when an exact computation would exceed the generator limit."""


class InvalidPartitionError(PolarityError):
    """Raised when a path partition does not fit the support poset."""

    def __init__(self, message: str, block: tuple[int, ...] | None = None):
        self.block = block
        super().__init__(message)


class SearchLimitError(PolarityError):
    """Raised when a bijection search is inconclusive within its node budget."""


class EnumerationLimitError(PolarityError):
    """Raised when depolarization enumeration exceeds the variable limit."""


class ConstructionError(PolarityError):
    """Raised when a constructive result's hypothesis does not hold."""


class SlotPatternError(PolarityError):
    """Raised when polarized slots of a component are not a prefix 1..k."""


class StateSpaceError(PolarityError):
    """Raised when an exhaustive enumeration would be too large."""


class FormatError(PolarityError):
    """Raised for malformed ideal or system files."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")
