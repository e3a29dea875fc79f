"""Exception types raised across the package."""


class ConfigurationError(ValueError):
    """Invalid filter, kernel or fit parameters."""


class InputDomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class LinearDependenceError(ArithmeticError):
    """A new basis column is numerically in the span of the existing ones."""


class NumericalBreakdownError(RuntimeError):
    """The progressive fit could not reach the requested tolerance."""


class NumericalAnomalyError(RuntimeError):
    """An internal invariant of the fast filter was violated."""


class PgmParseError(ValueError):
    """Malformed or truncated PGM data."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset
