"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class DimensionMismatchError(DomainError):
    """Operands live in incompatible spaces."""


class NotASicError(ValueError):
    """A candidate ket family failed the SIC overlap conditions."""

    def __init__(self, message, worst_deviation=None):
        super().__init__(message)
        self.worst_deviation = worst_deviation


class ConstructionError(ValueError):
    """A derived object failed its defining check after construction."""


class PreconditionError(ValueError):
    """A documented precondition of an operation was violated."""
