"""Exception types shared across the library."""


class AlgebraError(ValueError):
    """Base class for the domain errors raised by this library."""


class DimensionError(AlgebraError):
    """Operands live in polynomial rings with different variable counts."""


class StabilityError(AlgebraError):
    """An operation that requires a (strongly) stable ideal got something else."""


class DomainError(AlgebraError):
    """Input is outside the mathematical domain of the operation."""


class NoAlmostRevlexIdeal(AlgebraError):
    """The requested Hilbert function does not admit an almost revlex ideal.

    ``degree`` is the first degree at which the greedy construction would
    need to remove terms it cannot supply.
    """

    def __init__(self, degree: int, message: str | None = None):
        self.degree = degree
        super().__init__(message or f"no almost revlex ideal: deficit at degree {degree}")
