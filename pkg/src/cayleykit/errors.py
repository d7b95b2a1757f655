"""Exception types shared across the package."""


class CayleykitError(Exception):
    """Base class for errors raised by this package."""


class CapExceeded(CayleykitError):
    """A closure or graph grew past the caller-supplied cap."""


class BudgetExceeded(CayleykitError):
    """A search exceeded its vertex or work budget."""


class ParityError(CayleykitError, ValueError):
    """A construction was requested for a cycle type of the wrong parity."""


class NoCircuit(CayleykitError, ValueError):
    """The requested graph has no Eulerian circuit."""


class RangeError(CayleykitError, ValueError):
    """An integer argument is outside the supported exact-arithmetic range."""


class ConvergenceError(CayleykitError):
    """An iterative solver ran out of iterations; carries the last residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual
