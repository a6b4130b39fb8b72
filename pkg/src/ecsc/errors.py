"""Exception types shared across the package."""


class EcscError(Exception):
    """Base class for all package-specific errors."""


class DomainError(EcscError, ValueError):
    """Argument outside the mathematical domain of an operation (e.g. r <= 0)."""


class UnsupportedConfigError(EcscError, ValueError):
    """Operation not defined for this parameter combination (e.g. g != 1)."""


class UnsupportedStateError(EcscError, ValueError):
    """Quantum state outside the range an operation supports (e.g. n > 2)."""


class PoleError(EcscError, ArithmeticError):
    """Evaluation requested at (or too close to) a wavefunction node."""


class QuadratureError(EcscError, ArithmeticError):
    """Adaptive quadrature failed to converge within its subdivision budget."""

    def __init__(self, message, error_estimate=None):
        super().__init__(message)
        self.error_estimate = error_estimate


class NoBoundStateError(EcscError, RuntimeError):
    """Eigenvalue search found no bound level with the requested node count."""


class IntegrationFailureError(EcscError, ArithmeticError):
    """Outward Numerov integration failed unrecoverably."""
