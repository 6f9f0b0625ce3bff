"""Exception types raised by the library."""


class A3Error(Exception):
    """Base class for all domain errors."""


class SingularityError(A3Error, ValueError):
    """A potential term hit a pole (vanishing denominator or trig factor)."""

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class IntegralityError(A3Error, ArithmeticError):
    """A closed form produced a non-integer root coefficient."""


class PrecisionError(A3Error, ArithmeticError):
    """Floating-point evaluation can no longer certify an integer result."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class IdentificationError(A3Error, LookupError):
    """A reflected root string could not be matched to any signed string."""


class SpectralError(A3Error, ArithmeticError):
    """Eigen-decomposition of a Coxeter matrix failed its checks."""
