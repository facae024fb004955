"""Exception types shared across the package."""


class GtrigError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GtrigError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BracketError(GtrigError, ValueError):
    """The root-finding target is not bracketed by the supplied interval."""


class NonConvergenceError(GtrigError, RuntimeError):
    """An iteration failed to reach the requested tolerance within its cap."""


class NonFiniteIntegrandError(GtrigError, ArithmeticError):
    """The integrand produced NaN or infinity at an interior node."""


class UnknownIdentityError(GtrigError, KeyError):
    """An identity id is not part of the catalog vocabulary."""
