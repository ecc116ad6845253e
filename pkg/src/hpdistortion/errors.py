"""Exception hierarchy shared by every numerical layer."""


class DistortionError(Exception):
    """Base class for errors raised by this package."""


class DomainError(DistortionError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """The function is infinite at the requested point (e.g. K_a at r = 1)."""


class ConvergenceError(DistortionError, ArithmeticError):
    """An iterative method exhausted its iteration budget."""
