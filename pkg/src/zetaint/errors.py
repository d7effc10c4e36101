"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ZetaIntError(Exception):
    """Base class for all errors raised by :mod:`zetaint`."""


class DomainError(ZetaIntError, ValueError):
    """An argument lies outside the region where the operation is defined."""


class PoleError(DomainError):
    """An argument sits on a pole of the function being evaluated."""


class NearPoleError(PoleError):
    """An argument is inside the pole guard radius.

    Double precision cannot resolve the function there; use the Laurent or
    limit variant named in the message instead.
    """


class DivergenceError(DomainError):
    """A series was requested outside its disk of convergence."""


class NearSingularError(ZetaIntError, ArithmeticError):
    """A closed form has a removable singularity at (or very near) the point.

    The individual terms diverge and cancel; evaluating them directly would
    return a cancellation-corrupted number.
    """


class NonFiniteError(ZetaIntError, ArithmeticError):
    """A NaN or infinity was produced where a finite value is required."""


class NonFiniteSample(NonFiniteError):
    """An integrand returned a non-finite value at an interior node."""


class DidNotConverge(ZetaIntError, ArithmeticError):
    """An iterative procedure hit its cap before reaching the tolerance.

    The best available estimate is attached as :attr:`result`.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result
