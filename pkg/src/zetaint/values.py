"""Small value types passed between the numerical modules."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DomainError, NonFiniteError

UNIT_ROUNDOFF = 2.0**-53


def is_finite(z: complex) -> bool:
    return cmath.isfinite(complex(z))


def require_finite(z: complex, what: str = "value") -> complex:
    z = complex(z)
    if not cmath.isfinite(z):
        raise NonFiniteError(f"{what} is not finite: {z!r}")
    return z


@dataclass(frozen=True)
class EvalOptions:
    """Precision and truncation policy for the special functions.

    ``em_shift_min`` scales the minimum number of directly summed terms in the
    Euler-Maclaurin evaluation (the floor is ``ceil(10 * em_shift_min)``).
    """

    target_tol: float = 1e-12
    max_terms: int = 10**6
    em_tail_order: int = 8
    em_shift_min: float = 1.0
    quad_max_level: int = 12

    def __post_init__(self):
        if not self.target_tol > 0:
            raise DomainError("target_tol must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")
        if not 1 <= self.em_tail_order <= 15:
            raise DomainError("em_tail_order must lie in [1, 15]")
        if self.em_shift_min < 0:
            raise DomainError("em_shift_min must be nonnegative")


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class ValueWithError:
    """A computed value with an a posteriori absolute error estimate.

    ``abs_err`` is an estimate, not a rigorous bound.
    """

    value: complex
    abs_err: float
    terms_used: int = 0
    method: str = ""

    def __post_init__(self):
        object.__setattr__(self, "value", require_finite(self.value, self.method or "value"))
        if not (self.abs_err >= 0):
            raise NonFiniteError(f"abs_err must be a nonnegative real, got {self.abs_err!r}")

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    def __complex__(self) -> complex:
        return self.value


@dataclass(frozen=True)
class LaurentPair:
    """Laurent data of ``f(p + eps) = pole_coeff / eps + finite_part + O(eps)``."""

    pole_coeff: complex
    finite_part: complex

    def __call__(self, eps: float) -> complex:
        """Two-term Laurent approximation at offset ``eps``."""
        return self.pole_coeff / eps + self.finite_part
