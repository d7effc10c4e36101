"""O(g) Casimir coefficients of the Dirichlet film in d = 4 - eps dimensions.

``K(alpha)`` is the dimensionless film integral, ``alpha = 2 - eps``.  It is
available in closed form (:func:`K_closed`) and assembled from the series
values of ``I(alpha, alpha)``, ``J(alpha, alpha)`` and a quadrature of the
remainder ``M(alpha)`` (:func:`K_assembled`).  The Casimir coefficients follow
from ``K``; all length and scale factors are stripped.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass

from .closed_form_integrals import integral_I, integral_I_integer, integral_J, integral_J_integer
from .errors import DomainError
from .quadrature import IntegrandKind, IntegrandSpec, quad_eval
from .special_functions import EULER_GAMMA, beta, gamma, riemann_zeta, riemann_zeta_derivative
from .values import UNIT_ROUNDOFF, ValueWithError

__all__ = [
    "EpsilonParam",
    "CasimirReport",
    "REMOVABLE_WINDOW",
    "tail_integral",
    "K_closed",
    "K_assembled",
    "M_quadrature",
    "c0",
    "c1_closed",
    "c1_assembled",
    "amplitude_DD",
    "casimir_report",
]

# below this distance from alpha = 2 (eps = 0) the Beta poles are cancelled analytically
REMOVABLE_WINDOW = 1e-3
EPS_FLAG = 0.95
QUAD_TOL = 1e-12


@dataclass(frozen=True)
class EpsilonParam:
    """Dimension deficit ``eps`` in ``[0, 1)``, with ``alpha = 2 - eps``."""

    eps: float

    def __post_init__(self):
        eps = float(self.eps)
        if not 0.0 <= eps < 1.0:
            raise DomainError(f"eps must lie in [0, 1), got {eps}")
        if eps > EPS_FLAG:
            warnings.warn(
                f"eps = {eps} is close to 1 where zeta(2 - eps) diverges; accuracy is not validated there",
                RuntimeWarning,
                stacklevel=3,
            )
        object.__setattr__(self, "eps", eps)

    @property
    def alpha(self) -> float:
        return 2.0 - self.eps


def _param(eps) -> EpsilonParam:
    return eps if isinstance(eps, EpsilonParam) else EpsilonParam(eps)


def tail_integral(eps) -> float:
    """Dimensionless tail ``1 / (2 alpha - 1) = 1 / (3 - 2 eps)`` of the half-space subtraction."""
    p = _param(eps)
    return 1.0 / (3.0 - 2.0 * p.eps)


def _beta_block(p: EpsilonParam) -> tuple[float, float]:
    """``2 B(1 - alpha, 2 alpha - 1) + B(1 - alpha, 1 - alpha)`` and a rounding estimate.

    Inside the window the reflection formula turns the pair of Beta poles
    into ``2 pi tan(pi alpha / 2) Gamma(2 alpha - 1) / Gamma(alpha)^2``,
    whose zero at ``alpha = 2`` is explicit.
    """
    eps, alpha = p.eps, p.alpha
    if eps < REMOVABLE_WINDOW:
        ratio = gamma(3.0 - 2.0 * eps).real / gamma(2.0 - eps).real ** 2
        val = -2.0 * math.pi * math.tan(0.5 * math.pi * eps) * ratio
        return val, 8 * UNIT_ROUNDOFF * abs(val)
    b1 = beta(1.0 - alpha, 2.0 * alpha - 1.0).real
    b2 = beta(1.0 - alpha, 1.0 - alpha).real
    val = 2.0 * b1 + b2
    return val, 8 * UNIT_ROUNDOFF * (2 * abs(b1) + abs(b2))


def K_closed(eps) -> ValueWithError:
    """Closed form ``K = 4 zeta(alpha)^2 + 2 zeta(2 alpha - 1) {2B(1-alpha, 2alpha-1) + B(1-alpha, 1-alpha)} + 2/(2 alpha - 1)``."""
    p = _param(eps)
    alpha = p.alpha
    z = riemann_zeta(alpha)
    z2 = riemann_zeta(2.0 * alpha - 1.0)
    blk, blk_err = _beta_block(p)
    lead = 4.0 * z.value.real ** 2
    mid = 2.0 * z2.value.real * blk
    value = lead + mid + 2.0 * tail_integral(p)
    err = (
        8.0 * abs(z.value) * z.abs_err
        + 2.0 * abs(blk) * z2.abs_err
        + 2.0 * abs(z2.value) * blk_err
        + 4 * UNIT_ROUNDOFF * (abs(lead) + abs(mid))
    )
    method = "closed-form+reflection" if p.eps < REMOVABLE_WINDOW else "closed-form"
    return ValueWithError(complex(value), err, 0, method)


def M_quadrature(eps, tol: float = QUAD_TOL) -> ValueWithError:
    """Remainder integral ``M(alpha)`` by tanh-sinh quadrature."""
    p = _param(eps)
    r = quad_eval(IntegrandSpec(IntegrandKind.M, (p.alpha,)), tol)
    return ValueWithError(r.value, r.abs_err, r.evaluations, "tanh-sinh")


def _assemble_at(p: EpsilonParam) -> ValueWithError:
    alpha = p.alpha
    if p.eps == 0.0:
        i_val, j_val = integral_I_integer(2), integral_J_integer(2)
        method = "I-integer+J-integer+quadrature"
    else:
        i_val, j_val = integral_I(alpha, alpha), integral_J(alpha, alpha)
        method = "I-series+J-series+quadrature"
    m_val = M_quadrature(p)
    z = riemann_zeta(alpha)
    value = -4.0 * z.value.real ** 2 + 2.0 * (i_val.value + j_val.value + m_val.value)
    err = 2.0 * (i_val.abs_err + j_val.abs_err + m_val.abs_err) + 8.0 * abs(z.value) * z.abs_err
    return ValueWithError(complex(value.real), err, i_val.terms_used + j_val.terms_used + m_val.terms_used, method)


def K_assembled(eps) -> ValueWithError:
    """``K = -4 zeta(alpha)^2 + 2 I(alpha, alpha) + 2 J(alpha, alpha) + 2 M(alpha)``.

    At ``eps = 0`` the integer-order forms (m = 2) are used.  For
    ``0 < eps < 1e-3`` the general-parameter series are dominated by
    cancelling poles, so the value snaps to ``eps = 0``; the snap error is
    estimated as twice the secant slope between ``eps = 0`` and the window
    edge (the factor covers curvature) and added to ``abs_err``.
    """
    p = _param(eps)
    if 0.0 < p.eps < REMOVABLE_WINDOW:
        at_zero = _assemble_at(EpsilonParam(0.0))
        edge = _assemble_at(EpsilonParam(REMOVABLE_WINDOW))
        slope = abs(edge.value - at_zero.value) / REMOVABLE_WINDOW
        return ValueWithError(
            at_zero.value,
            at_zero.abs_err + 2.0 * slope * p.eps,
            at_zero.terms_used,
            f"{at_zero.method}+snapped(eps={p.eps:g}->0)",
        )
    return _assemble_at(p)


def c0(eps) -> float:
    """Leading coefficient ``-(4 pi)^(-d/2) Gamma(d/2) zeta(d)`` with ``d = 4 - eps``."""
    p = _param(eps)
    d = 4.0 - p.eps
    return -((4.0 * math.pi) ** (-d / 2)) * math.gamma(d / 2) * riemann_zeta(d).value.real


def _prefactor(eps: float) -> float:
    """``(1/2) (4 pi)^(-4 + eps) Gamma(1 - eps/2)^2``."""
    return 0.5 * (4.0 * math.pi) ** (-4.0 + eps) * math.gamma(1.0 - 0.5 * eps) ** 2


def c1_closed(eps) -> ValueWithError:
    """``c_1 = (1/2)(4 pi)^(eps-4) Gamma(1 - eps/2)^2 [zeta(2-eps)^2 + (1 - cos pi eps) B(3-2eps, eps-1) zeta(3-2eps)]``.

    The simple Beta pole at ``eps = 0`` meets the double zero of
    ``1 - cos(pi eps)``; near it the product is evaluated as
    ``-pi tan(pi eps / 2) Gamma(3 - 2 eps) / Gamma(2 - eps)^2``.
    """
    p = _param(eps)
    e = p.eps
    z = riemann_zeta(2.0 - e)
    z3 = riemann_zeta(3.0 - 2.0 * e)
    if e < REMOVABLE_WINDOW:
        factor = -math.pi * math.tan(0.5 * math.pi * e) * gamma(3.0 - 2.0 * e).real / gamma(2.0 - e).real ** 2
        method = "closed-form+reflection"
    else:
        factor = 2.0 * math.sin(0.5 * math.pi * e) ** 2 * beta(3.0 - 2.0 * e, e - 1.0).real
        method = "closed-form"
    bracket = z.value.real ** 2 + factor * z3.value.real
    pref = _prefactor(e)
    value = pref * bracket
    err = pref * (
        2 * abs(z.value) * z.abs_err
        + abs(factor) * z3.abs_err
        + 8 * UNIT_ROUNDOFF * (abs(z.value) ** 2 + abs(factor * z3.value))
    ) + 4 * UNIT_ROUNDOFF * abs(value)
    return ValueWithError(complex(value), err, 0, method)


def _film_prefactor(eps: float) -> float:
    """``(1/8) 2^(2 eps - 4) C^2`` with ``C = pi^(eps/2 - 2) Gamma(1 - eps/2) / 4``."""
    amp = 0.25 * math.pi ** (-2.0 + 0.5 * eps) * math.gamma(1.0 - 0.5 * eps)
    return 0.125 * 2.0 ** (-4.0 + 2.0 * eps) * amp * amp


def c1_assembled(eps, route: str = "series") -> ValueWithError:
    """``c_1`` rebuilt from the film integral: ``(1/8) 2^(2 eps - 4) C^2 [K(alpha) - 2/(2 alpha - 1)]``.

    ``C`` is the free-propagator amplitude.  ``route="series"`` takes ``K`` from :func:`K_assembled`
    (series values plus quadrature); ``route="closed"`` from :func:`K_closed`.
    """
    p = _param(eps)
    if route == "series":
        k = K_assembled(p)
    elif route == "closed":
        k = K_closed(p)
    else:
        raise DomainError(f"route must be 'series' or 'closed', got {route!r}")
    pref = _film_prefactor(p.eps)
    value = pref * (k.value.real - 2.0 * tail_integral(p))
    return ValueWithError(complex(value), pref * k.abs_err + 4 * UNIT_ROUNDOFF * abs(value), k.terms_used, f"assembled[{k.method}]")


def amplitude_DD(n: int, eps) -> float:
    """First-order eps expansion of the Dirichlet-Dirichlet Casimir amplitude for an ``n``-component field."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    p = _param(eps)
    z4 = riemann_zeta(4.0).value.real
    dz4 = riemann_zeta_derivative(4.0).value.real
    slope = (EULER_GAMMA - 1.0) / 2.0 + math.log(2.0 * math.sqrt(math.pi)) - dz4 / z4 - 1.25 * (n + 2) / (n + 8)
    return -n * math.pi**2 / 1440.0 * (1.0 + slope * p.eps)


@dataclass(frozen=True)
class CasimirReport:
    eps: float
    c0: float
    c1: float
    c1_assembled: float
    K_closed: float
    K_assembled: float
    c1_delta: float
    K_delta: float
    c1_err: float
    K_err: float
    amplitude_n: tuple[int, float] | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.amplitude_n is not None:
            d["amplitude_n"] = {"n": self.amplitude_n[0], "amplitude_DD": self.amplitude_n[1]}
        return d


def casimir_report(eps, n: int | None = None) -> CasimirReport:
    """All coefficients at ``eps`` with the closed-form versus assembled cross-checks."""
    p = _param(eps)
    kc = K_closed(p)
    ka = K_assembled(p)
    c1c = c1_closed(p)
    e = p.eps
    pref = _film_prefactor(e)
    c1a = pref * (ka.value.real - 2.0 * tail_integral(p))
    return CasimirReport(
        eps=e,
        c0=c0(p),
        c1=c1c.real,
        c1_assembled=c1a,
        K_closed=kc.real,
        K_assembled=ka.real,
        c1_delta=abs(c1c.real - c1a),
        K_delta=abs(kc.real - ka.real),
        c1_err=c1c.abs_err + pref * ka.abs_err,
        K_err=kc.abs_err + ka.abs_err,
        amplitude_n=(int(n), amplitude_DD(n, p)) if n is not None else None,
    )
