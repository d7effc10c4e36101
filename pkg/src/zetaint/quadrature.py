"""Tanh-sinh quadrature on (0, 1) and builders for the zeta-product integrands.

The quadrature is the independent oracle for every closed form in
:mod:`zetaint.closed_form_integrals`; the builders evaluate integrands directly
from :mod:`zetaint.special_functions` and never touch a closed form.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .errors import DidNotConverge, DomainError, NonFiniteSample
from .special_functions import hurwitz_zeta, pochhammer, riemann_zeta, zeta1
from .values import UNIT_ROUNDOFF

__all__ = [
    "QuadratureResult",
    "IntegrandKind",
    "IntegrandSpec",
    "tanh_sinh",
    "build_integrand",
    "quad_eval",
]

ETA = 1e-300
# largest t with min(x, 1 - x) >= 1e-300 under x = 1 / (1 + exp(pi sinh t))
_T_MAX = math.asinh(math.log(1e300) / math.pi)
_MIN_LEVEL = 3


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    abs_err: float
    levels_used: int
    evaluations: int
    converged: bool = True


@lru_cache(maxsize=32)
def _level_nodes(level: int) -> tuple[tuple[float, float, float], ...]:
    """Nodes ``(x_small, x_small_complement, weight)`` added at ``level``, for ``t > 0``.

    Level 0 uses the integers ``t = 1, 2, ...``; level ``L`` adds the odd
    multiples of ``2**-L``.  Weights exclude the step ``h``.
    """
    h = 2.0**-level
    step = 1 if level == 0 else 2
    k = 1
    out = []
    while True:
        t = k * h
        if t > _T_MAX:
            break
        u = math.pi * math.sinh(t)
        e = math.exp(-u)
        xs = e / (1.0 + e)  # 1 / (1 + exp(u)) without overflow
        xc = 1.0 / (1.0 + e)
        w = math.pi * math.cosh(t) * xs * xc
        out.append((xs, xc, w))
        k += step
    return tuple(out)


_BELOW_ONE = math.nextafter(1.0, 0.0)


def _call(f, x, xc, with_complement):
    # without the complement, nodes within 2^-54 of 1 round to 1.0; keep them interior
    v = f(x, xc) if with_complement else f(min(x, _BELOW_ONE))
    v = complex(v)
    if not cmath.isfinite(v):
        raise NonFiniteSample(f"integrand returned {v!r} at x = {x!r}")
    return v


def tanh_sinh(
    f: Callable[..., complex],
    tol: float = 1e-12,
    max_level: int = 12,
    *,
    with_complement: bool = False,
    raise_on_failure: bool = True,
) -> QuadratureResult:
    """Integrate ``f`` over (0, 1) with the double-exponential substitution.

    The error estimate is the difference of the last two refinement levels;
    refinement stops when it is below ``tol * max(1, |value|)`` or at the
    rounding floor of the weighted sum.  Nodes never reach 0 or 1 exactly.
    With ``with_complement=True`` the integrand is called as ``f(x, 1 - x)``
    with the complement computed without cancellation, which matters for
    integrands singular at ``x = 1``.

    Real and complex integrands are both accepted; the real and imaginary
    parts share nodes.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    evals = 1
    centre = _call(f, 0.5, 0.5, with_complement) * (math.pi / 4)
    total_re = [centre.real]
    total_im = [centre.imag]
    mag = abs(centre)

    def level_sum(level):
        nonlocal evals, mag
        re, im = [], []
        for xs, xc, w in _level_nodes(level):
            lo = _call(f, xs, xc, with_complement)
            hi = _call(f, xc, xs, with_complement)
            s = (lo + hi) * w
            re.append(s.real)
            im.append(s.imag)
            mag += (abs(lo) + abs(hi)) * w
            evals += 2
        return complex(math.fsum(re), math.fsum(im))

    body = level_sum(0)
    estimate = centre + body
    prev = None
    err = math.inf
    level = 0
    converged = False
    while True:
        if prev is not None:
            err = abs(estimate - prev)
            h = 2.0**-level
            floor = 64 * UNIT_ROUNDOFF * mag * h
            if level >= _MIN_LEVEL and err <= max(tol * max(1.0, abs(estimate)), floor):
                converged = True
                break
        if level >= max_level:
            break
        level += 1
        prev = estimate
        estimate = 0.5 * prev + 2.0**-level * level_sum(level)
    result = QuadratureResult(estimate, err, level, evals, converged)
    if not converged and raise_on_failure:
        raise DidNotConverge(f"tanh_sinh: |delta| = {err:.3g} after {level} levels", result)
    return result


# --------------------------------------------------------------------------
# integrands
# --------------------------------------------------------------------------


class IntegrandKind(str, enum.Enum):
    II = "II"  # zeta_1(a,x) zeta_1(b,x)
    JJ = "JJ"  # zeta_1(a,x) zeta_1(b,1-x)
    M = "M"  # symmetric remainder of the film integral
    K = "K"  # film integral
    POWER_ZETA1 = "POWER_ZETA1"  # x^-a zeta_1(b,x)
    COMPLEMENTARY_POWER = "COMPLEMENTARY_POWER"  # x^-a zeta_1(b,1-x)
    HURWITZ_PRODUCT = "HURWITZ_PRODUCT"  # zeta(a,x) zeta(b,1-x)
    MIKOLAS = "MIKOLAS"  # zeta(a,x) zeta(b,x)
    MEAN_SQUARE = "MEAN_SQUARE"  # |zeta_1(sigma+it,x)|^2


_PARAM_NAMES = {
    IntegrandKind.II: ("a", "b"),
    IntegrandKind.JJ: ("a", "b"),
    IntegrandKind.M: ("alpha",),
    IntegrandKind.K: ("alpha",),
    IntegrandKind.POWER_ZETA1: ("a", "b"),
    IntegrandKind.COMPLEMENTARY_POWER: ("a", "b"),
    IntegrandKind.HURWITZ_PRODUCT: ("a", "b"),
    IntegrandKind.MIKOLAS: ("a", "b"),
    IntegrandKind.MEAN_SQUARE: ("sigma", "t"),
}


@dataclass(frozen=True)
class IntegrandSpec:
    kind: IntegrandKind
    params: tuple = field(default_factory=tuple)

    def __post_init__(self):
        kind = IntegrandKind(self.kind)
        object.__setattr__(self, "kind", kind)
        names = _PARAM_NAMES[kind]
        if len(self.params) != len(names):
            raise DomainError(f"{kind.value} takes parameters {names}, got {self.params!r}")


def _clamp(x: float, xc: float | None) -> tuple[float, float]:
    if xc is None:
        xc = 1.0 - x
    return max(x, ETA), max(xc, ETA)


class _EvenPart:
    """``W(y) / y^2`` where ``W(y) = zeta(alpha, 1 + y) + zeta(alpha, 1 - y) - 2 zeta(alpha)``.

    Small ``y`` uses the even Taylor series ``sum_k 2 (alpha)_{2k} / (2k)! zeta(alpha + 2k) y^{2k}``,
    which avoids the cancellation in the direct difference; larger ``y`` uses
    the direct difference.
    """

    SWITCH = 0.25

    def __init__(self, alpha: float):
        self.alpha = alpha
        self.z = riemann_zeta(alpha).value.real
        coeffs = []
        k = 1
        while True:
            c = 2 * pochhammer(alpha, 2 * k).real / math.factorial(2 * k) * riemann_zeta(alpha + 2 * k).value.real
            coeffs.append(c)
            if abs(c) * self.SWITCH ** (2 * k - 2) < 1e-18 * abs(coeffs[0]) or k > 80:
                break
            k += 1
        self.coeffs = coeffs

    def __call__(self, y: float) -> float:
        if y < self.SWITCH:
            y2 = y * y
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * y2 + c
            return acc
        w = zeta1(self.alpha, y).value.real + hurwitz_zeta(self.alpha, 1.0 - y).value.real - 2 * self.z
        return w / (y * y)


def _film_parts(alpha: float):
    if not 1.0 < alpha <= 2.0:
        raise DomainError(f"film integrands need 1 < alpha <= 2, got alpha = {alpha}")
    return _EvenPart(alpha)


def build_integrand(spec: IntegrandSpec) -> Callable[..., complex]:
    """A callable ``f(x, xc=None)`` evaluating the integrand of ``spec`` on (0, 1).

    ``xc`` is ``1 - x``; pass it when it is known more accurately than the
    subtraction.  For the film kinds ``K`` and ``M`` the integrand is evaluated
    on ``y = min(x, 1 - x)`` using its ``x <-> 1 - x`` symmetry, with the
    ``x^(-alpha)`` singular pieces combined analytically so no cancellation
    of large terms occurs near the endpoints.
    """
    kind = spec.kind
    p = spec.params
    if kind in (IntegrandKind.II, IntegrandKind.JJ):
        a, b = complex(p[0]), complex(p[1])
        if abs(a - 1) < 1e-8 or abs(b - 1) < 1e-8:
            raise DomainError(f"{kind.value} needs a, b != 1")
        if kind is IntegrandKind.II:
            def f(x, xc=None):
                x, _ = _clamp(x, xc)
                return zeta1(a, x).value * zeta1(b, x).value
        else:
            def f(x, xc=None):
                x, xc = _clamp(x, xc)
                return zeta1(a, x).value * zeta1(b, xc).value
        return f

    if kind is IntegrandKind.POWER_ZETA1:
        a, b = complex(p[0]), complex(p[1])
        if not a.real < 1 or abs(b - 1) < 1e-8:
            raise DomainError("POWER_ZETA1 needs Re a < 1 and b != 1")

        def f(x, xc=None):
            x, _ = _clamp(x, xc)
            return x ** (-a) * zeta1(b, x).value
        return f

    if kind is IntegrandKind.COMPLEMENTARY_POWER:
        a, b = complex(p[0]), complex(p[1])
        if not a.real < 1 or abs(b - 1) < 1e-8:
            raise DomainError("COMPLEMENTARY_POWER needs Re a < 1 and b != 1")

        def f(x, xc=None):
            x, xc = _clamp(x, xc)
            return x ** (-a) * zeta1(b, xc).value
        return f

    if kind in (IntegrandKind.HURWITZ_PRODUCT, IntegrandKind.MIKOLAS):
        a, b = complex(p[0]), complex(p[1])
        if not (a.real < 1 and b.real < 1):
            raise DomainError(f"{kind.value} needs Re a, Re b < 1")
        complementary = kind is IntegrandKind.HURWITZ_PRODUCT
        if not complementary and not (a + b).real < 1:
            raise DomainError("MIKOLAS needs Re(a + b) < 1 for convergence at x = 0")

        def f(x, xc=None):
            x, xc = _clamp(x, xc)
            za = x ** (-a) + zeta1(a, x).value
            if complementary:
                zb = xc ** (-b) + zeta1(b, xc).value
            else:
                zb = x ** (-b) + zeta1(b, x).value
            return za * zb
        return f

    if kind is IntegrandKind.MEAN_SQUARE:
        s = complex(float(p[0]), float(p[1]))
        if abs(s - 1) < 1e-8:
            raise DomainError("MEAN_SQUARE needs sigma + it != 1")

        def f(x, xc=None):
            x, _ = _clamp(x, xc)
            v = zeta1(s, x).value
            return v.real * v.real + v.imag * v.imag
        return f

    alpha = float(p[0])
    even = _film_parts(alpha)
    two_zeta = 2 * even.z

    if kind is IntegrandKind.K:
        # [2 zeta - zeta(alpha, y) - zeta(alpha, 1-y)]^2 - y^-2alpha - (1-y)^-2alpha
        #   = 2 y^-alpha W + W^2 - (1-y)^-2alpha
        def f(x, xc=None):
            x, xc = _clamp(x, xc)
            y, yc = (x, xc) if x <= xc else (xc, x)
            wy = even(y)
            w = wy * y * y
            bb = yc ** (-alpha)
            return 2 * y ** (2 - alpha) * wy + w * w - bb * bb
        return f

    # M: [A + B - 2 zeta][zeta_1(y) + zeta_1(1-y) - 2 zeta] + A B with A = y^-alpha, B = (1-y)^-alpha
    #   = (A + B) W - B^2 - 2 zeta W + 2 zeta B
    def f(x, xc=None):
        x, xc = _clamp(x, xc)
        y, yc = (x, xc) if x <= xc else (xc, x)
        wy = even(y)
        w = wy * y * y
        bb = yc ** (-alpha)
        return y ** (2 - alpha) * wy + (bb - two_zeta) * w - bb * bb + two_zeta * bb
    return f


def quad_eval(spec: IntegrandSpec, tol: float = 1e-12, max_level: int = 12) -> QuadratureResult:
    """Definite integral over [0, 1] of the integrand described by ``spec``."""
    return tanh_sinh(build_integrand(spec), tol, max_level, with_complement=True)
