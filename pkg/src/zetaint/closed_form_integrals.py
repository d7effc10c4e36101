"""Closed forms for integrals over [0, 1] of products of Hurwitz zeta functions.

The two central quantities are::

    I(a, b) = int_0^1 zeta_1(a, x) zeta_1(b, x) dx
    J(a, b) = int_0^1 zeta_1(a, x) zeta_1(b, 1 - x) dx

with ``zeta_1(a, x) = zeta(a, x + 1)``.  Both formulas contain Beta factors and
Pochhammer denominators that blow up at integer parameters even though the
integrals themselves are analytic there.  Points inside the guard radius of such
an integer raise :class:`NearSingularError`; the equal-integer case has its own
functions, and everything else can go through the Richardson-extrapolated
symmetric limit via ``force_limit=True``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import DidNotConverge, DomainError, NearPoleError, NearSingularError, PoleError
from .special_functions import (
    POLE_GUARD,
    beta,
    digamma,
    gamma,
    riemann_zeta,
    riemann_zeta_derivative,
    zeta_minus_one,
)
from .values import UNIT_ROUNDOFF, ValueWithError

__all__ = [
    "SeriesPolicy",
    "SINGULAR_GUARD",
    "integral_I",
    "integral_I_integer",
    "integral_J",
    "integral_J_integer",
    "moment_integral",
    "andersson_integral",
    "complementary_power_integral",
    "mikolas_integral",
    "complementary_hurwitz_integral",
    "appendix_sum_S",
    "upsilon_term",
    "symmetric_limit",
]

SINGULAR_GUARD = 1e-6
# offsets of the forced numerical limit; Richardson assumes an even error expansion in h
LIMIT_STEPS = (1e-2, 1e-3)


@dataclass(frozen=True)
class SeriesPolicy:
    """Stopping rule for the geometrically convergent sums.

    Summation stops after ``min_n`` terms once three consecutive terms are
    each below ``tol`` times the running partial sum.
    """

    tol: float = 1e-17
    max_n: int = 400
    min_n: int = 20

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("SeriesPolicy.tol must be positive")
        if self.min_n < 0 or self.max_n < max(self.min_n, 1):
            raise DomainError("SeriesPolicy needs 0 <= min_n <= max_n and max_n >= 1")


DEFAULT_POLICY = SeriesPolicy()


@dataclass
class _Sum:
    value: complex
    trunc: float
    mag: float
    zeta_err: float
    n: int


def _sum_series(terms: Iterator[tuple[complex, float]], policy: SeriesPolicy, what: str) -> _Sum:
    """Sum ``(term, err)`` pairs under ``policy``.

    ``err`` is the propagated absolute error of each term.  The truncation
    estimate is the geometric tail extrapolated from the last two terms.
    """
    total = 0j
    mag = 0.0
    zerr = 0.0
    small = 0
    last = prev = 0.0
    n = 0
    for t, e in terms:
        total += t
        mag += abs(t)
        zerr += e
        prev, last = last, abs(t)
        n += 1
        if last <= policy.tol * abs(total):
            small += 1
        else:
            small = 0
        if n >= policy.min_n and small >= 3:
            break
        if n >= policy.max_n:
            raise DidNotConverge(
                f"{what}: series not converged after {n} terms",
                ValueWithError(total, last * n + UNIT_ROUNDOFF * mag, n, what),
            )
    if last == 0.0:
        trunc = 0.0
    else:
        rho = min(last / prev, 0.9) if prev > 0 else 0.9
        trunc = last * rho / (1.0 - rho)
    return _Sum(total, trunc, mag, zerr, n)


def _pole_check(v: complex, name: str) -> None:
    if abs(v - 1.0) <= POLE_GUARD:
        raise PoleError(f"{name} = 1 is a pole of the integrand (double pole when both are 1)")


def _near_int(v: complex, allowed: Callable[[int], bool], tol: float = SINGULAR_GUARD) -> int | None:
    n = round(v.real)
    if allowed(n) and abs(v - n) <= tol:
        return int(n)
    return None


def _assemble(parts: list[complex], sums: list[_Sum], method: str, extra_err: float = 0.0) -> ValueWithError:
    value = sum(parts, 0j) + sum((s.value for s in sums), 0j)
    mag = sum(abs(p) for p in parts) + sum(s.mag for s in sums)
    trunc = sum(s.trunc for s in sums)
    zerr = sum(s.zeta_err for s in sums)
    err = trunc + zerr + extra_err + 10 * UNIT_ROUNDOFF * mag
    return ValueWithError(value, err, sum(s.n for s in sums), method)


# --------------------------------------------------------------------------
# series building blocks
# --------------------------------------------------------------------------


def _zm1(s: complex) -> tuple[complex, float]:
    z = zeta_minus_one(s)
    return z.value, z.abs_err


def _gen_rising_over_rising(p: complex, q: complex) -> Iterator[tuple[complex, float]]:
    """Terms ``(p)_n / (1 - q)_{n+1} * (zeta(p + n) - 1)`` for n = 0, 1, ..."""
    c = 1.0 / (1.0 - q)
    n = 0
    while True:
        if c == 0:
            yield 0j, 0.0
        else:
            z, e = _zm1(p + n)
            yield c * z, abs(c) * e
        c *= (p + n) / (1.0 - q + n + 1)
        n += 1


def _gen_rising_over_shifted(p: complex, q: complex, skip: int | None = None) -> Iterator[tuple[complex, float]]:
    """Terms ``(p)_n / n! * (zeta(p + n) - 1) / (n + 1 - q)``, optionally omitting ``n = skip``."""
    c = 1 + 0j
    n = 0
    while True:
        if n == skip or c == 0:
            yield 0j, 0.0
        else:
            z, e = _zm1(p + n)
            d = n + 1 - q
            yield c * z / d, abs(c / d) * e
        c *= (p + n) / (n + 1)
        n += 1


# --------------------------------------------------------------------------
# forced numerical limits
# --------------------------------------------------------------------------


def symmetric_limit(
    func: Callable[..., ValueWithError], point: tuple[complex, ...], h: float, shift: tuple[bool, ...] | None = None
) -> ValueWithError:
    """``(func(point + h) + func(point - h)) / 2``, shifting the flagged coordinates.

    The symmetric average removes the odd powers of ``h``; for analytic ``func``
    the result differs from the value at ``point`` by ``O(h^2)``.
    """
    shift = shift or (True,) * len(point)
    up = tuple(p + h if s else p for p, s in zip(point, shift))
    dn = tuple(p - h if s else p for p, s in zip(point, shift))
    f_up, f_dn = func(*up), func(*dn)
    return ValueWithError(
        0.5 * (f_up.value + f_dn.value),
        0.5 * (f_up.abs_err + f_dn.abs_err),
        f_up.terms_used + f_dn.terms_used,
        f"symmetric-limit(h={h:g})",
    )


def _richardson_limit(func, point, shift, method: str) -> ValueWithError:
    h1, h2 = LIMIT_STEPS
    coarse = symmetric_limit(func, point, h1, shift)
    fine = symmetric_limit(func, point, h2, shift)
    r = (h1 / h2) ** 2
    value = (r * fine.value - coarse.value) / (r - 1)
    # degraded estimate: the whole Richardson correction plus both evaluation errors
    err = abs(value - fine.value) + fine.abs_err * r / (r - 1) + coarse.abs_err / (r - 1)
    return ValueWithError(value, err, coarse.terms_used + fine.terms_used, f"{method}+forced-limit")


# --------------------------------------------------------------------------
# Closed forms for I and J
# --------------------------------------------------------------------------


def _singular_points_I(a: complex, b: complex) -> list[str]:
    out = []
    ge2 = lambda n: n >= 2  # noqa: E731
    for name, v in (("a", a), ("b", b)):
        n = _near_int(v, ge2)
        if n is not None:
            out.append(f"{name} ~ {n}")
    n = _near_int(a + b - 1, lambda k: k <= 1)
    if n is not None:
        out.append(f"a + b - 1 ~ {n}")
    return out


def integral_I(
    a: complex, b: complex, policy: SeriesPolicy | None = None, *, force_limit: bool = False
) -> ValueWithError:
    """``int_0^1 zeta_1(a, x) zeta_1(b, x) dx`` in closed form.

    The formula continues analytically to every ``a, b != 1``.  Parameters
    within ``1e-6`` of an integer ``>= 2`` (or with ``a + b - 1`` near an
    integer ``<= 1``) raise :class:`NearSingularError`; ``a = b = m`` belongs
    to :func:`integral_I_integer`.
    """
    policy = policy or DEFAULT_POLICY
    a, b = complex(a), complex(b)
    _pole_check(a, "a")
    _pole_check(b, "b")
    bad = _singular_points_I(a, b)
    if bad:
        if force_limit:
            sum_bad = _near_int(a + b - 1, lambda k: k <= 1) is not None
            shift = tuple(sum_bad or _near_int(v, lambda k: k >= 2) is not None for v in (a, b))
            return _richardson_limit(lambda x, y: integral_I(x, y, policy), (a, b), shift, "I-series")
        hint = ""
        if abs(a - b) <= SINGULAR_GUARD and _near_int(a, lambda n: n >= 2) is not None:
            hint = f"; use integral_I_integer({round(a.real)})"
        raise NearSingularError(f"integral_I: removable singularity ({', '.join(bad)}){hint}")
    s = a + b - 1
    zs = riemann_zeta(s)
    block = (beta(s, 1 - a) + beta(s, 1 - b)) * zs.value
    first = 1.0 / s
    sa = _sum_series(_gen_rising_over_rising(a, b), policy, "integral_I")
    sb = _sum_series(_gen_rising_over_rising(b, a), policy, "integral_I")
    sa.value, sb.value = -sa.value, -sb.value
    extra = abs(block / zs.value) * zs.abs_err if zs.value != 0 else 0.0
    return _assemble([first, block], [sa, sb], "I-series", extra)


def _check_m(m) -> int:
    if isinstance(m, bool) or int(m) != m:
        raise DomainError("m must be an integer")
    m = int(m)
    if m < 2:
        raise DomainError(f"m must be >= 2 (m = 1 is the double pole), got {m}")
    return m


def _falling_ratio(n: int, m: int) -> float:
    """``(n + m - 1)! / (n - m + 1)!`` as a float product, for ``n >= m - 1``."""
    p = 1.0
    for j in range(n - m + 2, n + m):
        p *= j
    return p


def integral_I_integer(m: int, policy: SeriesPolicy | None = None) -> ValueWithError:
    """``int_0^1 zeta_1(m, x)^2 dx`` for integer ``m >= 2`` (the equal-integer limit)."""
    policy = policy or DEFAULT_POLICY
    m = _check_m(m)
    g2 = math.factorial(m - 1) ** 2
    s = 2 * m - 1
    zs = riemann_zeta(s)
    zd = riemann_zeta_derivative(s)
    z_m = digamma(s).real * zs.value + zd.value
    lead = math.factorial(s - 1) * z_m

    def terms():
        n = m - 1
        while True:
            z, e = _zm1(n + m)
            c = _falling_ratio(n, m) * digamma(n + 2 - m).real
            yield c * z, abs(c) * e
            n += 1

    tail = _sum_series(terms(), policy, "integral_I_integer")
    sign = (-1) ** m
    pref = 2 * sign / g2
    tail.value = -pref * tail.value
    tail.mag *= abs(pref)
    tail.trunc *= abs(pref)
    tail.zeta_err *= abs(pref)

    finite = []
    for n in range(0, m - 1):
        z, _ = _zm1(n + m)
        finite.append(2.0 / g2 * (-1) ** n * math.factorial(n + m - 1) * math.factorial(m - n - 2) * z)
    parts = [1.0 / s, pref * lead] + finite
    extra = abs(pref) * math.factorial(s - 1) * (abs(digamma(s)) * zs.abs_err + zd.abs_err)
    return _assemble(parts, [tail], "I-integer", extra)


def _singular_points_J(a: complex, b: complex) -> list[str]:
    out = []
    for name, v in (("a", a), ("b", b)):
        n = _near_int(v, lambda k: k >= 2)
        if n is not None:
            out.append(f"{name} ~ {n}")
    if abs(a + b - 2) <= SINGULAR_GUARD:
        out.append("a + b ~ 2")
    return out


def integral_J(
    a: complex, b: complex, policy: SeriesPolicy | None = None, *, force_limit: bool = False
) -> ValueWithError:
    """``int_0^1 zeta_1(a, x) zeta_1(b, 1 - x) dx`` in closed form, for all ``a, b != 1``.

    Derived on the strip ``0 < Re(a, b) < 1`` and valid everywhere else by
    analytic continuation.  Integer proximity is handled as in :func:`integral_I`.
    """
    policy = policy or DEFAULT_POLICY
    a, b = complex(a), complex(b)
    _pole_check(a, "a")
    _pole_check(b, "b")
    bad = _singular_points_J(a, b)
    if bad:
        if force_limit:
            shift = tuple(_near_int(v, lambda k: k >= 2) is not None for v in (a, b))
            if not any(shift):
                # only a + b ~ 2: moving one parameter is enough
                shift = (True, False)
            return _richardson_limit(lambda x, y: integral_J(x, y, policy), (a, b), shift, "J-series")
        hint = ""
        if abs(a - b) <= SINGULAR_GUARD and _near_int(a, lambda n: n >= 2) is not None:
            hint = f"; use integral_J_integer({round(a.real)})"
        raise NearSingularError(f"integral_J: removable singularity ({', '.join(bad)}){hint}")
    zs_m1 = zeta_minus_one(a + b - 1)
    bf = beta(1 - a, 1 - b)
    block = bf * zs_m1.value
    sa = _sum_series(_gen_rising_over_shifted(a, b), policy, "integral_J")
    sb = _sum_series(_gen_rising_over_shifted(b, a), policy, "integral_J")
    sa.value, sb.value = -sa.value, -sb.value
    return _assemble([block], [sa, sb], "J-series", abs(bf) * zs_m1.abs_err)


def integral_J_integer(m: int, policy: SeriesPolicy | None = None) -> ValueWithError:
    """``int_0^1 zeta_1(m, x) zeta_1(m, 1 - x) dx`` for integer ``m >= 2``."""
    policy = policy or DEFAULT_POLICY
    m = _check_m(m)
    s = 2 * m - 1
    zs1 = zeta_minus_one(s)
    zd = riemann_zeta_derivative(s)
    pref = 2.0 * math.factorial(s - 1) / math.factorial(m - 1) ** 2
    dpsi = (digamma(m) - digamma(s)).real
    lead = pref * (dpsi * zs1.value - zd.value)
    tail = _sum_series(_gen_rising_over_shifted(complex(m), complex(m), skip=m - 1), policy, "integral_J_integer")
    tail.value *= -2
    tail.mag *= 2
    tail.trunc *= 2
    tail.zeta_err *= 2
    extra = pref * (abs(dpsi) * zs1.abs_err + zd.abs_err)
    return _assemble([lead], [tail], "J-integer", extra)


# --------------------------------------------------------------------------
# companion integrals
# --------------------------------------------------------------------------


def moment_integral(s: complex) -> complex:
    """``int_0^1 zeta_1(s, x) dx = 1 / (s - 1)`` for ``Re s > 1``."""
    s = complex(s)
    if not s.real > 1:
        raise DomainError(f"moment_integral needs Re s > 1, got s = {s}")
    return 1.0 / (s - 1.0)


def andersson_integral(a: complex, b: complex, policy: SeriesPolicy | None = None) -> ValueWithError:
    """``int_0^1 x^(-a) zeta_1(b, x) dx = sum_n (b)_n / (1 - a)_{n+1} (zeta(b + n) - 1)``.

    Requires ``Re a < 1`` and ``b`` not in ``{1, 0, -1, -2, ...}``.
    """
    policy = policy or DEFAULT_POLICY
    a, b = complex(a), complex(b)
    if not a.real < 1:
        raise DomainError(f"andersson_integral needs Re a < 1, got a = {a}")
    if _near_int(b, lambda k: k <= 1, POLE_GUARD) is not None:
        raise DomainError(f"andersson_integral needs b not in {{1, 0, -1, ...}}, got b = {b}")
    total = _sum_series(_gen_rising_over_rising(b, a), policy, "andersson_integral")
    return _assemble([], [total], "andersson-series")


def complementary_power_integral(a: complex, b: complex, policy: SeriesPolicy | None = None) -> ValueWithError:
    """``int_0^1 x^(-a) zeta_1(b, 1 - x) dx = sum_n (b)_n / n! (zeta(b + n) - 1) / (1 - a + n)``.

    Defined on the strip ``0 < Re a < 1``, ``0 < Re b < 1``.
    """
    policy = policy or DEFAULT_POLICY
    a, b = complex(a), complex(b)
    if not (0 < a.real < 1 and 0 < b.real < 1):
        raise DomainError(f"complementary_power_integral needs 0 < Re a, Re b < 1, got a = {a}, b = {b}")
    total = _sum_series(_gen_rising_over_shifted(b, a), policy, "complementary_power_integral")
    return _assemble([], [total], "complementary-power-series")


def mikolas_integral(a: complex, b: complex) -> complex:
    """``int_0^1 zeta(a, x) zeta(b, x) dx`` for ``Re a, Re b, Re(a + b) < 1``."""
    a, b = complex(a), complex(b)
    if not (a.real < 1 and b.real < 1 and (a + b).real < 1):
        raise DomainError(f"mikolas_integral needs Re a, Re b, Re(a + b) < 1, got a = {a}, b = {b}")
    s = a + b - 1
    n = _near_int(s, lambda k: k <= 0, POLE_GUARD)
    if n is not None:
        raise NearPoleError(f"mikolas_integral: a + b - 1 ~ {n} where the Beta factors degenerate")
    return (beta(s, 1 - a) + beta(s, 1 - b)) * riemann_zeta(s).value


def complementary_hurwitz_integral(a: complex, b: complex) -> complex:
    """``int_0^1 zeta(a, x) zeta(b, 1 - x) dx = B(1 - a, 1 - b) zeta(a + b - 1)`` for ``Re a, Re b < 1``."""
    a, b = complex(a), complex(b)
    if not (a.real < 1 and b.real < 1):
        raise DomainError(f"complementary_hurwitz_integral needs Re a, Re b < 1, got a = {a}, b = {b}")
    if abs(a + b - 2) <= POLE_GUARD:
        raise NearPoleError("complementary_hurwitz_integral: a + b - 1 is at the zeta pole")
    return beta(1 - a, 1 - b) * riemann_zeta(a + b - 1).value


def appendix_sum_S(m: int, policy: SeriesPolicy | None = None) -> ValueWithError:
    """``sum_{n >= m-1} Gamma(n + m) / Gamma(n + 2 - m) (zeta(m + n) - 1)``; equals ``Gamma(2m-1) zeta(2m-1)``.

    The terms with ``n <= m - 2`` vanish because ``1/Gamma`` has zeros there.
    """
    policy = policy or DEFAULT_POLICY
    m = _check_m(m)

    def terms():
        n = m - 1
        while True:
            z, e = _zm1(n + m)
            c = _falling_ratio(n, m)
            yield c * z, c * e
            n += 1

    return _assemble([], [_sum_series(terms(), policy, "appendix_sum_S")], "appendix-S")


def upsilon_term(n: int, m: int) -> complex:
    """``{psi(n + m) + psi(n + 2 - m)} {zeta(n + m) - 1} + zeta'(n + m)`` for ``n >= m - 1``."""
    m = _check_m(m)
    if int(n) != n or n < m - 1:
        raise DomainError(f"upsilon_term needs integer n >= m - 1, got n = {n}, m = {m}")
    n = int(n)
    z, _ = _zm1(n + m)
    return (digamma(n + m) + digamma(n + 2 - m)) * z + riemann_zeta_derivative(n + m).value
