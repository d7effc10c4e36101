"""Gamma family, Riemann and Hurwitz zeta functions, and their expansions.

Every complex-capable function takes and returns Python ``complex``.  The
zeta functions return :class:`~zetaint.values.ValueWithError` carrying an
a posteriori error estimate; the Gamma family returns bare values accurate
to a few units in the last place away from poles.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import DivergenceError, DomainError, NearPoleError, PoleError
from .values import (
    DEFAULT_OPTIONS,
    UNIT_ROUNDOFF,
    EvalOptions,
    LaurentPair,
    ValueWithError,
    require_finite,
)

__all__ = [
    "EULER_GAMMA",
    "bernoulli",
    "log_gamma",
    "gamma",
    "rgamma",
    "digamma",
    "pochhammer",
    "beta",
    "beta_laurent",
    "gamma_laurent",
    "riemann_zeta",
    "riemann_zeta_derivative",
    "hurwitz_zeta",
    "hurwitz_zeta_derivative",
    "zeta_minus_one",
    "zeta1",
    "wilton_series",
    "zeta1_taylor",
    "laurent_check",
]

EULER_GAMMA = 0.57721566490153286061
POLE_TOL = 1e-13
POLE_GUARD = 1e-8
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


@lru_cache(maxsize=None)
def _bernoulli_table(n_max: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa; B_1 = +1/2 convention is irrelevant here (only even indices are used).
    out = []
    a = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number ``B_n`` (only even ``n`` and ``n <= 1`` are nonzero)."""
    if n < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if n == 1:
        return Fraction(-1, 2)
    return _bernoulli_table(max(n, 32))[n]


# B_{2j} / (2j)! for the Euler-Maclaurin tail, j = 1..16
_EM_COEFF = tuple(float(bernoulli(2 * j) / math.factorial(2 * j)) for j in range(1, 17))
# B_{2k} / (2k (2k-1)) for Stirling's series of log Gamma
_STIRLING_LG = tuple(float(bernoulli(2 * k) / (2 * k * (2 * k - 1))) for k in range(1, 11))
# B_{2k} / (2k) for the asymptotic series of digamma
_STIRLING_PSI = tuple(float(bernoulli(2 * k) / (2 * k)) for k in range(1, 11))


def _nonpositive_integer(z: complex, tol: float) -> int | None:
    """Return ``-p`` if ``z`` is within ``tol`` of the nonpositive integer ``-p``."""
    if z.real > 0.5:
        return None
    n = round(z.real)
    if n <= 0 and abs(z - n) <= tol:
        return int(n)
    return None


def _check_gamma_pole(z: complex) -> None:
    n = _nonpositive_integer(z, POLE_TOL)
    if n is not None:
        raise PoleError(f"Gamma has a pole at z = {n}")


def log_gamma(z: complex) -> complex:
    """Continuous-branch ``log Gamma(z)``.

    The argument is shifted to ``Re z >= 15`` with the recurrence, and Stirling's
    series with ten Bernoulli corrections is applied there.  The shift is taken
    as a sum of principal logarithms, which yields the branch that is continuous
    along paths from the positive real axis.
    """
    z = complex(z)
    require_finite(z, "log_gamma argument")
    _check_gamma_pole(z)
    if z.imag == 0.0 and z.real > 0.0:
        return complex(math.lgamma(z.real))
    shift = max(0, math.ceil(15.0 - z.real))
    acc = 0j
    for k in range(shift):
        acc += cmath.log(z + k)
    w = z + shift
    w_inv = 1.0 / w
    w_inv2 = w_inv * w_inv
    series = 0j
    p = w_inv
    for c in _STIRLING_LG:
        series += c * p
        p *= w_inv2
    return (w - 0.5) * cmath.log(w) - w + _HALF_LOG_2PI + series - acc


def gamma(z: complex) -> complex:
    """Euler Gamma function.

    Real arguments go through :func:`math.gamma`; complex ones through
    ``exp(log_gamma(z))``.
    """
    z = complex(z)
    _check_gamma_pole(z)
    if z.imag == 0.0 and abs(z.real) < 170.0:
        return complex(math.gamma(z.real))
    return cmath.exp(log_gamma(z))


def rgamma(z: complex) -> complex:
    """Reciprocal Gamma function ``1/Gamma(z)``, entire (zero at the poles of Gamma)."""
    z = complex(z)
    if _nonpositive_integer(z, 0.0) is not None:
        return 0j
    if z.imag == 0.0 and abs(z.real) < 170.0:
        return complex(1.0 / math.gamma(z.real))
    return cmath.exp(-log_gamma(z))


def digamma(z: complex) -> complex:
    """Logarithmic derivative of the Gamma function, ``psi(z)``."""
    z = complex(z)
    require_finite(z, "digamma argument")
    _check_gamma_pole(z)
    shift = max(0, math.ceil(10.0 - z.real))
    acc = 0j
    for k in range(shift):
        acc += 1.0 / (z + k)
    w = z + shift
    w_inv2 = 1.0 / (w * w)
    series = 0j
    p = w_inv2
    for c in _STIRLING_PSI:
        series += c * p
        p *= w_inv2
    return cmath.log(w) - 0.5 / w - series - acc


def pochhammer(a: complex, k: int) -> complex:
    """Rising factorial ``(a)_k = a (a+1) ... (a+k-1)`` with ``(a)_0 = 1``.

    For ``k <= 64``, and whenever ``a`` is near the negative real axis, the
    product is formed directly.  Otherwise the log-gamma ratio is
    exponentiated; the exponential removes any ``2 pi i`` branch offset.
    """
    if k < 0:
        raise DomainError("pochhammer index must be nonnegative")
    a = complex(a)
    n = _nonpositive_integer(a, 0.0)
    if n is not None and -n < k:
        return 0j
    if k <= 64 or (a.real < 0 and abs(a.imag) < 1.0):
        p = 1 + 0j
        for j in range(k):
            p *= a + j
        return require_finite(p, "pochhammer")
    return require_finite(cmath.exp(log_gamma(a + k) - log_gamma(a)), "pochhammer")


def beta(x: complex, y: complex) -> complex:
    """Beta function ``Gamma(x) Gamma(y) / Gamma(x + y)``.

    Raises :class:`NearPoleError` when ``x`` or ``y`` is within ``1e-8`` of a
    nonpositive integer (use :func:`beta_laurent` there).  When only ``x + y``
    is at a pole the value is the exact zero of the reciprocal Gamma factor.
    """
    x, y = complex(x), complex(y)
    for name, v in (("x", x), ("y", y)):
        n = _nonpositive_integer(v, POLE_GUARD)
        if n is not None:
            raise NearPoleError(
                f"beta: {name} = {v} is within {POLE_GUARD:g} of the pole {n}; use beta_laurent"
            )
    s = x + y
    if _nonpositive_integer(s, 0.0) is not None:
        return 0j
    ns = _nonpositive_integer(s, POLE_GUARD)
    if ns is not None:
        # Gamma(x+y) is huge; the reciprocal route keeps relative accuracy.
        return gamma(x) * gamma(y) * rgamma(s)
    if x.imag == 0.0 and y.imag == 0.0:
        if abs(x.real) < 170 and abs(y.real) < 170 and abs(s.real) < 170:
            gx, gy, gs = math.gamma(x.real), math.gamma(y.real), math.gamma(s.real)
            val = gx * gy / gs
            if math.isfinite(val) and val != 0.0:
                return complex(val)
    return require_finite(cmath.exp(log_gamma(x) + log_gamma(y) - log_gamma(s)), "beta")


def gamma_laurent(p: int) -> LaurentPair:
    """Laurent data of ``Gamma(-p + eps)`` for a nonnegative integer ``p``.

    ``Gamma(-p + eps) = (-1)^p / (p! eps) * (1 + eps psi(p+1) + O(eps^2))``.
    """
    if p < 0:
        raise DomainError("gamma_laurent needs p >= 0")
    pole = (-1) ** p / math.factorial(p)
    return LaurentPair(complex(pole), complex(pole * digamma(p + 1)))


def beta_laurent(x0: int, y: complex) -> LaurentPair:
    """Laurent data of ``eps -> B(x0 + eps, y)`` at ``eps = 0`` for integer ``x0 <= 0``.

    Combines the pole expansion of ``Gamma(x0 + eps)`` with the first-order
    Taylor expansion ``Gamma(z + eps) = Gamma(z) (1 + eps psi(z))`` of the
    regular denominator.
    """
    if x0 > 0 or int(x0) != x0:
        raise DomainError("beta_laurent needs an integer x0 <= 0")
    y = complex(y)
    for name, v in (("y", y), ("x0 + y", x0 + y)):
        if _nonpositive_integer(v, POLE_TOL) is not None:
            raise PoleError(f"beta_laurent: {name} = {v} is a nonpositive integer")
    p = -int(x0)
    g = gamma_laurent(p)
    ratio = gamma(y) * rgamma(x0 + y)
    pole = g.pole_coeff * ratio
    finite = pole * (digamma(p + 1) - digamma(x0 + y))
    return LaurentPair(pole, finite)


# --------------------------------------------------------------------------
# Zeta functions
# --------------------------------------------------------------------------


def _check_zeta_pole(a: complex, name: str = "a") -> None:
    if abs(a - 1.0) <= POLE_GUARD:
        raise NearPoleError(
            f"zeta has a simple pole at {name} = 1 (|{name} - 1| = {abs(a - 1):.3g}); "
            "use laurent_check for the expansion there"
        )


def _em_shift(a: complex, x: float, opts: EvalOptions) -> int:
    return max(
        math.ceil(abs(a)) + 5,
        math.ceil(10 * opts.em_shift_min),
        math.ceil(abs(a.imag) / 2 - x) + 1,
        1,
    )


def _csum(terms) -> complex:
    """Compensated sum; the head terms can exceed the result by many orders for Re a < 0."""
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def _em_hurwitz(a, x: float, n: int, j_max: int):
    """Euler-Maclaurin ``zeta(a, x)`` with ``n`` direct terms and ``j_max`` corrections.

    Returns ``(value, truncation_estimate, roundoff_estimate)``.
    """
    terms = [(k + x) ** (-a) for k in range(n)]
    mag = sum(abs(t) for t in terms)
    w = n + x
    w_a = w ** (-a)
    tail = w * w_a / (a - 1) + 0.5 * w_a
    mag += abs(tail)
    w_inv2 = 1.0 / (w * w)
    poch = a  # (a)_{2j-1}
    wp = w_a / w  # w^{-a-2j+1}
    corr = 0.0
    last = 0.0
    for j in range(j_max + 1):
        t = _EM_COEFF[j] * poch * wp
        if j == j_max:
            last = abs(t)
            break
        corr += t
        mag += abs(t)
        poch *= (a + 2 * j + 1) * (a + 2 * j + 2)
        wp *= w_inv2
    terms += [tail, corr]
    return _csum(terms), last, UNIT_ROUNDOFF * mag * 4


def _em_hurwitz_deriv(a, x: float, n: int, j_max: int):
    """Term-wise ``d/da`` of :func:`_em_hurwitz`."""
    terms = [-math.log(k + x) * (k + x) ** (-a) for k in range(n)]
    mag = sum(abs(t) for t in terms)
    w = n + x
    lw = math.log(w)
    w_a = w ** (-a)
    am1 = a - 1
    tail = -lw * w * w_a / am1 - w * w_a / (am1 * am1) - 0.5 * lw * w_a
    mag += abs(tail)
    w_inv2 = 1.0 / (w * w)
    poch, dpoch = a, 1.0  # (a)_{2j-1} and its a-derivative
    wp = w_a / w
    corr = 0.0
    last = 0.0
    for j in range(j_max + 1):
        t = _EM_COEFF[j] * (dpoch - poch * lw) * wp
        if j == j_max:
            last = abs(t)
            break
        corr += t
        mag += abs(t)
        for i in (2 * j + 1, 2 * j + 2):
            dpoch = dpoch * (a + i) + poch
            poch = poch * (a + i)
        wp *= w_inv2
    terms += [tail, corr]
    return _csum(terms), last, UNIT_ROUNDOFF * mag * 4


def _as_param(a: complex):
    a = complex(a)
    require_finite(a, "zeta parameter")
    return a.real if a.imag == 0.0 else a


def _hurwitz_adaptive(a: complex, x: float, opts: EvalOptions, kernel) -> ValueWithError:
    ap = _as_param(a)
    J = opts.em_tail_order
    n = min(_em_shift(complex(a), x, opts), opts.max_terms)
    while True:
        val, trunc, rnd = kernel(ap, x, n, J)
        if trunc <= opts.target_tol * abs(val) or n >= opts.max_terms:
            break
        n = min(2 * n, opts.max_terms)
    return ValueWithError(complex(val), trunc + rnd, n + J, "euler-maclaurin")


def hurwitz_zeta(a: complex, x: float, opts: EvalOptions | None = None) -> ValueWithError:
    """Hurwitz zeta function ``zeta(a, x) = sum_k (k + x)^(-a)`` for real ``x > 0``.

    Valid for every ``a != 1`` through the Euler-Maclaurin continuation.
    """
    opts = opts or DEFAULT_OPTIONS
    a = complex(a)
    x = float(x)
    if not x > 0:
        raise DomainError(f"hurwitz_zeta needs x > 0, got x = {x}")
    _check_zeta_pole(a)
    return _hurwitz_adaptive(a, x, opts, _em_hurwitz)


def hurwitz_zeta_derivative(a: complex, x: float, opts: EvalOptions | None = None) -> ValueWithError:
    """``d/da zeta(a, x)`` by differentiating the Euler-Maclaurin formula term by term."""
    opts = opts or DEFAULT_OPTIONS
    a = complex(a)
    x = float(x)
    if not x > 0:
        raise DomainError(f"hurwitz_zeta_derivative needs x > 0, got x = {x}")
    _check_zeta_pole(a)
    out = _hurwitz_adaptive(a, x, opts, _em_hurwitz_deriv)
    return ValueWithError(out.value, out.abs_err, out.terms_used, "euler-maclaurin-derivative")


def riemann_zeta(s: complex, opts: EvalOptions | None = None) -> ValueWithError:
    """Riemann zeta function on both sides of ``Re s = 1``.

    For ``Re s < -1/2`` (and moderate ``Im s``) the functional equation
    ``zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)`` is used:
    the Euler-Maclaurin head there is a sum of terms much larger than the
    result.
    """
    s = complex(s)
    _check_zeta_pole(s, "s")
    if s.real >= -0.5 or abs(s.imag) > 50.0:
        return hurwitz_zeta(s, 1.0, opts)
    if s.imag == 0.0 and s.real == round(s.real) and round(s.real) % 2 == 0:
        return ValueWithError(0j, 0.0, 0, "trivial-zero")
    mirror = hurwitz_zeta(1.0 - s, 1.0, opts)
    log_factor = s * math.log(2.0) + (s - 1.0) * math.log(math.pi) + log_gamma(1.0 - s)
    factor = cmath.exp(log_factor) * cmath.sin(0.5 * math.pi * s)
    value = factor * mirror.value
    rel = 8 * UNIT_ROUNDOFF * (abs(log_factor) + abs(s) + 1.0)
    return ValueWithError(
        value, abs(value) * rel + abs(factor) * mirror.abs_err, mirror.terms_used, "functional-equation"
    )


def riemann_zeta_derivative(s: complex, opts: EvalOptions | None = None) -> ValueWithError:
    """Derivative ``zeta'(s)`` of the Riemann zeta function."""
    s = complex(s)
    _check_zeta_pole(s, "s")
    return hurwitz_zeta_derivative(s, 1.0, opts)


def zeta_minus_one(s: complex, opts: EvalOptions | None = None) -> ValueWithError:
    """``zeta(s) - 1`` computed as ``zeta(s, 2)``, free of cancellation for large ``s``."""
    s = complex(s)
    _check_zeta_pole(s, "s")
    return hurwitz_zeta(s, 2.0, opts)


def zeta1(a: complex, x: float, opts: EvalOptions | None = None) -> ValueWithError:
    """Auxiliary zeta ``zeta_1(a, x) = zeta(a, x) - x^(-a) = zeta(a, x + 1)`` for ``x >= 0``."""
    x = float(x)
    if not x >= 0:
        raise DomainError(f"zeta1 needs x >= 0, got x = {x}")
    return hurwitz_zeta(a, x + 1.0, opts)


def _series_tail(last: float, prev: float) -> float:
    """Geometric tail estimate from the last two term magnitudes."""
    if last == 0.0:
        return 0.0
    if prev == 0.0:
        return last
    rho = min(last / prev, 0.99)
    return last * rho / (1.0 - rho)


def wilton_series(
    a: complex,
    b: complex,
    z: complex,
    n_terms: int | None = None,
    tol: float = 1e-16,
    max_terms: int = 5000,
    opts: EvalOptions | None = None,
) -> ValueWithError:
    """Partial sum of ``sum_k (a)_k / k! * zeta(a + k, b) * z^k``, which tends to ``zeta(a, b - z)``.

    With ``n_terms=None`` summation stops once the geometric tail estimate
    falls below ``tol`` times the partial sum.
    """
    a, b, z = complex(a), complex(b), complex(z)
    if b.imag != 0.0 or not b.real > 0:
        raise DomainError("wilton_series needs real b > 0")
    if abs(z) >= abs(b):
        raise DivergenceError(f"wilton_series diverges for |z| = {abs(z):g} >= |b| = {abs(b):g}")
    _check_zeta_pole(a)
    cap = n_terms if n_terms is not None else max_terms
    total = 0j
    coef = 1 + 0j  # (a)_k / k! * z^k
    err = 0.0
    last = prev = 0.0
    mag = 0.0
    k = 0
    while k < cap:
        if coef == 0:
            last = 0.0
            k += 1
            break
        zv = hurwitz_zeta(a + k, b.real, opts)
        t = coef * zv.value
        total += t
        err += abs(coef) * zv.abs_err
        prev, last = last, abs(t)
        mag += abs(t)
        k += 1
        if n_terms is None and k > 3 and _series_tail(last, prev) <= tol * abs(total):
            break
        coef *= (a + k - 1) / k * z
    err += _series_tail(last, prev) + UNIT_ROUNDOFF * mag * 4
    return ValueWithError(total, err, k, "wilton-series")


def zeta1_taylor(
    a: complex,
    z: float,
    n_terms: int | None = None,
    tol: float = 1e-16,
    max_terms: int = 5000,
    opts: EvalOptions | None = None,
) -> ValueWithError:
    """Partial sum of ``sum_k (a)_k / k! * (zeta(a + k) - 1) * z^k`` approximating ``zeta_1(a, 1 - z)``.

    Converges on the closed interval ``0 <= z <= 1``; at ``z = 1`` it gives ``zeta(a)``.
    """
    a = complex(a)
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"zeta1_taylor needs 0 <= z <= 1, got z = {z}")
    _check_zeta_pole(a)
    cap = n_terms if n_terms is not None else max_terms
    total = 0j
    coef = 1 + 0j
    err = 0.0
    last = prev = 0.0
    mag = 0.0
    k = 0
    while k < cap:
        zv = zeta_minus_one(a + k, opts) if abs(a + k - 1) > POLE_GUARD else None
        if coef == 0 or zv is None:
            # (a)_k vanished: a is a nonpositive integer and every later term is zero.
            k += 1
            last = 0.0
            break
        t = coef * zv.value
        total += t
        err += abs(coef) * zv.abs_err
        prev, last = last, abs(t)
        mag += abs(t)
        k += 1
        if n_terms is None and k > 3 and _series_tail(last, prev) <= tol * abs(total):
            break
        coef *= (a + k - 1) / k * z
    err += _series_tail(last, prev) + UNIT_ROUNDOFF * mag * 4
    return ValueWithError(total, err, k, "zeta1-taylor")


def laurent_check(eps: float, z: float, opts: EvalOptions | None = None) -> tuple[complex, complex]:
    """Return ``(eps * zeta(1 + eps, z), zeta(1 + eps, z) - 1/eps)``.

    As ``eps -> 0`` these tend to ``1`` and ``-psi(z)``.
    """
    eps = float(eps)
    if not 0 < abs(eps) <= 0.1:
        raise DomainError("laurent_check needs 0 < |eps| <= 0.1")
    if not z > 0:
        raise DomainError("laurent_check needs z > 0")
    if abs(eps) <= POLE_GUARD:
        raise NearPoleError("laurent_check: |eps| is inside the pole guard radius")
    zv = hurwitz_zeta(1.0 + eps, z, opts).value
    return eps * zv, zv - 1.0 / eps
