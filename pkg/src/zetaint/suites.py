"""Verification suites: closed forms against independent oracles over fixed grids."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import casimir as cas
from . import closed_form_integrals as cf
from . import special_functions as sf
from .errors import ZetaIntError
from .quadrature import IntegrandKind, IntegrandSpec, quad_eval

__all__ = ["VerifyCase", "VerifySuiteResult", "SUITES", "DEFAULT_TOL", "run_suite", "richardson_check"]

QUAD_TOL = 1e-12
GRID_GT1 = (1.3, 1.7, 2.4, 3.6, 4.5)
GRID_STRIP = (0.2, 0.5, 0.8)
INTEGER_M = (2, 3, 4, 5, 6)
EPS_GRID = tuple(round(0.1 * k, 10) for k in range(10))


@dataclass
class VerifyCase:
    inputs: dict
    closed_form: complex | None
    oracle: complex | None
    abs_delta: float
    passed: bool
    error: str | None = None

    def row(self) -> dict:
        cf_, orc = self.closed_form, self.oracle
        return {
            **{k: v for k, v in self.inputs.items()},
            "closed_re": None if cf_ is None else cf_.real,
            "closed_im": None if cf_ is None else cf_.imag,
            "oracle_re": None if orc is None else orc.real,
            "oracle_im": None if orc is None else orc.imag,
            "abs_delta": self.abs_delta,
            "pass": self.passed,
            "error": self.error,
        }


@dataclass
class VerifySuiteResult:
    suite: str
    tol: float
    cases: list[VerifyCase] = field(default_factory=list)

    @property
    def pass_count(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def fail_count(self) -> int:
        return len(self.cases) - self.pass_count

    @property
    def ok(self) -> bool:
        return self.fail_count == 0


Case = tuple[dict, Callable[[], complex], Callable[[], complex]]


def _quad(kind, *params) -> complex:
    return quad_eval(IntegrandSpec(kind, tuple(params)), QUAD_TOL).value


def _val(x) -> complex:
    return complex(getattr(x, "value", x))


def _theorem1() -> Iterable[Case]:
    for a, b in itertools.product(GRID_GT1, GRID_GT1):
        yield {"a": a, "b": b}, lambda a=a, b=b: cf.integral_I(a, b), lambda a=a, b=b: _quad("II", a, b)


def _theorem3() -> Iterable[Case]:
    for a, b in itertools.product(GRID_STRIP + GRID_GT1, repeat=2):
        if (a in GRID_STRIP) != (b in GRID_STRIP):
            continue
        yield {"a": a, "b": b}, lambda a=a, b=b: cf.integral_J(a, b), lambda a=a, b=b: _quad("JJ", a, b)


def richardson_check(
    func: Callable, m: int, reference: complex, steps=cf.LIMIT_STEPS
) -> tuple[complex, complex, complex, float]:
    """Symmetric limits of ``func(m +- h, m +- h)`` at two offsets.

    Returns ``(coarse, fine, extrapolated, observed_order)``; the order is
    ``log(|coarse - reference| / |fine - reference|) / log(h1 / h2)`` measured
    against the integer-order ``reference`` value.
    """
    h1, h2 = steps
    coarse = cf.symmetric_limit(func, (m, m), h1).value
    fine = cf.symmetric_limit(func, (m, m), h2).value
    r = (h1 / h2) ** 2
    extrap = (r * fine - coarse) / (r - 1)
    order = math.log(abs(coarse - reference) / abs(fine - reference)) / math.log(h1 / h2)
    return coarse, fine, extrap, order


def _integer_suite(integer_func, general_func, kind) -> Iterable[Case]:
    for m in INTEGER_M:
        yield {"m": m, "oracle": "quadrature"}, lambda m=m: integer_func(m), lambda m=m: _quad(kind, m, m)
    for m in INTEGER_M:
        yield (
            {"m": m, "oracle": "richardson"},
            lambda m=m: integer_func(m),
            lambda m=m: richardson_check(general_func, m, integer_func(m).value)[2],
        )


def _theorem2():
    return _integer_suite(cf.integral_I_integer, cf.integral_I, "II")


def _theorem4():
    return _integer_suite(cf.integral_J_integer, cf.integral_J, "JJ")


def _appendix() -> Iterable[Case]:
    for m in INTEGER_M:
        yield (
            {"m": m},
            lambda m=m: cf.appendix_sum_S(m),
            lambda m=m: math.gamma(2 * m - 1) * sf.riemann_zeta(2 * m - 1).value,
        )


def _wilton() -> Iterable[Case]:
    for a in (1.5, 2.3 + 1.5j, 3.0, 4.2 - 0.7j, 5.0):
        for b in (1.0, 2.0):
            for frac in (-0.9, -0.5, 0.3, 0.6, 0.9):
                z = frac * b
                yield (
                    {"eq": "wilton", "a": complex(a), "b": b, "z": z},
                    lambda a=a, b=b, z=z: sf.wilton_series(a, b, z),
                    lambda a=a, b=b, z=z: sf.hurwitz_zeta(a, b - z),
                )
        for z in (0.0, 0.25, 0.5, 0.75, 1.0):
            yield (
                {"eq": "taylor", "a": complex(a), "z": z},
                lambda a=a, z=z: sf.zeta1_taylor(a, z),
                lambda a=a, z=z: sf.zeta1(a, 1.0 - z),
            )


def _casimir() -> Iterable[Case]:
    for e in EPS_GRID:
        yield {"eps": e, "check": "c1"}, lambda e=e: cas.c1_closed(e), lambda e=e: cas.c1_assembled(e)
    for e in EPS_GRID:
        yield (
            {"eps": e, "check": "K-quadrature"},
            lambda e=e: cas.K_closed(e),
            lambda e=e: _quad(IntegrandKind.K, 2.0 - e),
        )


def _companions() -> Iterable[Case]:
    for a, b in ((0.5, 2.0), (0.0, 3.0), (0.9, 1.5), (-0.5, 2.5)):
        yield (
            {"integral": "andersson", "a": a, "b": b},
            lambda a=a, b=b: cf.andersson_integral(a, b),
            lambda a=a, b=b: _quad("POWER_ZETA1", a, b),
        )
    for a, b in ((0.5, 0.5), (0.3, 0.7), (0.7, 0.2)):
        yield (
            {"integral": "complementary_power", "a": a, "b": b},
            lambda a=a, b=b: cf.complementary_power_integral(a, b),
            lambda a=a, b=b: _quad("COMPLEMENTARY_POWER", a, b),
        )
    for a, b in ((0.4, 0.4), (0.3, 0.5), (-0.5, 0.2)):
        yield (
            {"integral": "mikolas", "a": a, "b": b},
            lambda a=a, b=b: cf.mikolas_integral(a, b),
            lambda a=a, b=b: _quad("MIKOLAS", a, b),
        )
    for a, b in ((0.4, 0.3), (-1.0, -1.0), (0.5, -0.5)):
        yield (
            {"integral": "complementary_hurwitz", "a": a, "b": b},
            lambda a=a, b=b: cf.complementary_hurwitz_integral(a, b),
            lambda a=a, b=b: _quad("HURWITZ_PRODUCT", a, b),
        )
    for s in (2.0, 2.5, 3.0):
        yield {"integral": "moment", "s": s}, lambda s=s: cf.moment_integral(s), lambda s=s: _quad("POWER_ZETA1", 0.0, s)


def _meanvalue() -> Iterable[Case]:
    for sigma, t in itertools.product((1.3, 2.2), (0.5, 2.0, 7.0)):
        yield (
            {"sigma": sigma, "t": t},
            lambda s=sigma, t=t: cf.integral_I(complex(s, t), complex(s, -t)),
            lambda s=sigma, t=t: _quad("MEAN_SQUARE", s, t),
        )


SUITES: dict[str, Callable[[], Iterable[Case]]] = {
    "theorem1": _theorem1,
    "theorem2": _theorem2,
    "theorem3": _theorem3,
    "theorem4": _theorem4,
    "appendix": _appendix,
    "wilton": _wilton,
    "casimir": _casimir,
    "companions": _companions,
    "meanvalue": _meanvalue,
}

DEFAULT_TOL = {
    "theorem1": 1e-8,
    "theorem2": 1e-8,
    "theorem3": 1e-8,
    "theorem4": 1e-8,
    "appendix": 1e-9,
    "wilton": 1e-9,
    "casimir": 1e-9,
    "companions": 1e-7,
    "meanvalue": 1e-8,
}


def run_suite(name: str, tol: float | None = None) -> VerifySuiteResult:
    """Run a registered suite; a case passes iff ``|closed - oracle| <= tol (1 + |oracle|)``.

    Exceptions inside a case are recorded on that case and do not stop the suite.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    tol = DEFAULT_TOL[name] if tol is None else tol
    result = VerifySuiteResult(name, tol)
    for inputs, closed, oracle in SUITES[name]():
        try:
            c = _val(closed())
            o = _val(oracle())
        except (ZetaIntError, ArithmeticError, ValueError) as exc:
            result.cases.append(VerifyCase(inputs, None, None, math.inf, False, f"{type(exc).__name__}: {exc}"))
            continue
        delta = abs(c - o)
        result.cases.append(VerifyCase(inputs, c, o, delta, delta <= tol * (1 + abs(o))))
    return result
