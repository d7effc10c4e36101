"""Command-line front end: ``zetaint {eval,verify,sweep,casimir}``.

Machine-readable output goes to stdout (or ``--output``); tables and
diagnostics go to stderr.  Exit codes: 0 success, 1 verification failure,
2 domain or usage error, 3 near-singular point (use the integer-limit target
or ``--force-limit``).
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import Any, Callable

from . import casimir as cas
from . import closed_form_integrals as cf
from . import special_functions as sf
from .errors import DidNotConverge, DomainError, NearSingularError, ZetaIntError
from .quadrature import IntegrandKind, IntegrandSpec, quad_eval
from .suites import SUITES, run_suite
from .values import UNIT_ROUNDOFF, EvalOptions, ValueWithError

EXIT_OK, EXIT_VERIFY_FAIL, EXIT_DOMAIN, EXIT_NEAR_SINGULAR = 0, 1, 2, 3

_COMPLEX_RE = re.compile(
    r"""^\s*(?:
        (?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
        (?:(?P<im>[+-](?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)i)?
      | (?P<pure>[+-]?(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)i
    )\s*$""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex:
    """Parse ``1.5``, ``1.5+2i``, ``-3e-2-0.5i``, ``2i`` or ``-i``."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse complex number {text!r} (expected e.g. 1.5+2i)")

    def part(s):
        if s in ("", "+"):
            return 1.0
        if s == "-":
            return -1.0
        return float(s)

    if m.group("pure") is not None:
        return complex(0.0, part(m.group("pure")))
    im = m.group("im")
    return complex(float(m.group("re")), 0.0 if im is None else part(im))


def _parse_int(text: str) -> int:
    try:
        v = float(text)
    except ValueError:
        raise DomainError(f"expected an integer, got {text!r}") from None
    if v != int(v):
        raise DomainError(f"expected an integer, got {text!r}")
    return int(v)


def _parse_float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"expected a real number, got {text!r}") from None


_PARSERS = {"complex": parse_complex, "float": _parse_float, "int": _parse_int}


@dataclass(frozen=True)
class Target:
    func: Callable[..., Any]
    params: tuple[tuple[str, str], ...]
    optional: tuple[str, ...] = ()
    force_limit: bool = False
    uses_opts: bool = False
    uses_policy: bool = False


def _quad_target(kind: IntegrandKind) -> Callable:
    def run(*params, tol=1e-12):
        r = quad_eval(IntegrandSpec(kind, params), tol)
        return ValueWithError(r.value, r.abs_err, r.evaluations, "tanh-sinh")
    return run


_AB = (("a", "complex"), ("b", "complex"))
TARGETS: dict[str, Target] = {
    "log_gamma": Target(sf.log_gamma, (("z", "complex"),)),
    "gamma": Target(sf.gamma, (("z", "complex"),)),
    "digamma": Target(sf.digamma, (("z", "complex"),)),
    "pochhammer": Target(sf.pochhammer, (("a", "complex"), ("k", "int"))),
    "beta": Target(sf.beta, (("x", "complex"), ("y", "complex"))),
    "riemann_zeta": Target(sf.riemann_zeta, (("s", "complex"),), uses_opts=True),
    "riemann_zeta_derivative": Target(sf.riemann_zeta_derivative, (("s", "complex"),), uses_opts=True),
    "hurwitz_zeta": Target(sf.hurwitz_zeta, (("a", "complex"), ("x", "float")), uses_opts=True),
    "zeta1": Target(sf.zeta1, (("a", "complex"), ("x", "float")), uses_opts=True),
    "wilton_series": Target(
        sf.wilton_series, (("a", "complex"), ("b", "complex"), ("z", "complex"), ("n_terms", "int")), ("n_terms",)
    ),
    "zeta1_taylor": Target(sf.zeta1_taylor, (("a", "complex"), ("z", "float"), ("n_terms", "int")), ("n_terms",)),
    "integral_I": Target(cf.integral_I, _AB, force_limit=True, uses_policy=True),
    "integral_I_integer": Target(cf.integral_I_integer, (("m", "int"),), uses_policy=True),
    "integral_J": Target(cf.integral_J, _AB, force_limit=True, uses_policy=True),
    "integral_J_integer": Target(cf.integral_J_integer, (("m", "int"),), uses_policy=True),
    "moment_integral": Target(cf.moment_integral, (("s", "complex"),)),
    "andersson_integral": Target(cf.andersson_integral, _AB, uses_policy=True),
    "complementary_power_integral": Target(cf.complementary_power_integral, _AB, uses_policy=True),
    "mikolas_integral": Target(cf.mikolas_integral, _AB),
    "complementary_hurwitz_integral": Target(cf.complementary_hurwitz_integral, _AB),
    "appendix_sum_S": Target(cf.appendix_sum_S, (("m", "int"),), uses_policy=True),
    "upsilon_term": Target(cf.upsilon_term, (("n", "int"), ("m", "int"))),
    "tail_integral": Target(cas.tail_integral, (("eps", "float"),)),
    "K_closed": Target(cas.K_closed, (("eps", "float"),)),
    "K_assembled": Target(cas.K_assembled, (("eps", "float"),)),
    "M_quadrature": Target(cas.M_quadrature, (("eps", "float"),)),
    "c0": Target(cas.c0, (("eps", "float"),)),
    "c1_closed": Target(cas.c1_closed, (("eps", "float"),)),
    "c1_assembled": Target(cas.c1_assembled, (("eps", "float"),)),
    "amplitude_DD": Target(cas.amplitude_DD, (("n", "int"), ("eps", "float"))),
}
for _kind in IntegrandKind:
    _names = {"M": ("alpha",), "K": ("alpha",), "MEAN_SQUARE": ("sigma", "t")}.get(_kind.value, ("a", "b"))
    TARGETS[f"quad_{_kind.value}"] = Target(
        _quad_target(_kind), tuple((n, "float" if _kind.value in ("M", "K", "MEAN_SQUARE") else "complex") for n in _names)
    )


def _as_value(result: Any) -> ValueWithError:
    if isinstance(result, ValueWithError):
        return result
    v = complex(result)
    return ValueWithError(v, 4 * UNIT_ROUNDOFF * abs(v), 0, "closed-form")


def _call_target(name: str, target: Target, args: dict, tol: float | None, force_limit: bool) -> ValueWithError:
    kwargs = {}
    for pname, ptype in target.params:
        if pname in args:
            kwargs[pname] = args[pname]
        elif pname not in target.optional:
            raise DomainError(f"{name}: missing required parameter --{pname}")
    if force_limit:
        if not target.force_limit:
            raise DomainError(f"{name} does not support --force-limit")
        kwargs["force_limit"] = True
    if tol is not None:
        if target.uses_opts:
            kwargs["opts"] = EvalOptions(target_tol=tol)
        if target.uses_policy:
            kwargs["policy"] = cf.SeriesPolicy(tol=tol)
    return _as_value(target.func(**kwargs))


def _value_record(v: ValueWithError) -> dict:
    return {
        "value_re": v.value.real,
        "value_im": v.value.imag,
        "abs_err": v.abs_err,
        "terms_used": v.terms_used,
        "method": v.method,
    }


# --------------------------------------------------------------------------
# serialization (17 significant digits, deterministic)
# --------------------------------------------------------------------------


def format_float(x: float) -> str:
    if not math.isfinite(x):
        return "inf" if x > 0 else "-inf" if x < 0 else "nan"
    return format(x, ".17g")


def _json(obj: Any) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return json.dumps(format_float(obj))
        text = format_float(obj)
        return text if any(c in text for c in ".en") else text + ".0"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(obj: Any) -> str:
    return _json(obj) + "\n"


def dumps_csv(rows: list[dict]) -> str:
    columns: list[str] = []
    for row in rows:
        for k in row:
            if k not in columns:
                columns.append(k)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        out = []
        for c in columns:
            v = row.get(c)
            if v is None:
                out.append("")
            elif isinstance(v, bool):
                out.append("true" if v else "false")
            elif isinstance(v, float):
                out.append(format_float(v))
            else:
                out.append(str(v))
        w.writerow(out)
    return buf.getvalue()


def _csv_rename(rec: dict) -> dict:
    ren = {"value_re": "re", "value_im": "im"}
    return {ren.get(k, k): v for k, v in rec.items()}


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# verbs
# --------------------------------------------------------------------------


def _parse_params(name: str, target: Target, extra: list[str], ranged: bool) -> dict:
    known = {p: t for p, t in target.params}
    out: dict = {}
    i = 0
    while i < len(extra):
        tok = extra[i]
        if not tok.startswith("--"):
            raise DomainError(f"unexpected argument {tok!r}")
        key, _, val = tok[2:].partition("=")
        if not val:
            if i + 1 >= len(extra):
                raise DomainError(f"--{key} needs a value")
            val = extra[i + 1]
            i += 1
        i += 1
        if key not in known:
            raise DomainError(f"{name} has no parameter --{key}; expected {', '.join('--' + p for p in known)}")
        parse = _PARSERS[known[key]]
        if ranged and val.count(":") == 2:
            lo, hi, count = val.split(":")
            n = _parse_int(count)
            if n < 1:
                raise DomainError(f"--{key}: count must be >= 1")
            lo_v, hi_v = parse(lo), parse(hi)
            if n == 1:
                out[key] = [lo_v]
            else:
                out[key] = [lo_v + (hi_v - lo_v) * k / (n - 1) for k in range(n)]
            if known[key] == "int":
                out[key] = [int(round(v)) for v in out[key]]
        else:
            out[key] = [parse(val)] if ranged else parse(val)
    return out


def run_eval(args, extra) -> int:
    target = TARGETS[args.target]
    params = _parse_params(args.target, target, extra, ranged=False)
    v = _call_target(args.target, target, params, args.tol, args.force_limit)
    rec = _value_record(v)
    _emit(dumps_csv([_csv_rename(rec)]) if args.format == "csv" else dumps_json(rec), args.output)
    return EXIT_OK


def _param_record(params: dict) -> dict:
    out = {}
    for k, v in params.items():
        if isinstance(v, complex):
            out[f"{k}_re"], out[f"{k}_im"] = v.real, v.imag
        else:
            out[k] = v
    return out


def run_sweep(args, extra) -> int:
    target = TARGETS[args.target]
    grid = _parse_params(args.target, target, extra, ranged=True)
    swept = [k for k, v in grid.items() if len(v) > 1]
    if len(swept) > 2:
        raise DomainError("sweep supports at most two swept parameters")
    names = list(grid)
    rows = []
    for combo in itertools.product(*(grid[n] for n in names)):
        params = dict(zip(names, combo))
        row = _param_record(params)
        try:
            v = _call_target(args.target, target, params, args.tol, args.force_limit)
            row.update(_csv_rename(_value_record(v)))
            row["error"] = None
        except (ZetaIntError, ValueError, ArithmeticError) as exc:
            row.update({"re": None, "im": None, "abs_err": None, "terms_used": None, "method": None})
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    _emit(dumps_csv(rows) if args.format == "csv" else dumps_json(rows), args.output)
    return EXIT_OK


def run_verify(args, extra) -> int:
    if extra:
        raise DomainError(f"verify takes no parameters, got {extra}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rows = []
    all_ok = True
    for name in names:
        res = run_suite(name, args.tol)
        all_ok &= res.ok
        print(f"[{'PASS' if res.ok else 'FAIL'}] {name}: {res.pass_count} passed, {res.fail_count} failed "
              f"(tol {res.tol:g})", file=sys.stderr)
        for c in res.cases:
            if not c.passed:
                print(f"    failed {c.inputs}: delta={c.abs_delta:.3g} {c.error or ''}", file=sys.stderr)
            rows.append({"suite": name, **_param_record(c.row())})
    _emit(dumps_csv(rows) if args.format == "csv" else dumps_json(rows), args.output)
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


def run_casimir(args, extra) -> int:
    if extra:
        raise DomainError(f"casimir takes only --eps and --n, got {extra}")
    rep = cas.casimir_report(args.eps, args.n).to_dict()
    if args.format == "csv":
        amp = rep.pop("amplitude_n")
        if amp is not None:
            rep.update(amp)
        text = dumps_csv([rep])
    else:
        text = dumps_json(rep)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetaint", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="tolerance (suite tolerance for verify)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", default=None, help="write to this path instead of stdout")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one operation")
    p.add_argument("target", choices=sorted(TARGETS))
    p.add_argument("--force-limit", action="store_true", help="numerical limit at removable singularities")
    p.set_defaults(run=run_eval)

    p = sub.add_parser("sweep", parents=[common], help="evaluate on a grid, --param lo:hi:count")
    p.add_argument("target", choices=sorted(TARGETS))
    p.add_argument("--force-limit", action="store_true")
    p.set_defaults(run=run_sweep)

    p = sub.add_parser("verify", parents=[common], help="run an oracle verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.set_defaults(run=run_verify)

    p = sub.add_parser("casimir", parents=[common], help="Casimir coefficient report")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--n", type=int, default=None, help="field components for the amplitude")
    p.set_defaults(run=run_casimir)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if args.verb in ("verify", "casimir") and extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    if args.tol is not None and not args.tol > 0:
        parser.error("--tol must be positive")
    try:
        return args.run(args, extra)
    except NearSingularError as exc:
        print(f"zetaint: near-singular point: {exc}", file=sys.stderr)
        return EXIT_NEAR_SINGULAR
    except DidNotConverge as exc:
        print(f"zetaint: did not converge: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, ValueError) as exc:
        print(f"zetaint: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ZetaIntError as exc:
        print(f"zetaint: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
