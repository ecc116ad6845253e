"""Command-line front end: ``hpdistort {eval,solve-modular,verify,table}``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import __version__
from .distortion import MAX_ITER, MODULAR_TOL, MU_INV_TOL, m_fn, mu, mu_inv, phi, solve_modular
from .elliptic import Modulus, ellint_E, ellint_K
from .errors import ConvergenceError, DomainError
from .special import DEFAULT_MAX_TERMS, DEFAULT_TOL, HypergeomParams, hyp2f1, ramanujan_R
from .sweeps import SUITES, SweepSpec, run_suite
from .verifier import FN_SIGNATURES, NamedFn, eval_named

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONCONV = 0, 1, 2, 3

PRECISION_RANGE = (1e-14, 1e-4)
SCALAR_FNS = ("K", "E", "mu", "mu-inv", "phi", "m", "R", "hyp2f1")
ALL_FNS = SCALAR_FNS + tuple(FN_SIGNATURES)

# CLI flag -> parameter name used by the named functions
_PARAM_FLAGS = ("a", "b", "c", "r", "t", "x", "K", "p", "y", "lam", "tau", "xi", "rho")


class UsageError(Exception):
    pass


def fmt(v: float) -> str:
    """Shortest of the 15, 16, 17 significant digit forms that round-trips."""
    if not math.isfinite(v):
        return repr(float(v))
    for digits in (15, 16, 17):
        s = f"{v:.{digits}g}"
        if float(s) == v:
            return s
    return repr(v)


def _need(params: dict, fn: str, *names: str) -> list[float]:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError(f"--fn {fn} needs {', '.join('--' + n for n in missing)}")
    return [params[n] for n in names]


def evaluate(fn: str, params: dict, precision: float | None = None, max_iter: int | None = None):
    """Return (value, err_estimate) for one selector; err_estimate may be nan."""
    it = max_iter or MAX_ITER
    if fn == "K":
        a, r = _need(params, fn, "a", "r")
        res = ellint_K(a, Modulus.from_r(r), precision or DEFAULT_TOL)
        return res.value, res.abs_err_estimate
    if fn == "E":
        a, r = _need(params, fn, "a", "r")
        res = ellint_E(a, Modulus.from_r(r), precision or DEFAULT_TOL)
        return res.value, res.abs_err_estimate
    if fn == "mu":
        a, r = _need(params, fn, "a", "r")
        m = Modulus.from_r(r)
        kr, kc = ellint_K(a, m), ellint_K(a, m.swap())
        v = mu(a, m)
        return v, v * (kr.abs_err_estimate / kr.value + kc.abs_err_estimate / kc.value)
    if fn == "mu-inv":
        a, y = _need(params, fn, "a", "y")
        tol = precision or MU_INV_TOL
        return mu_inv(a, y, tol, it).r, tol
    if fn == "phi":
        a, k, r = _need(params, fn, "a", "K", "r")
        tol = precision or MU_INV_TOL
        s = phi(a, k, r, tol, it)
        return s.r, tol * s.r
    if fn == "m":
        a, r = _need(params, fn, "a", "r")
        m = Modulus.from_r(r)
        kr, kc = ellint_K(a, m), ellint_K(a, m.swap())
        v = m_fn(a, m)
        return v, v * (kr.abs_err_estimate / kr.value + kc.abs_err_estimate / kc.value)
    if fn == "R":
        (a,) = _need(params, fn, "a")
        v = ramanujan_R(a)
        return v, 4 * 2.0**-52 * abs(v)
    if fn == "hyp2f1":
        a, b, c, x = _need(params, fn, "a", "b", "c", "x")
        res = hyp2f1(HypergeomParams(a, b, c, x), precision or DEFAULT_TOL, max_iter or DEFAULT_MAX_TERMS)
        if not res.converged:
            raise ConvergenceError(f"2F1 tail estimate {res.abs_err_estimate:.3e} above tolerance")
        return res.value, res.abs_err_estimate
    if fn in FN_SIGNATURES:
        free, required = FN_SIGNATURES[fn]
        (v,) = _need(params, fn, free)
        bound = dict(zip(required, _need(params, fn, *required)))
        return eval_named(NamedFn(fn, bound), v), math.nan
    raise UsageError(f"unknown function {fn!r}; choose from {', '.join(ALL_FNS)}")


def parse_range(text: str) -> list[float]:
    """``start:stop:count`` with both endpoints included."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range {text!r} must look like start:stop:count")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise UsageError(f"range {text!r} has a non-numeric field") from None
    if count < 1 or not (math.isfinite(start) and math.isfinite(stop)):
        raise UsageError(f"range {text!r} needs finite endpoints and count >= 1")
    if count == 1:
        if start != stop:
            raise UsageError(f"range {text!r} with count 1 needs start == stop")
        return [start]
    step = (stop - start) / (count - 1)
    vals = [float(f"{start + i * step:.12g}") for i in range(count - 1)] + [stop]
    return vals


def _bindings(ns: argparse.Namespace) -> dict:
    return {k: getattr(ns, k) for k in _PARAM_FLAGS if getattr(ns, k, None) is not None}


def _check_precision(ns) -> None:
    p = getattr(ns, "precision", None)
    if p is not None and not PRECISION_RANGE[0] <= p <= PRECISION_RANGE[1]:
        raise UsageError(f"--precision {p} outside [{PRECISION_RANGE[0]}, {PRECISION_RANGE[1]}]")
    m = getattr(ns, "max_iter", None)
    if m is not None and m < 1:
        raise UsageError("--max-iter must be a positive integer")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------


def cmd_eval(ns) -> int:
    params = _bindings(ns)
    value, err = evaluate(ns.fn, params, ns.precision, ns.max_iter)
    if ns.format == "json":
        text = json.dumps({"fn": ns.fn, "params": params, "value": value, "err_estimate": err}) + "\n"
    elif ns.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["fn", "value", "err_estimate"])
        w.writerow([ns.fn, fmt(value), fmt(err)])
        text = buf.getvalue()
    else:
        text = f"{fmt(value)}\nerr_estimate {fmt(err)}\n"
    _emit(text, ns.out)
    return EXIT_OK


def cmd_solve_modular(ns) -> int:
    if ns.a is None or ns.degree is None or ns.r is None:
        raise UsageError("solve-modular needs --a, --degree and --r")
    tol = ns.precision or MODULAR_TOL
    sol = solve_modular(ns.a, ns.degree, Modulus.from_r(ns.r), tol, ns.max_iter or MAX_ITER)
    rec = {"s": sol.s.r, "s_comp": sol.s.r_comp, "residual": sol.residual, "iterations": sol.iterations}
    if ns.format == "json":
        text = json.dumps(rec) + "\n"
    elif ns.format == "csv":
        text = "s,s_comp,residual,iterations\n" + ",".join(
            [fmt(sol.s.r), fmt(sol.s.r_comp), fmt(sol.residual), str(sol.iterations)]
        ) + "\n"
    else:
        text = (
            f"s {fmt(sol.s.r)}\ns_comp {fmt(sol.s.r_comp)}\n"
            f"residual {fmt(sol.residual)}\niterations {sol.iterations}\n"
        )
    _emit(text, ns.out)
    return EXIT_OK


def cmd_verify(ns) -> int:
    suites = list(SUITES) if ns.suite == "all" else [ns.suite]
    kw = {"workers": ns.workers}
    if ns.falsify_epsilon is not None:
        kw["falsify_epsilon"] = ns.falsify_epsilon or None
    if ns.precision is not None:
        kw["tolerance"] = ns.precision
    specs = [SweepSpec.default(s, ns.grid_density, **kw) for s in suites]
    reports = []
    for spec in specs:
        rep = run_suite(spec)
        if ns.no_timing:
            rep.elapsed_ms = None
        reports.append(rep)
        print(rep.summary(), file=sys.stderr if ns.format == "json" and not ns.out else sys.stdout)
    if ns.format == "json" or ns.out:
        if len(reports) == 1:
            doc = reports[0].to_dict()
        else:
            doc = {"suites": [r.to_dict() for r in reports], "passed": all(r.passed for r in reports)}
        text = json.dumps(doc, indent=1) + "\n"
        if ns.out:
            _emit(text, ns.out)
        else:
            sys.stdout.write(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_table(ns) -> int:
    ranges = {k: getattr(ns, f"{k}_range") for k in _PARAM_FLAGS if getattr(ns, f"{k}_range", None)}
    if len(ranges) != 1:
        raise UsageError("table needs exactly one --<param>-range (e.g. --r-range 0.1:0.9:9)")
    (name, text), = ranges.items()
    values = parse_range(text)
    base = _bindings(ns)
    if name in base:
        raise UsageError(f"--{name} and --{name}-range are mutually exclusive")
    rows = []
    for v in values:
        val, err = evaluate(ns.fn, {**base, name: v}, ns.precision, ns.max_iter)
        rows.append((v, val, err))
    if ns.format == "json":
        out = json.dumps(
            {"fn": ns.fn, "params": base, "columns": [name, "value", "err_estimate"], "rows": [list(r) for r in rows]}
        ) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([name, "value", "err_estimate"])
        for r in rows:
            w.writerow([fmt(x) for x in r])
        out = buf.getvalue()
        if ns.format == "text":
            out = out.replace(",", "\t")
    _emit(out, ns.out)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def _add_params(p: argparse.ArgumentParser, ranges: bool = False) -> None:
    g = p.add_argument_group("parameters")
    g.add_argument("--a", type=float, help="signature parameter in (0, 1/2] (or 2F1 'a')")
    g.add_argument("--b", type=float, help="2F1 'b'")
    g.add_argument("--c", type=float, help="2F1 'c'")
    g.add_argument("--r", type=float, help="modulus in (0, 1)")
    g.add_argument("--t", type=float, help="second modulus")
    g.add_argument("--x", type=float, help="2F1 argument, or the smaller modulus of f7/f8")
    g.add_argument("--K", type=float, help="distortion coefficient K > 0")
    g.add_argument("--p", type=float, help="power p > 0")
    g.add_argument("--y", type=float, help="target value for mu-inv")
    g.add_argument("--lam", type=float, help="lambda for g1")
    g.add_argument("--tau", type=float, help="tau for g2")
    g.add_argument("--xi", type=float, help="xi for g6")
    g.add_argument("--rho", type=float, help="rho for g7")
    if ranges:
        rg = p.add_argument_group("swept parameter (start:stop:count, inclusive)")
        for k in _PARAM_FLAGS:
            rg.add_argument(f"--{k}-range", dest=f"{k}_range", metavar="START:STOP:N")


def _add_common(p: argparse.ArgumentParser, formats=("text", "json", "csv"), default="text") -> None:
    p.add_argument("--precision", type=float, help="tolerance in [1e-14, 1e-4]")
    p.add_argument("--max-iter", type=int, dest="max_iter", help="override solver iteration caps")
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", help="write output to this file instead of stdout")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 already; keep the prefix short
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hpdistort", description="Generalized elliptic integrals and distortion functions.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one function at one point")
    p.add_argument("--fn", required=True, choices=ALL_FNS)
    _add_params(p)
    _add_common(p)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("solve-modular", help="solve mu_a(s) = p mu_a(r) for s")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--degree", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    _add_common(p)
    p.set_defaults(run=cmd_solve_modular)

    p = sub.add_parser("verify", help="run a verification suite and write a JSON report")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--grid-density", type=int, dest="grid_density", help="points per r/t axis")
    p.add_argument("--falsify-epsilon", type=float, dest="falsify_epsilon",
                   help="exponent perturbation for sharpness probes (0 disables)")
    p.add_argument("--workers", type=int, default=1, help="process-pool size for the sweep")
    p.add_argument("--no-timing", action="store_true", dest="no_timing",
                   help="write elapsed_ms as null so reports are byte-identical across runs")
    _add_common(p, formats=("text", "json"), default="text")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("table", help="tabulate a function over one swept parameter")
    p.add_argument("--fn", required=True, choices=ALL_FNS)
    _add_params(p, ranges=True)
    _add_common(p, default="csv")
    p.set_defaults(run=cmd_table)
    return ap


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        _check_precision(ns)
        if getattr(ns, "grid_density", None) is not None and ns.grid_density < 1:
            raise UsageError("--grid-density must be a positive integer")
        if getattr(ns, "workers", 1) < 1:
            raise UsageError("--workers must be a positive integer")
        return ns.run(ns)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, ArithmeticError) as exc:
        print(f"error: no convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONV
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


__all__ = ["build_parser", "evaluate", "fmt", "main", "parse_range"]
