"""Named auxiliary functions and the inequality/monotonicity checkers.

Every ratio inequality is compared in log form, e.g.
``log phi(r) + log phi(t) - log phi(rt) < alpha (1 - 1/K)``, so that the
margin (right side minus left side) is an absolute quantity that can be
held against a fixed noise guard.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from . import __version__, classical
from .distortion import Image, kd_at, m_fn, mu, phi_image
from .elliptic import E, K, Modulus, e_minus_comp2_k, kd_combo
from .errors import DistortionError, DomainError
from .special import as_signature

MARGIN_GUARD = 1e-11
EQUALITY_TOL = 1e-11
CLASSICAL_TOL = 1e-11
SHARPNESS_K = 1.0 + 1e-6
SHARPNESS_TOL = 1e-4
FALSIFY_EPSILON = 1e-3
FALSIFY_KS = (1.0 + 1e-6, 1.0 + 1e-5)

# name -> (free variable, required parameters)
FN_SIGNATURES: dict[str, tuple[str, tuple[str, ...]]] = {
    "f1": ("r", ("a",)),
    "f2": ("r", ("a",)),
    "f3": ("r", ("a",)),
    "f4": ("r", ("a", "p")),
    "f5": ("r", ("a", "p")),
    "f6": ("r", ("a", "t")),
    "f7": ("K", ("a", "x", "r")),
    "f8": ("K", ("a", "x", "r")),
    "f9": ("r", ("a",)),
    "f10": ("r", ("a",)),
    "f11": ("r", ("a",)),
    "g1": ("K", ("a", "r", "t", "lam")),
    "g2": ("K", ("a", "r", "t", "tau")),
    "g3": ("K", ("a", "r", "t")),
    "g6": ("K", ("a", "r", "p", "xi")),
    "g7": ("K", ("a", "r", "p", "rho")),
    "g8": ("K", ("a", "r", "p")),
}
_POSITIVE = {"f7", "f8", "g1", "g2", "g6", "g7"}
_DIFFERENTIABLE = {"g3", "g8"}
_UNIT_PARAMS = {"r", "t", "x"}


@dataclass(frozen=True)
class NamedFn:
    """One of the auxiliary functions, with its fixed parameters bound."""

    name: str
    params: Mapping[str, float]

    def __post_init__(self):
        if self.name not in FN_SIGNATURES:
            raise DomainError(f"unknown function {self.name!r}; known: {sorted(FN_SIGNATURES)}")
        _, required = FN_SIGNATURES[self.name]
        given = set(self.params)
        missing, extra = set(required) - given, given - set(required)
        if missing or extra:
            raise DomainError(
                f"{self.name} takes parameters {list(required)}; "
                f"missing {sorted(missing)}, unexpected {sorted(extra)}"
            )
        params = {k: float(v) for k, v in self.params.items()}
        as_signature(params["a"])
        for k in _UNIT_PARAMS & given:
            if not 0.0 < params[k] < 1.0:
                raise DomainError(f"{self.name}: parameter {k}={params[k]!r} outside (0, 1)")
        if "p" in params and not params["p"] > 0:
            raise DomainError(f"{self.name}: p={params['p']!r} must be positive")
        if self.name in ("f7", "f8") and not params["x"] < params["r"]:
            raise DomainError(f"{self.name} needs x < r, got x={params['x']}, r={params['r']}")
        object.__setattr__(self, "params", params)

    @property
    def free_var(self) -> str:
        return FN_SIGNATURES[self.name][0]

    def __call__(self, v: float) -> float:
        return eval_named(self, v)


# -- cached primitives ---------------------------------------------------------


def _unit(v: float) -> Modulus:
    return Modulus.from_r(v)


def _power_modulus(r: float, p: float) -> Modulus:
    """r**p with its complement computed without cancellation."""
    m = _unit(r)
    if p == 1.0:
        return m
    log_r = 0.5 * math.log1p(-m.r_comp**2) if r > 0.5 else math.log(r)
    return Modulus(math.exp(p * log_r), math.sqrt(-math.expm1(2.0 * p * log_r)))


def _product_modulus(r: float, t: float) -> Modulus:
    """r*t with complement sqrt(r'^2 + r^2 t'^2)."""
    mr, mt = _unit(r), _unit(t)
    return Modulus(r * t, math.sqrt(mr.r_comp**2 + (r * mt.r_comp) ** 2))


@lru_cache(maxsize=1 << 16)
def _mu(a: float, r: float, rc: float) -> float:
    return mu(a, Modulus(r, rc))


@lru_cache(maxsize=1 << 16)
def _m(a: float, r: float, rc: float) -> float:
    return m_fn(a, Modulus(r, rc))


@lru_cache(maxsize=1 << 17)
def _image(a: float, k: float, r: float, rc: float) -> Image:
    return phi_image(a, k, Modulus(r, rc))


def _img(a: float, k: float, m: Modulus) -> Image:
    return _image(a, k, m.r, m.r_comp)


def _mu_m(a: float, m: Modulus) -> float:
    return _mu(a, m.r, m.r_comp)


def _m_m(a: float, m: Modulus) -> float:
    return _m(a, m.r, m.r_comp)


def _exp(v: float) -> float:
    return math.inf if v > 709.0 else math.exp(v)


def _log_kd(a: float, img: Image) -> float:
    """log of the kd combination at s, kept finite when s underflows."""
    if img.log_s > -230.0:
        return math.log(kd_at(a, img.s, img.K_s))
    # kd = (pi/2) s^2 (2a^2-2a+1)/(2(1-a)) (1 + O(s^2))
    return math.log(0.25 * math.pi * (2 * a * a - 2 * a + 1) / (1 - a)) + 2.0 * img.log_s


def _comp2_k2(img: Image) -> float:
    """s'^2 K_a(s)^2, via logs so extreme K underflows cleanly to 0."""
    return math.exp(2.0 * img.log_s_comp + 2.0 * math.log(img.K_s))


def _comp2_k3_kd(a: float, img: Image) -> float:
    return math.exp(2.0 * img.log_s_comp + 3.0 * math.log(img.K_s)) * kd_at(a, img.s, img.K_s)


# -- sharp exponents -----------------------------------------------------------


def sharp_exp_mult(a, r, t) -> tuple[float, float]:
    """(m_a(r)+m_a(t)-m_a(rt), mu_a(r)+mu_a(t)-mu_a(rt))."""
    a = as_signature(a).a
    mr, mt, mx = _unit(float(r)), _unit(float(t)), _product_modulus(float(r), float(t))
    for m in (mr, mt):
        if not 0.0 < m.r < 1.0:
            raise DomainError(f"sharp_exp_mult needs r, t in (0, 1), got {m.r}")
    alpha = _m_m(a, mr) + _m_m(a, mt) - _m_m(a, mx)
    gamma = _mu_m(a, mr) + _mu_m(a, mt) - _mu_m(a, mx)
    return alpha, gamma


def sharp_exp_power(a, r, p: float) -> tuple[float, float]:
    """(p m_a(r) - m_a(r^p), p mu_a(r) - mu_a(r^p))."""
    a = as_signature(a).a
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"sharp_exp_power needs r in (0, 1), got {r}")
    if not p > 0:
        raise DomainError(f"sharp_exp_power needs p > 0, got {p}")
    mr = _unit(r)
    mx = mr if p == 1 else _power_modulus(r, p)
    return p * _m_m(a, mr) - _m_m(a, mx), p * _mu_m(a, mr) - _mu_m(a, mx)


# -- the named functions -------------------------------------------------------


def _f1(a, m):
    return (2 * a - 1) / (1 - a) * m.r_comp**2 * K(a, m) + 2 * E(a, m)


def _f2(a, m):
    return a * (2 * a - 1) / (1 - a) * m.r_comp**2 * K(a, m) + E(a, m)


def _f3(a, m):
    return m.r**2 * K(a, m) / kd_combo(a, m)


def _f10(a, m):
    return K(a, m) - 3 * (1 - a) * e_minus_comp2_k(a, m) / m.r**2


def _eval_r(name: str, P: dict, r: float) -> float:
    a = P["a"]
    m = _unit(r)
    if not 0.0 < m.r < 1.0:
        raise DomainError(f"{name} is defined for r in (0, 1), got {r!r}")
    if name == "f1":
        return _f1(a, m)
    if name == "f2":
        return _f2(a, m)
    if name == "f3":
        return _f3(a, m)
    if name == "f4":
        p = P["p"]
        return _m_m(a, _power_modulus(r, p)) - p * _m_m(a, m)
    if name == "f5":
        p = P["p"]
        return _mu_m(a, _power_modulus(r, p)) - p * _mu_m(a, m)
    if name == "f6":
        t = P["t"]
        return _mu_m(a, m) + _mu_m(a, _unit(t)) - _mu_m(a, _product_modulus(r, t))
    if name == "f9":
        kc = K(a, m.swap())
        return m.r**2 * kc * K(a, m) - 3 * (1 - a) * kc * e_minus_comp2_k(a, m)
    if name == "f10":
        return _f10(a, m)
    if name == "f11":
        return K(a, m.swap()) * _f2(a, m) * _f3(a, m)
    raise AssertionError(name)


def _eval_K(name: str, P: dict, k: float, *, log: bool, deriv: bool) -> float:
    a = P["a"]
    if not (k > 0 and math.isfinite(k)):
        raise DomainError(f"{name} is defined for K in (0, inf), got {k!r}")
    c4 = 4.0 / math.pi**2
    c_d = 64.0 * (1 - a) / (math.pi**4 * k * k)

    if name in ("f7", "f8"):
        ms, my = _unit(P["r"]), _unit(P["x"])
        s, y = _img(a, k, ms), _img(a, k, my)
        if name == "f7":
            v = 2.0 * (s.log_s_comp - y.log_s_comp) + 3.0 * (math.log(s.K_s) - math.log(y.K_s))
        else:
            v = _log_kd(a, s) - _log_kd(a, y)
        return v if log else _exp(v)

    if name in ("g1", "g2", "g3"):
        r, t = P["r"], P["t"]
        mr, mt, mx = _unit(r), _unit(t), _product_modulus(r, t)
        kk = k if name in ("g1", "g3") else 1.0 / k
        s, u, y = _img(a, kk, mr), _img(a, kk, mt), _img(a, kk, mx)
        if name == "g3":
            if deriv:
                return c_d * (
                    _mu_m(a, mx) ** 2 * _comp2_k3_kd(a, y)
                    - _mu_m(a, mr) ** 2 * _comp2_k3_kd(a, s)
                    - _mu_m(a, mt) ** 2 * _comp2_k3_kd(a, u)
                )
            return c4 * (
                _comp2_k2(s) * _mu_m(a, mr) + _comp2_k2(u) * _mu_m(a, mt) - _comp2_k2(y) * _mu_m(a, mx)
            )
        base = s.log_s + u.log_s - y.log_s
        v = base + (P["lam"] / k if name == "g1" else P["tau"] * k)
        return v if log else _exp(v)

    r, p = P["r"], P["p"]
    mr, mx = _unit(r), _power_modulus(r, p)
    kk = k if name in ("g6", "g8") else 1.0 / k
    s, y = _img(a, kk, mr), _img(a, kk, mx)
    if name == "g8":
        if deriv:
            return c_d * (
                _mu_m(a, mx) ** 2 * _comp2_k3_kd(a, y) - p * _mu_m(a, mr) ** 2 * _comp2_k3_kd(a, s)
            )
        return c4 * (p * _mu_m(a, mr) * _comp2_k2(s) - _mu_m(a, mx) * _comp2_k2(y))
    base = p * s.log_s - y.log_s
    v = base + (P["xi"] / k if name == "g6" else P["rho"] * k)
    return v if log else _exp(v)


def eval_named(fn: NamedFn, v: float, *, log: bool = False, deriv: bool = False) -> float:
    """Evaluate ``fn`` at its free variable ``v``.

    ``log=True`` returns the logarithm (only for the positive functions
    f7, f8, g1, g2, g6, g7); ``deriv=True`` returns dg/dK for g3 and g8 using
    the closed-form derivative from the monotonicity argument.
    """
    if log and fn.name not in _POSITIVE:
        raise DomainError(f"log evaluation is not available for {fn.name}")
    if deriv and fn.name not in _DIFFERENTIABLE:
        raise DomainError(f"closed-form K-derivative is only available for g3, g8, not {fn.name}")
    v = float(v)
    if fn.free_var == "r":
        return _eval_r(fn.name, dict(fn.params), v)
    return _eval_K(fn.name, dict(fn.params), v, log=log, deriv=deriv)


# -- reports -------------------------------------------------------------------


@dataclass
class CheckRecord:
    params: dict
    lhs: float
    rhs: float
    margin: float


@dataclass
class VerificationReport:
    suite: str
    spec: dict = field(default_factory=dict)
    total_checks: int = 0
    failures: list[CheckRecord] = field(default_factory=list)
    indeterminate: list[CheckRecord] = field(default_factory=list)
    expected_violations: list[CheckRecord] = field(default_factory=list)
    min_margin: float | None = None
    elapsed_ms: float | None = None
    library_version: str = __version__
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.total_checks += other.total_checks
        self.failures.extend(other.failures)
        self.indeterminate.extend(other.indeterminate)
        self.expected_violations.extend(other.expected_violations)
        if other.min_margin is not None:
            self.min_margin = (
                other.min_margin if self.min_margin is None else min(self.min_margin, other.min_margin)
            )
        self.notes.extend(n for n in other.notes if n not in self.notes)
        return self

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        d = dict(d)
        for key in ("failures", "indeterminate", "expected_violations"):
            d[key] = [CheckRecord(**c) for c in d.get(key, [])]
        return cls(**d)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, s: str) -> "VerificationReport":
        return cls.from_dict(json.loads(s))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        mm = "n/a" if self.min_margin is None else f"{self.min_margin:.3e}"
        return (
            f"{self.suite}: {status} checks={self.total_checks} failures={len(self.failures)} "
            f"indeterminate={len(self.indeterminate)} expected_violations={len(self.expected_violations)} "
            f"min_margin={mm}"
        )


class Recorder:
    """Accumulates individual checks into a :class:`VerificationReport`."""

    def __init__(self, suite: str, spec: dict | None = None, guard: float = MARGIN_GUARD):
        self.report = VerificationReport(suite, dict(spec or {}))
        self.guard = guard
        self._t0 = time.perf_counter()

    def _margin(self, margin: float) -> None:
        r = self.report
        r.min_margin = margin if r.min_margin is None else min(r.min_margin, margin)

    def less(self, lhs: float, rhs: float, **params) -> float:
        """Record the strict inequality lhs < rhs."""
        rec = CheckRecord(params, lhs, rhs, rhs - lhs)
        self.report.total_checks += 1
        if not math.isfinite(rec.margin):
            self.report.failures.append(rec)
        elif rec.margin > self.guard:
            self._margin(rec.margin)
        elif rec.margin >= -self.guard:
            self.report.indeterminate.append(rec)
        else:
            self._margin(rec.margin)
            self.report.failures.append(rec)
        return rec.margin

    def within(self, value: float, expected: float, tol: float, **params) -> float:
        """Record |value - expected| <= tol; margin is tol - |value - expected|."""
        rec = CheckRecord(params, value, expected, tol - abs(value - expected))
        self.report.total_checks += 1
        if not rec.margin >= 0:
            self.report.failures.append(rec)
        return rec.margin

    def holds(self, ok: bool, lhs: float = math.nan, rhs: float = math.nan, **params) -> None:
        self.report.total_checks += 1
        if not ok:
            self.report.failures.append(CheckRecord(params, lhs, rhs, math.nan))

    def expect_violation(self, lhs: float, rhs: float, **params) -> None:
        """A sharpness probe: lhs < rhs is supposed to fail here."""
        rec = CheckRecord(params, lhs, rhs, rhs - lhs)
        self.report.total_checks += 1
        if rec.margin < -self.guard:
            self.report.expected_violations.append(rec)
        else:
            rec.params = {**params, "problem": "perturbed exponent not violated"}
            self.report.failures.append(rec)

    def error(self, exc: Exception, **params) -> None:
        self.report.total_checks += 1
        self.report.failures.append(
            CheckRecord({**params, "error": f"{type(exc).__name__}: {exc}"}, math.nan, math.nan, math.nan)
        )

    def note(self, text: str) -> None:
        if text not in self.report.notes:
            self.report.notes.append(text)

    def finish(self) -> VerificationReport:
        self.report.elapsed_ms = 1000.0 * (time.perf_counter() - self._t0)
        return self.report


# -- checks --------------------------------------------------------------------


def _values(fn: NamedFn, grid: Sequence[float], log: bool) -> list[float]:
    return [eval_named(fn, v, log=log) for v in grid]


def check_monotone(
    fn: NamedFn,
    grid: Sequence[float],
    direction: str,
    strict_tol: float = MARGIN_GUARD,
    *,
    log_scale: bool = False,
) -> VerificationReport:
    """Compare every adjacent pair on ``grid`` against ``direction``.

    Differences are measured relative to max(|v_i|, |v_i+1|), or as plain
    differences of logarithms with ``log_scale=True``.
    """
    if direction not in ("increasing", "decreasing"):
        raise DomainError(f"direction must be 'increasing' or 'decreasing', got {direction!r}")
    grid = [float(g) for g in grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("monotonicity grid must be strictly ascending")
    rec = Recorder(f"monotone:{fn.name}", {"fn": fn.name, "params": dict(fn.params), "direction": direction},
                   guard=strict_tol)
    try:
        vals = _values(fn, grid, log_scale)
    except DistortionError as exc:
        rec.error(exc, fn=fn.name, **fn.params)
        return rec.finish()
    sign = 1.0 if direction == "increasing" else -1.0
    for v0, v1, g0, g1 in zip(vals, vals[1:], grid, grid[1:]):
        scale = 1.0 if log_scale else max(abs(v0), abs(v1), 1e-300)
        # lhs < rhs in the requested order
        lhs, rhs = (v0 / scale, v1 / scale) if sign > 0 else (v1 / scale, v0 / scale)
        rec.less(lhs, rhs, fn=fn.name, check=direction, at=[g0, g1], **fn.params)
    return rec.finish()


def check_range(
    fn: NamedFn, endpoint: str, expected: float, approach: float, tol: float
) -> VerificationReport:
    """Check that ``fn(approach)`` is within ``tol`` of a limiting value."""
    if endpoint not in ("lower", "upper"):
        raise DomainError(f"endpoint must be 'lower' or 'upper', got {endpoint!r}")
    rec = Recorder(f"range:{fn.name}", {"fn": fn.name, "params": dict(fn.params), "endpoint": endpoint})
    try:
        v = eval_named(fn, approach)
    except DistortionError as exc:
        rec.error(exc, fn=fn.name, endpoint=endpoint, approach=approach, **fn.params)
    else:
        rec.within(v, expected, tol, fn=fn.name, endpoint=endpoint, approach=approach, tolerance=tol, **fn.params)
    return rec.finish()


def _log_ratio_mult(a: float, k: float, r: float, t: float) -> float:
    mr, mt, mx = _unit(r), _unit(t), _product_modulus(r, t)
    return _img(a, k, mr).log_s + _img(a, k, mt).log_s - _img(a, k, mx).log_s


def _log_ratio_power(a: float, k: float, r: float, p: float) -> float:
    mr, mx = _unit(r), _power_modulus(r, p)
    return p * _img(a, k, mr).log_s - _img(a, k, mx).log_s


def check_theorem_mult(
    a,
    r,
    t,
    K_grid: Iterable[float],
    margin_guard: float = MARGIN_GUARD,
    falsify_epsilon: float | None = FALSIFY_EPSILON,
) -> VerificationReport:
    """Submultiplicative bounds for phi_K^a and phi_{1/K}^a at one (a, r, t).

    Part (1): log[phi_K(r) phi_K(t) / phi_K(rt)] < alpha (1 - 1/K), K >= 1.
    Part (2): gamma (1 - K) < log[phi_{1/K}(r) phi_{1/K}(t) / phi_{1/K}(rt)]
              < beta (1 - K), K > 1, with beta = alpha.
    """
    a = as_signature(a).a
    r, t = float(r), float(t)
    K_grid = [float(k) for k in K_grid]
    if any(not k >= 1.0 for k in K_grid):
        raise DomainError(f"theorem grids need K >= 1, got {K_grid}")
    where = {"a": a, "r": r, "t": t}
    rec = Recorder("thm-mult", where, guard=margin_guard)
    try:
        alpha, gamma = sharp_exp_mult(a, r, t)
        if a == 0.5:
            c_alpha, c_gamma = classical.mult_exponents(r, t)
            rec.within(alpha, c_alpha, CLASSICAL_TOL, check="classical alpha", **where)
            rec.within(gamma, c_gamma, CLASSICAL_TOL, check="classical gamma", **where)
        for k in K_grid:
            p = {**where, "K": k}
            L = _log_ratio_mult(a, k, r, t)
            if k == 1.0:
                rec.within(L, 0.0, EQUALITY_TOL, check="K=1 equality", **p)
                continue
            rec.less(L, alpha * (1 - 1 / k), check="part1 upper", **p)
            L2 = _log_ratio_mult(a, 1 / k, r, t)
            rec.less(gamma * (1 - k), L2, check="part2 lower", **p)
            rec.less(L2, alpha * (1 - k), check="part2 upper", **p)
        k = SHARPNESS_K
        p = {**where, "K": k}
        rec.within(_log_ratio_mult(a, k, r, t) / (1 - 1 / k), alpha, SHARPNESS_TOL, check="lhopital part1", **p)
        rec.within(_log_ratio_mult(a, 1 / k, r, t) / (1 - k), alpha, SHARPNESS_TOL, check="lhopital part2", **p)
        if falsify_epsilon:
            eps = falsify_epsilon
            for k in FALSIFY_KS:
                p = {**where, "K": k, "epsilon": eps}
                rec.expect_violation(
                    _log_ratio_mult(a, k, r, t), (alpha - eps) * (1 - 1 / k), check="sharpness alpha-eps", **p
                )
                rec.expect_violation(
                    _log_ratio_mult(a, 1 / k, r, t), (alpha + eps) * (1 - k), check="sharpness beta+eps", **p
                )
    except DistortionError as exc:
        rec.error(exc, **where)
    return rec.finish()


def check_theorem_power(
    a,
    r,
    p: float,
    K_grid: Iterable[float],
    margin_guard: float = MARGIN_GUARD,
    falsify_epsilon: float | None = FALSIFY_EPSILON,
) -> VerificationReport:
    """Power bounds for phi_K^a(r)^p / phi_K^a(r^p) and the 1/K family.

    For 0 < p < 1 (with L = log of the ratio, K > 1):
        L_K > delta (1 - 1/K),   zeta (1 - K) < L_{1/K} < eta (1 - K)
    with delta = zeta = p m(r) - m(r^p) and eta = p mu(r) - mu(r^p).
    For p > 1 the first inequality reverses and zeta/eta swap roles.
    At p = 1 every ratio is exactly 1.
    """
    a = as_signature(a).a
    r, p = float(r), float(p)
    K_grid = [float(k) for k in K_grid]
    if any(not k > 1.0 for k in K_grid):
        raise DomainError(f"power theorem grids need K > 1, got {K_grid}")
    where = {"a": a, "r": r, "p": p}
    rec = Recorder("thm-power", where, guard=margin_guard)
    try:
        mb, mub = sharp_exp_power(a, r, p)
        if a == 0.5:
            c_mb, c_mub = classical.power_exponents(r, p)
            rec.within(mb, c_mb, CLASSICAL_TOL, check="classical m-based", **where)
            rec.within(mub, c_mub, CLASSICAL_TOL, check="classical mu-based", **where)
        if p == 1.0:
            rec.within(mb, 0.0, 0.0, check="p=1 exponent m", **where)
            rec.within(mub, 0.0, 0.0, check="p=1 exponent mu", **where)
        for k in K_grid:
            q = {**where, "K": k}
            L = _log_ratio_power(a, k, r, p)
            L2 = _log_ratio_power(a, 1 / k, r, p)
            if p == 1.0:
                rec.within(L, 0.0, EQUALITY_TOL, check="p=1 equality K", **q)
                rec.within(L2, 0.0, EQUALITY_TOL, check="p=1 equality 1/K", **q)
            elif p < 1.0:
                rec.less(mb * (1 - 1 / k), L, check="p<1 lower (delta)", **q)
                rec.less(mb * (1 - k), L2, check="p<1 lower (zeta)", **q)
                rec.less(L2, mub * (1 - k), check="p<1 upper (eta)", **q)
            else:
                rec.less(L, mb * (1 - 1 / k), check="p>1 upper (delta)", **q)
                rec.less(mub * (1 - k), L2, check="p>1 lower (zeta)", **q)
                rec.less(L2, mb * (1 - k), check="p>1 upper (eta)", **q)
        if p != 1.0:
            k = SHARPNESS_K
            q = {**where, "K": k}
            rec.within(_log_ratio_power(a, k, r, p) / (1 - 1 / k), mb, SHARPNESS_TOL, check="lhopital K", **q)
            rec.within(_log_ratio_power(a, 1 / k, r, p) / (1 - k), mb, SHARPNESS_TOL, check="lhopital 1/K", **q)
            if falsify_epsilon:
                eps = falsify_epsilon
                for k in FALSIFY_KS:
                    q = {**where, "K": k, "epsilon": eps}
                    L = _log_ratio_power(a, k, r, p)
                    if p < 1.0:
                        rec.expect_violation((mb + eps) * (1 - 1 / k), L, check="sharpness delta+eps", **q)
                    else:
                        rec.expect_violation(L, (mb - eps) * (1 - 1 / k), check="sharpness delta-eps", **q)
    except DistortionError as exc:
        rec.error(exc, **where)
    return rec.finish()


def find_sign_change(
    fn: NamedFn | Callable[[float], float],
    K_lo: float,
    K_hi: float,
    tol: float = 1e-10,
    *,
    derivative: bool = False,
    max_iter: int = 200,
) -> float:
    """Bisect (geometrically, K being a scale variable) for a sign change.

    With ``derivative=True`` the sign of dg/dK is used (g3 and g8 only).
    """
    if isinstance(fn, NamedFn):
        named = fn
        f = lambda k: eval_named(named, k, deriv=derivative)  # noqa: E731
    else:
        f = fn
    if not 0 < K_lo < K_hi:
        raise DomainError(f"need 0 < K_lo < K_hi, got [{K_lo}, {K_hi}]")
    f_lo, f_hi = f(K_lo), f(K_hi)
    if f_lo == 0.0:
        return K_lo
    if f_hi == 0.0:
        return K_hi
    if (f_lo > 0) == (f_hi > 0):
        raise DomainError(f"no sign change on [{K_lo}, {K_hi}]: f={f_lo:.3e}, {f_hi:.3e}")
    lo, hi = K_lo, K_hi
    for _ in range(max_iter):
        mid = math.sqrt(lo * hi)
        if hi - lo <= tol * mid:
            return mid
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return math.sqrt(lo * hi)

