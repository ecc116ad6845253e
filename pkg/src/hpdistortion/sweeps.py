"""Grid sweeps that drive the checkers of :mod:`hpdistortion.verifier`.

Each suite is split into independent tasks (one per grid point or small
group of points). Tasks may run in a process pool; their reports are
merged in task order, so the result never depends on scheduling.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .distortion import dm_dr, dmu_dr, dphi_dK, dphi_dK_alt, m_fn, mu, phi, phi_image
from .elliptic import E, K, Modulus, dE_dr, dK_dr
from .errors import DistortionError, DomainError
from .special import as_signature, ramanujan_R
from .verifier import (
    MARGIN_GUARD,
    NamedFn,
    Recorder,
    VerificationReport,
    check_monotone,
    check_range,
    check_theorem_mult,
    check_theorem_power,
    eval_named,
    find_sign_change,
    sharp_exp_mult,
    sharp_exp_power,
)

SUITES = (
    "prop-pro2",
    "prop-pro1",
    "prop-pro4",
    "prop-pro3",
    "thm-mult",
    "thm-power",
    "thm-g-monotone",
    "identities",
    "derivatives",
    "asymptotics",
)

DEFAULT_A = (0.1, 0.25, 1.0 / 3.0, 0.5)
DEFAULT_K = (1.0 + 1e-6, 1.1, 1.5, 2.0, 5.0, 10.0, 100.0)
DEFAULT_P = (0.25, 0.5, 1.0, 2.0, 4.0)
IDENTITY_K = (0.1, 0.5, 1.0, 2.0, 10.0)
ENDPOINT_EPS = 1e-7
ENDPOINT_TOL = 1e-5
LIMIT_TOL = 1e-3
FD_TOL = 1e-6


def unit_grid(n: int, lo: float = 0.05, hi: float = 0.95) -> list[float]:
    """n points from lo to hi inclusive, rounded to 12 digits."""
    if n < 1:
        raise DomainError(f"grid density must be a positive integer, got {n}")
    if n == 1:
        return [round(0.5 * (lo + hi), 12)]
    return [round(float(v), 12) for v in np.linspace(lo, hi, n)]


def log_grid(lo_exp: int, hi_exp: int, per_decade: int) -> list[float]:
    """10**(k/per_decade); reciprocals of grid points are grid points."""
    return [10.0 ** (k / per_decade) for k in range(lo_exp * per_decade, hi_exp * per_decade + 1)]


@dataclass
class SweepSpec:
    suite: str
    a_grid: list[float] = field(default_factory=lambda: list(DEFAULT_A))
    r_grid: list[float] = field(default_factory=lambda: unit_grid(19))
    t_grid: list[float] = field(default_factory=lambda: unit_grid(19))
    K_grid: list[float] = field(default_factory=lambda: list(DEFAULT_K))
    p_grid: list[float] = field(default_factory=lambda: list(DEFAULT_P))
    tolerance: float = 1e-9
    margin_guard: float = MARGIN_GUARD
    falsify_epsilon: float | None = 1e-3
    workers: int = 1

    def __post_init__(self):
        if self.suite not in SUITES:
            raise DomainError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        for name in ("a_grid", "r_grid", "t_grid", "K_grid", "p_grid"):
            vals = [float(v) for v in getattr(self, name)]
            if not vals:
                raise DomainError(f"{name} is empty")
            if not all(math.isfinite(v) for v in vals):
                raise DomainError(f"{name} has non-finite entries")
            setattr(self, name, vals)
        for a in self.a_grid:
            as_signature(a)
        for name in ("r_grid", "t_grid"):
            if any(not 0.0 < v < 1.0 for v in getattr(self, name)):
                raise DomainError(f"{name} entries must lie in (0, 1)")
        if any(not k >= 1.0 for k in self.K_grid):
            raise DomainError("K_grid entries must be >= 1 (the reciprocal family uses 1/K)")
        if any(not p > 0.0 for p in self.p_grid):
            raise DomainError("p_grid entries must be positive")
        if not self.tolerance > 0 or not self.margin_guard > 0:
            raise DomainError("tolerance and margin_guard must be positive")
        if self.falsify_epsilon is not None and not self.falsify_epsilon >= 0:
            raise DomainError("falsify_epsilon must be non-negative")
        if self.workers < 1:
            raise DomainError("workers must be >= 1")

    @classmethod
    def default(cls, suite: str, grid_density: int | None = None, **kw) -> "SweepSpec":
        if grid_density is not None:
            g = unit_grid(grid_density)
            kw.setdefault("r_grid", g)
            kw.setdefault("t_grid", g)
        elif suite == "thm-g-monotone":
            # every (r, t) pair needs its own crossover search
            kw.setdefault("r_grid", unit_grid(10))
            kw.setdefault("t_grid", unit_grid(10))
        return cls(suite, **kw)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("workers")
        return d


def _run_tasks(tasks: list, workers: int) -> list[VerificationReport]:
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, *args) for fn, args in tasks]
            return [f.result() for f in futures]
    return [fn(*args) for fn, args in tasks]


def run_suite(spec: SweepSpec) -> VerificationReport:
    t0 = time.perf_counter()
    tasks = _TASKS[spec.suite](spec)
    report = VerificationReport(spec.suite, spec.to_dict())
    for part in _run_tasks(tasks, spec.workers):
        report.merge(part)
    report.elapsed_ms = 1000.0 * (time.perf_counter() - t0)
    return report


def run_all(grid_density: int | None = None, workers: int = 1, **kw) -> list[VerificationReport]:
    return [run_suite(SweepSpec.default(s, grid_density, workers=workers, **kw)) for s in SUITES]


# -- prop-pro2 -----------------------------------------------------------------


def _pro2_task(a: float, guard: float) -> VerificationReport:
    rec = Recorder("prop-pro2", {"a": a}, guard)
    s = math.sin(math.pi * a)
    grid = unit_grid(200, 0.005, 0.995)
    ends = {
        "f1": (math.pi / (2 * (1 - a)), s / (1 - a)),
        "f2": (math.pi * (2 * a * a - 2 * a + 1) / (2 * (1 - a)), s / (2 * (1 - a))),
        "f3": (2 * (1 - a) / (2 * a * a - 2 * a + 1), 2 * (1 - a)),
    }
    for name, (at0, at1) in ends.items():
        fn = NamedFn(name, {"a": a})
        rep = check_monotone(fn, grid, "decreasing", guard)
        rep.merge(check_range(fn, "lower", at0, ENDPOINT_EPS, ENDPOINT_TOL))
        rep.merge(check_range(fn, "upper", at1, 1.0 - ENDPOINT_EPS, ENDPOINT_TOL))
        rec.report.merge(rep)
    return rec.finish()


# -- prop-pro1 -----------------------------------------------------------------


def _pro1_task(a: float, p: float, r_grid: list, guard: float) -> VerificationReport:
    rec = Recorder("prop-pro1", {"a": a, "p": p}, guard)
    f4, f5 = NamedFn("f4", {"a": a, "p": p}), NamedFn("f5", {"a": a, "p": p})
    if p == 1.0:
        for fn in (f4, f5):
            for r in r_grid:
                rec.within(eval_named(fn, r), 0.0, 0.0, fn=fn.name, check="p=1 identically zero", r=r)
        return rec.finish()
    # the derivative signs: f' < 0 for p < 1, f' > 0 for p > 1
    direction = "decreasing" if p < 1.0 else "increasing"
    limit0 = (1.0 - p) * ramanujan_R(a) / 2.0
    # the r -> 0 limit needs both r and r^p small
    r0 = ENDPOINT_EPS ** (1.0 / min(p, 1.0))
    for fn in (f4, f5):
        rep = check_monotone(fn, r_grid, direction, guard)
        rec.report.merge(rep)
        vals = [eval_named(fn, r) for r in r_grid]
        measured = "decreasing" if vals[-1] < vals[0] else "increasing"
        rec.note(f"{fn.name} measured {measured} for p{'<' if p < 1 else '>'}1")
        rec.report.merge(check_range(fn, "lower", limit0, r0, ENDPOINT_TOL))
        for r, v in zip(r_grid, vals):
            # range ((1-p)R/2, 0) or (0, (1-p)R/2), open at both ends
            lo, hi = sorted((0.0, limit0))
            rec.less(lo, v, fn=fn.name, check="inside range", r=r)
            rec.less(v, hi, fn=fn.name, check="inside range", r=r)
    rec.report.merge(check_range(f4, "upper", 0.0, 1.0 - ENDPOINT_EPS, ENDPOINT_TOL))
    return rec.finish()


# -- prop-pro4 -----------------------------------------------------------------


def _pro4_task(a: float, r: float, t_grid: list, guard: float) -> VerificationReport:
    rec = Recorder("prop-pro4", {"a": a, "r": r}, guard)
    half_R = 0.5 * ramanujan_R(a)
    for t in t_grid:
        try:
            alpha, gamma = sharp_exp_mult(a, r, t)
        except DistortionError as exc:
            rec.error(exc, a=a, r=r, t=t)
            continue
        rec.less(0.0, alpha, check="m superadditive", a=a, r=r, t=t)
        rec.less(0.0, gamma, check="mu superadditive", a=a, r=r, t=t)
        rec.less(alpha, half_R, check="alpha < R/2", a=a, r=r, t=t)
    return rec.finish()


def _f6_task(a: float, t: float, r_grid: list, guard: float) -> VerificationReport:
    return check_monotone(NamedFn("f6", {"a": a, "t": t}), r_grid, "decreasing", guard)


# -- prop-pro3 -----------------------------------------------------------------


def _pro3_task(a: float, x: float, r: float, guard: float) -> VerificationReport:
    rec = Recorder("prop-pro3", {"a": a, "x": x, "r": r}, guard)
    ks = log_grid(-2, 2, 10)
    f7, f8 = NamedFn("f7", {"a": a, "x": x, "r": r}), NamedFn("f8", {"a": a, "x": x, "r": r})
    where = {"a": a, "x": x, "r": r}
    try:
        rec.report.merge(check_monotone(f7, ks, "decreasing", guard, log_scale=True))
        rec.report.merge(check_monotone(f8, ks, "decreasing", guard, log_scale=True))
        floor = math.log(mu(a, x) / mu(a, r))
        for k in ks:
            l7 = eval_named(f7, k, log=True)
            rec.less(l7, 0.0, fn="f7", check="f7 < 1", K=k, **where)
            rec.holds(l7 > -math.inf, l7, -math.inf, fn="f7", check="f7 > 0", K=k, **where)
            rec.less(floor, eval_named(f8, k, log=True), fn="f8", check="f8 > mu(x)/mu(r)", K=k, **where)
        rec.report.merge(check_range(f8, "upper", math.exp(floor), 1e3, LIMIT_TOL))
    except DistortionError as exc:
        rec.error(exc, **where)
    return rec.finish()


def _pro3_aux_task(a: float, guard: float) -> VerificationReport:
    grid = unit_grid(200, 0.005, 0.995)
    rep = check_monotone(NamedFn("f9", {"a": a}), grid, "increasing", guard)
    rep.merge(check_monotone(NamedFn("f10", {"a": a}), grid, "increasing", guard))
    rep.merge(check_monotone(NamedFn("f11", {"a": a}), grid, "decreasing", guard))
    return rep


# -- theorems ------------------------------------------------------------------


def _mult_task(a, r, t_grid, K_grid, guard, eps) -> VerificationReport:
    rep = VerificationReport("thm-mult")
    for t in t_grid:
        rep.merge(check_theorem_mult(a, r, t, K_grid, guard, eps))
    return rep


def _power_task(a, r, p_grid, K_grid, guard, eps) -> VerificationReport:
    rep = VerificationReport("thm-power")
    for p in p_grid:
        rep.merge(check_theorem_power(a, r, p, K_grid, guard, eps))
    return rep


_K_LOW = log_grid(-2, 0, 10)  # (0, 1]
_K_HIGH = log_grid(0, 2, 10)  # [1, inf)


def _monotone_between(rec, fn, grid, direction, guard, **where):
    try:
        rec.report.merge(check_monotone(fn, grid, direction, guard, log_scale=fn.name != "g3" and fn.name != "g8"))
    except DistortionError as exc:
        rec.error(exc, fn=fn.name, **where)


def _crossover(rec: Recorder, fn: NamedFn, first_sign: int, guard: float, **where) -> float | None:
    """Locate the sign change of dfn/dK on (1, inf) and check the pattern."""
    d1 = eval_named(fn, 1.0, deriv=True)
    rec.holds(d1 * first_sign > 0, d1, 0.0, fn=fn.name, check="derivative sign at K=1", **where)
    if d1 * first_sign <= 0:
        return None
    hi = 2.0
    while (d_hi := eval_named(fn, hi, deriv=True)) * first_sign > 0:
        hi *= 2.0
        if hi > 1e6:
            rec.holds(False, d1, 0.0, fn=fn.name, check="no crossover below K=1e6", **where)
            return None
    if d_hi == 0.0:
        # underflow, not a sign change
        rec.holds(False, d1, 0.0, fn=fn.name, check="derivative underflowed before crossover", **where)
        return None
    k0 = find_sign_change(fn, 1.0, hi, 1e-8, derivative=True)
    rec.less(1.0, k0, fn=fn.name, check="crossover in (1, inf)", **where)
    return k0


def _g_mult_task(a: float, r: float, t: float, guard: float) -> VerificationReport:
    where = {"a": a, "r": r, "t": t}
    rec = Recorder("thm-g-monotone", where, guard)
    try:
        alpha, gamma = sharp_exp_mult(a, r, t)
        g = lambda name, **q: NamedFn(name, {"a": a, "r": r, "t": t, **q})  # noqa: E731
        _monotone_between(rec, g("g1", lam=alpha), _K_LOW, "increasing", guard, **where)
        _monotone_between(rec, g("g1", lam=gamma), _K_LOW, "decreasing", guard, **where)
        _monotone_between(rec, g("g1", lam=alpha), _K_HIGH, "decreasing", guard, **where)
        _monotone_between(rec, g("g2", tau=alpha), _K_LOW, "increasing", guard, **where)
        _monotone_between(rec, g("g2", tau=gamma), _K_HIGH, "increasing", guard, **where)
        _monotone_between(rec, g("g2", tau=alpha), _K_HIGH, "decreasing", guard, **where)
        g3 = g("g3")
        rec.within(eval_named(g("g1", lam=alpha), 1.0), math.exp(alpha), 1e-12 * math.exp(alpha),
                   check="g1(1) = e^lambda", **where)
        rec.within(eval_named(g3, 1e-4), gamma, LIMIT_TOL, check="g3 K->0 limit", **where)
        rec.within(eval_named(g3, 1.0), alpha, LIMIT_TOL, check="g3 at K=1", **where)
        rec.within(eval_named(g3, 1e4), 0.0, LIMIT_TOL, check="g3 K->inf limit", **where)
        k0 = _crossover(rec, g3, -1, guard, **where)
        if k0 is not None:
            _monotone_between(rec, g3, list(np.geomspace(k0 / 20, k0, 12)), "decreasing", guard, **where)
            _monotone_between(rec, g3, list(np.geomspace(k0, 20 * k0, 12)), "increasing", guard, **where)
    except DistortionError as exc:
        rec.error(exc, **where)
    return rec.finish()


def _g_power_task(a: float, r: float, p: float, guard: float) -> VerificationReport:
    where = {"a": a, "r": r, "p": p}
    rec = Recorder("thm-g-monotone", where, guard)
    try:
        mb, mub = sharp_exp_power(a, r, p)
        g = lambda name, **q: NamedFn(name, {"a": a, "r": r, "p": p, **q})  # noqa: E731
        g8 = g("g8")
        rec.within(eval_named(g8, 1e-4), mub, LIMIT_TOL, check="g8 K->0 limit", **where)
        rec.within(eval_named(g8, 1.0), mb, LIMIT_TOL, check="g8 at K=1", **where)
        rec.within(eval_named(g8, 1e4), 0.0, LIMIT_TOL, check="g8 K->inf limit", **where)
        if p == 1.0:
            # g6 = e^{xi/K} and g8 = 0: nothing strict to check
            rec.within(eval_named(g8, 2.0), 0.0, 1e-15, check="g8 vanishes at p=1", **where)
            return rec.finish()
        if p < 1.0:
            _monotone_between(rec, g("g6", xi=mub), _K_LOW, "increasing", guard, **where)
            _monotone_between(rec, g("g6", xi=mb), _K_LOW, "decreasing", guard, **where)
            _monotone_between(rec, g("g6", xi=mb), _K_HIGH, "increasing", guard, **where)
            _monotone_between(rec, g("g7", rho=mb), _K_LOW, "decreasing", guard, **where)
            _monotone_between(rec, g("g7", rho=mb), _K_HIGH, "increasing", guard, **where)
            _monotone_between(rec, g("g7", rho=mub), _K_HIGH, "decreasing", guard, **where)
            first, before, after = +1, "increasing", "decreasing"
        else:
            _monotone_between(rec, g("g6", xi=mb), _K_LOW, "increasing", guard, **where)
            _monotone_between(rec, g("g6", xi=mub), _K_LOW, "decreasing", guard, **where)
            _monotone_between(rec, g("g6", xi=mb), _K_HIGH, "decreasing", guard, **where)
            _monotone_between(rec, g("g7", rho=mb), _K_LOW, "increasing", guard, **where)
            _monotone_between(rec, g("g7", rho=mub), _K_HIGH, "increasing", guard, **where)
            _monotone_between(rec, g("g7", rho=mb), _K_HIGH, "decreasing", guard, **where)
            first, before, after = -1, "decreasing", "increasing"
        k1 = _crossover(rec, g8, first, guard, **where)
        if k1 is not None:
            _monotone_between(rec, g8, list(np.geomspace(k1 / 20, k1, 12)), before, guard, **where)
            _monotone_between(rec, g8, list(np.geomspace(k1, 20 * k1, 12)), after, guard, **where)
    except DistortionError as exc:
        rec.error(exc, **where)
    return rec.finish()


# -- identities ----------------------------------------------------------------


def _identity_task(a: float, r: float, tol: float, guard: float) -> VerificationReport:
    where = {"a": a, "r": r}
    rec = Recorder("identities", where, guard)
    m = Modulus.from_r(r)
    c = as_signature(a).mu_center
    try:
        for k in IDENTITY_K:
            s = phi_image(a, k, m)
            sc = phi_image(a, 1.0 / k, m.swap())
            # s^2 + s~^2 - 1 = s^2 - s~'^2, evaluated through logs
            lhs = math.exp(2 * s.log_s) - math.exp(2 * sc.log_s_comp)
            rec.within(lhs, 0.0, tol, check="phi_K(r)^2 + phi_1/K(r')^2 = 1", K=k, **where)
        for k, lk in ((2.0, 3.0), (0.5, 4.0), (1.5, 1.0 / 1.5)):
            inner = phi(a, lk, m)
            if inner.r < 1.0:
                rec.within(phi(a, k, inner).r, phi(a, k * lk, m).r, tol, check="semigroup", K=k, L=lk, **where)
        rec.within(mu(a, m) * mu(a, m.swap()) / (c * c), 1.0, 1e-10, check="mu(r) mu(r') = c^2", **where)
    except DistortionError as exc:
        rec.error(exc, **where)
    return rec.finish()


def _homeo_task(a: float, r_grid: list, guard: float) -> VerificationReport:
    rec = Recorder("identities", {"a": a}, guard)
    for k in IDENTITY_K:
        # log(s/s') is increasing in s and stays resolvable where s rounds to 1
        vals = []
        for r in r_grid:
            img = phi_image(a, k, Modulus.from_r(r))
            vals.append(img.log_s - img.log_s_comp)
        for (r0, v0), (r1, v1) in zip(zip(r_grid, vals), zip(r_grid[1:], vals[1:])):
            rec.holds(v0 < v1, v0, v1, check="phi increasing in r", a=a, K=k, at=[r0, r1])
        rec.holds(phi(a, k, 0.0).r == 0.0 and phi(a, k, 1.0).r == 1.0, check="phi fixes 0 and 1", a=a, K=k)
    return rec.finish()


def _landen_task(r_grid: list) -> VerificationReport:
    rec = Recorder("identities", {"a": 0.5})
    for r in r_grid:
        m = Modulus.from_r(r)
        up = 2.0 * math.sqrt(r) / (1.0 + r)
        down = (1.0 - m.r_comp) / (1.0 + m.r_comp)
        rec.within(phi(0.5, 2.0, m).r / up, 1.0, 1e-8, check="Landen phi_2", r=r)
        rec.within(phi(0.5, 0.5, m).r / down, 1.0, 1e-8, check="Landen phi_1/2", r=r)
    return rec.finish()


# -- derivatives ---------------------------------------------------------------


def _fd(f, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def _fd_check(rec, analytic: float, fd: float, **where) -> None:
    rec.within(analytic, fd, max(FD_TOL, FD_TOL * abs(fd)), **where)


def _deriv_task(a: float, r_grid: list, K_grid: list, guard: float) -> VerificationReport:
    rec = Recorder("derivatives", {"a": a}, guard)
    h = 1e-5
    for r in r_grid:
        where = {"a": a, "r": r}
        try:
            m = Modulus.from_r(r)
            hr = min(h, 0.5 * (1 - r))
            _fd_check(rec, dK_dr(a, m), _fd(lambda v: K(a, v), r, hr), check="dK/dr", **where)
            _fd_check(rec, dE_dr(a, m), _fd(lambda v: E(a, v), r, hr), check="dE/dr", **where)
            _fd_check(rec, dmu_dr(a, m), _fd(lambda v: mu(a, v), r, hr), check="dmu/dr", **where)
            _fd_check(rec, dm_dr(a, m), _fd(lambda v: m_fn(a, v), r, hr), check="dm/dr", **where)
            for k in K_grid:
                hk = h * k
                d1 = dphi_dK(a, k, m)
                _fd_check(rec, d1, _fd(lambda v: phi(a, v, m).r, k, hk), check="dphi/dK", K=k, **where)
                d2 = dphi_dK_alt(a, k, m)
                rec.within(d2, d1, 1e-9 * abs(d1), check="dphi/dK forms agree", K=k, **where)
        except DistortionError as exc:
            rec.error(exc, **where)
    for name, params in (("g3", {"r": 0.3, "t": 0.5}), ("g8", {"r": 0.5, "p": 2.0}), ("g8", {"r": 0.5, "p": 0.5})):
        fn = NamedFn(name, {"a": a, **params})
        for k in (0.5, 1.0, 2.0, 5.0):
            _fd_check(rec, eval_named(fn, k, deriv=True), _fd(fn, k, h * k), check=f"d{name}/dK", K=k, a=a, **params)
    return rec.finish()


# -- asymptotics ---------------------------------------------------------------


def _asym_task(a: float, r_grid: list, t_grid: list, guard: float) -> VerificationReport:
    rec = Recorder("asymptotics", {"a": a}, guard)
    half_R = 0.5 * ramanujan_R(a)
    r0 = 1e-6
    rec.within(mu(a, r0) + math.log(r0), half_R, ENDPOINT_TOL, check="mu + ln r -> R/2", a=a, r=r0)
    rec.within(m_fn(a, r0) + math.log(r0), half_R, ENDPOINT_TOL, check="m + ln r -> R/2", a=a, r=r0)
    rec.within(sharp_exp_power(a, r0, 2.0)[0], half_R, ENDPOINT_TOL, check="m-based p=2, r->0", a=a, r=r0)
    rec.less(m_fn(a, 1.0 - 1e-8), 1e-5, check="m -> 0 at r=1", a=a)
    for t in (0.3, 0.7):
        rec.within(sharp_exp_mult(a, 1.0 - 1e-9, t)[0], 0.0, ENDPOINT_TOL, check="alpha -> 0 at r=1", a=a, t=t)
    for r in r_grid:
        for t in t_grid:
            alpha = sharp_exp_mult(a, r, t)[0]
            rec.less(alpha, half_R, check="alpha < R/2", a=a, r=r, t=t)
            if a == 0.5:
                rec.less(alpha, math.log(4.0), check="e^alpha < 4", a=a, r=r, t=t)
    return rec.finish()


# -- task tables ---------------------------------------------------------------


def _tasks_pro2(s: SweepSpec):
    return [(_pro2_task, (a, s.margin_guard)) for a in s.a_grid]


def _tasks_pro1(s: SweepSpec):
    return [(_pro1_task, (a, p, s.r_grid, s.margin_guard)) for a in s.a_grid for p in s.p_grid]


def _tasks_pro4(s: SweepSpec):
    tasks = [(_pro4_task, (a, r, s.t_grid, s.margin_guard)) for a in s.a_grid for r in s.r_grid]
    tasks += [(_f6_task, (a, t, s.r_grid, s.margin_guard)) for a in s.a_grid for t in s.t_grid]
    return tasks


def _tasks_pro3(s: SweepSpec):
    tasks = [
        (_pro3_task, (a, x, r, s.margin_guard))
        for a in s.a_grid
        for r in s.r_grid
        for x in s.r_grid
        if x < r
    ]
    return tasks + [(_pro3_aux_task, (a, s.margin_guard)) for a in s.a_grid]


def _tasks_mult(s: SweepSpec):
    return [
        (_mult_task, (a, r, s.t_grid, s.K_grid, s.margin_guard, s.falsify_epsilon))
        for a in s.a_grid
        for r in s.r_grid
    ]


def _tasks_power(s: SweepSpec):
    return [
        (_power_task, (a, r, s.p_grid, s.K_grid, s.margin_guard, s.falsify_epsilon))
        for a in s.a_grid
        for r in s.r_grid
    ]


def _tasks_g(s: SweepSpec):
    tasks = [(_g_mult_task, (a, r, t, s.margin_guard)) for a in s.a_grid for r in s.r_grid for t in s.t_grid]
    tasks += [(_g_power_task, (a, r, p, s.margin_guard)) for a in s.a_grid for r in s.r_grid for p in s.p_grid]
    return tasks


def _tasks_identities(s: SweepSpec):
    tasks = [(_identity_task, (a, r, s.tolerance, s.margin_guard)) for a in s.a_grid for r in s.r_grid]
    tasks += [(_homeo_task, (a, s.r_grid, s.margin_guard)) for a in s.a_grid]
    return tasks + [(_landen_task, (s.r_grid,))]


def _tasks_derivatives(s: SweepSpec):
    return [(_deriv_task, (a, s.r_grid, s.K_grid, s.margin_guard)) for a in s.a_grid]


def _tasks_asymptotics(s: SweepSpec):
    return [(_asym_task, (a, s.r_grid, s.t_grid, s.margin_guard)) for a in s.a_grid]


_TASKS = {
    "prop-pro2": _tasks_pro2,
    "prop-pro1": _tasks_pro1,
    "prop-pro4": _tasks_pro4,
    "prop-pro3": _tasks_pro3,
    "thm-mult": _tasks_mult,
    "thm-power": _tasks_power,
    "thm-g-monotone": _tasks_g,
    "identities": _tasks_identities,
    "derivatives": _tasks_derivatives,
    "asymptotics": _tasks_asymptotics,
}
