"""Grötzsch ring function mu_a, its inverse, phi_K^a, m_a and the modular equation.

The inverse of mu_a is found by Newton's method on u = log r, where mu_a is
nearly linear (mu_a(r) ~ R(a)/2 - log r as r -> 0). Values above the
symmetric point pi/(2 sin(pi a)) are reflected through the product identity
mu_a(r) mu_a(r') = (pi/(2 sin(pi a)))**2 so the solver only ever works on
r <= 1/sqrt(2), where it resolves either r or r' to full relative precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import HALF_PI, E, K, Modulus, _R, _interior, as_modulus, kd_combo
from .errors import ConvergenceError, DomainError
from .special import as_signature

MU_INV_TOL = 1e-12
MODULAR_TOL = 1e-9
MAX_ITER = 100

# log-modulus below which exp() is clamped to 0 and the result flagged
_LOG_SATURATION = -700.0
# beyond this the correction to mu ~ R/2 - log r is below double precision
_ASYMPTOTIC_GAP = 20.0
_LOG_HALF_SQRT2 = -0.5 * math.log(2.0)


@dataclass(frozen=True)
class DistortionCoeff:
    K: float

    def __post_init__(self):
        if not (self.K > 0 and math.isfinite(self.K)):
            raise DomainError(f"distortion coefficient K={self.K!r} must be in (0, inf)")
        object.__setattr__(self, "K", float(self.K))

    def __float__(self) -> float:
        return self.K

    @property
    def reciprocal(self) -> "DistortionCoeff":
        return DistortionCoeff(1.0 / self.K)


def _coeff(K) -> float:
    return DistortionCoeff(float(K)).K


@dataclass(frozen=True)
class ModularSolution:
    s: Modulus
    residual: float
    iterations: int


@dataclass(frozen=True)
class Image:
    """phi_K^a(r) together with the quantities derived from it downstream.

    ``log_s``/``log_s_comp`` stay exact where ``s`` itself has been clamped,
    and ``K_s`` is K_a(s) (finite even when s rounds to 1).
    """

    s: Modulus
    log_s: float
    log_s_comp: float
    K_s: float
    mu_s: float
    iterations: int


def mu(a, m) -> float:
    """mu_a(r) = pi/(2 sin(pi a)) * K_a(r')/K_a(r) for 0 < r < 1."""
    sig = as_signature(a)
    m = as_modulus(m)
    _interior(m, "mu")
    return sig.mu_center * K(sig, m.swap()) / K(sig, m)


def dmu_dr(a, m) -> float:
    """dmu_a/dr = -pi^2 / (4 r r'^2 K_a(r)^2)."""
    sig = as_signature(a)
    m = as_modulus(m)
    _interior(m, "dmu_dr")
    return -(math.pi**2) / (4.0 * m.r * m.r_comp**2 * K(sig, m) ** 2)


def _log1m_exp2(u: float) -> float:
    """log(sqrt(1 - exp(2u))) for u < 0."""
    return 0.5 * math.log1p(-math.exp(2.0 * u))


def _solve_small(a: float, y: float, max_iter: int) -> tuple[float, int]:
    """log r with mu_a(r) = y, for y >= pi/(2 sin(pi a)) (so r <= 1/sqrt(2))."""
    sig = as_signature(a)
    half_R = 0.5 * _R(sig.a)
    if y > half_R + _ASYMPTOTIC_GAP:
        return half_R - y, 0

    lo, hi = -math.inf, _LOG_HALF_SQRT2
    u = min(half_R - y, hi)
    for it in range(1, max_iter + 1):
        m = Modulus.from_r(math.exp(u))
        k = K(sig, m)
        f = sig.mu_center * K(sig, m.swap()) / k - y
        if f == 0.0:
            return u, it
        if f > 0:
            lo = u
        else:
            hi = u
        slope = -(math.pi**2) / (4.0 * m.r_comp**2 * k * k)
        step = f / slope
        u_new = u - step
        if not lo < u_new < hi:
            u_new = 0.5 * (hi + lo) if math.isfinite(lo) else u - 1.0
        if abs(u_new - u) <= 1e-13 * max(1.0, abs(u)):
            return u_new, it
        u = u_new
    raise ConvergenceError(f"mu_inv did not converge in {max_iter} iterations (a={sig.a}, y={y})")


def mu_inv_logs(a, y: float, tol: float = MU_INV_TOL, max_iter: int = MAX_ITER) -> tuple[float, float, int]:
    """Return (log r, log r', iterations) for r = mu_a^{-1}(y)."""
    sig = as_signature(a)
    if not y > 0 or not math.isfinite(y):
        raise DomainError(f"mu_inv needs a finite y > 0, got {y!r}")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    c = sig.mu_center
    if y >= c:
        u, it = _solve_small(sig.a, y, max_iter)
        log_r, log_rc = u, _log1m_exp2(u)
        target = y
    else:
        target = c * c / y
        u, it = _solve_small(sig.a, target, max_iter)
        log_r, log_rc = _log1m_exp2(u), u
    if it and u > _LOG_SATURATION:
        small = Modulus.from_r(math.exp(u))
        resid = sig.mu_center * K(sig, small.swap()) / K(sig, small) - target
        if abs(resid) > tol * max(1.0, target):
            raise ConvergenceError(
                f"mu_inv residual {resid:.3e} exceeds tolerance at a={sig.a}, y={y}"
            )
    return log_r, log_rc, it


def _modulus_from_logs(log_r: float, log_rc: float) -> Modulus:
    if log_r <= log_rc:
        if log_r < _LOG_SATURATION:
            return Modulus(0.0, 1.0, saturated=True)
        return Modulus.from_r(math.exp(log_r))
    if log_rc < _LOG_SATURATION:
        return Modulus(1.0, 0.0, saturated=True)
    return Modulus.from_comp(math.exp(log_rc))


def mu_inv(a, y: float, tol: float = MU_INV_TOL, max_iter: int = MAX_ITER) -> Modulus:
    """The r in (0, 1) with mu_a(r) = y.

    When the solution lies within exp(-700) of 0 or 1 it is clamped to the
    endpoint and returned with ``saturated=True``.
    """
    log_r, log_rc, _ = mu_inv_logs(a, y, tol, max_iter)
    return _modulus_from_logs(log_r, log_rc)


def _endpoint(m: Modulus) -> Modulus | None:
    if m.r == 0.0:
        return Modulus(0.0, 1.0)
    if m.r_comp == 0.0:
        return Modulus(1.0, 0.0)
    return None


def phi_image(a, K_coef, m, tol: float = MU_INV_TOL, max_iter: int = MAX_ITER) -> Image:
    sig = as_signature(a)
    kc = _coeff(K_coef)
    m = as_modulus(m)
    _interior(m, "phi_image")
    y = mu(sig, m) / kc
    log_s, log_sc, it = mu_inv_logs(sig, y, tol, max_iter)
    s = _modulus_from_logs(log_s, log_sc)
    if s.r_comp == 0.0:
        # leading term of the log expansion; the rest is O(s'^2)
        K_s = 0.5 * sig.sin_pi_a * (_R(sig.a) - 2.0 * log_sc)
    else:
        K_s = K(sig, s)
    return Image(s, log_s, log_sc, K_s, y, it)


def phi(a, K_coef, m, tol: float = MU_INV_TOL, max_iter: int = MAX_ITER) -> Modulus:
    """phi_K^a(r) = mu_a^{-1}(mu_a(r)/K), extended by phi(0) = 0 and phi(1) = 1."""
    _coeff(K_coef)
    m = as_modulus(m)
    end = _endpoint(m)
    if end is not None:
        return end
    sig = as_signature(a)
    return mu_inv(sig, mu(sig, m) / _coeff(K_coef), tol, max_iter)


def log_phi(a, K_coef, m, tol: float = MU_INV_TOL, max_iter: int = MAX_ITER) -> float:
    """log phi_K^a(r), accurate even where phi itself underflows."""
    sig = as_signature(a)
    m = as_modulus(m)
    _interior(m, "log_phi")
    return mu_inv_logs(sig, mu(sig, m) / _coeff(K_coef), tol, max_iter)[0]


def dphi_dK(a, K_coef, m) -> float:
    """ds/dK = 4 s s'^2 K_a(s)^2 mu_a(r) / (pi^2 K^2) with s = phi_K^a(r)."""
    sig = as_signature(a)
    kc = _coeff(K_coef)
    m = as_modulus(m)
    img = phi_image(sig, kc, m)
    s = img.s
    return 4.0 * s.r * s.r_comp**2 * img.K_s**2 * mu(sig, m) / (math.pi**2 * kc * kc)


def dphi_dK_alt(a, K_coef, m) -> float:
    """The same derivative written with mu_a(s)/K in place of mu_a(r)/K^2."""
    sig = as_signature(a)
    kc = _coeff(K_coef)
    m = as_modulus(m)
    img = phi_image(sig, kc, m)
    s = img.s
    return 4.0 * s.r * s.r_comp**2 * img.K_s**2 * mu(sig, s) / (math.pi**2 * kc)


def m_fn(a, m) -> float:
    """m_a(r) = 2/(pi sin(pi a)) * r'^2 K_a(r') K_a(r)."""
    sig = as_signature(a)
    m = as_modulus(m)
    _interior(m, "m_fn")
    return 2.0 / (math.pi * sig.sin_pi_a) * m.r_comp**2 * K(sig, m.swap()) * K(sig, m)


def dm_dr(a, m) -> float:
    """dm_a/dr = 1/r + 4K_a/(pi r sin(pi a)) [(1-2a) r^2 K_a' - 2(1-a) E_a']."""
    sig = as_signature(a)
    m = as_modulus(m)
    _interior(m, "dm_dr")
    a_ = sig.a
    comp = m.swap()
    bracket = (1.0 - 2.0 * a_) * m.r**2 * K(sig, comp) - 2.0 * (1.0 - a_) * E(sig, comp)
    return 1.0 / m.r + 4.0 * K(sig, m) / (math.pi * m.r * sig.sin_pi_a) * bracket


def modular_residual(a, p: float, r, s) -> float:
    """F(1-s^2)/F(s^2) - p F(1-r^2)/F(r^2) with F = F(a, 1-a; 1; .)."""
    sig = as_signature(a)
    r, s = as_modulus(r), as_modulus(s)
    return K(sig, s.swap()) / K(sig, s) - p * K(sig, r.swap()) / K(sig, r)


def solve_modular(a, degree_p: float, m, tol: float = MODULAR_TOL, max_iter: int = MAX_ITER) -> ModularSolution:
    """Solve the generalized modular equation of degree p for s.

    The solution is s = phi_{1/p}^a(r), i.e. mu_a(s) = p mu_a(r).
    """
    sig = as_signature(a)
    if not degree_p > 0 or not math.isfinite(degree_p):
        raise DomainError(f"modular degree p={degree_p!r} must be in (0, inf)")
    m = as_modulus(m)
    _interior(m, "solve_modular")
    img = phi_image(sig, 1.0 / degree_p, m, max_iter=max_iter)
    s = img.s
    if s.saturated:
        # mu_a(s) is only known through the image; compare in mu form
        residual = (img.mu_s - degree_p * mu(sig, m)) / sig.mu_center
    else:
        residual = modular_residual(sig, degree_p, m, s)
    if not abs(residual) <= tol * max(1.0, degree_p * mu(sig, m) / sig.mu_center):
        raise ConvergenceError(f"modular equation residual {residual:.3e} exceeds {tol:.1e}")
    return ModularSolution(s, residual, img.iterations)


def kd_at(a, s: Modulus, K_s: float) -> float:
    """(1 + (2a-1)/(2(1-a)) s^2) K_a(s) - E_a(s) given a precomputed K_a(s)."""
    sig = as_signature(a)
    if s.r * s.r <= 0.5:
        return kd_combo(sig, s)
    c = (2.0 * sig.a - 1.0) / (2.0 * (1.0 - sig.a))
    return (1.0 + c * s.r * s.r) * K_s - E(sig, s)


__all__ = [
    "HALF_PI",
    "DistortionCoeff",
    "Image",
    "ModularSolution",
    "dm_dr",
    "dmu_dr",
    "dphi_dK",
    "dphi_dK_alt",
    "kd_at",
    "log_phi",
    "m_fn",
    "modular_residual",
    "mu",
    "mu_inv",
    "mu_inv_logs",
    "phi",
    "phi_image",
    "solve_modular",
]
