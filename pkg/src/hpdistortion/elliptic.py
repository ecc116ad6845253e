"""Generalized complete elliptic integrals K_a, E_a and their r-derivatives.

A modulus is always carried together with its complement r' so that values
near r = 1 never go through the cancelling expression 1 - r**2. For
r**2 <= 1/2 the Gauss series in x = r**2 is summed directly; above that
the zero-balanced logarithmic expansion in x' = r'**2 is used, which
converges at the same geometric rate and resolves the log singularity of
K_a exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, PoleError
from .special import (
    DEFAULT_TOL,
    EvalResult,
    HypergeomParams,
    SignatureParam,
    as_signature,
    hyp2f1,
    ramanujan_R,
)

HALF_PI = 0.5 * math.pi

# switch from the x-series to the x'-series once r exceeds r'
_LOG_SWITCH = 0.5
_MAX_TERMS = 10_000


@dataclass(frozen=True)
class Modulus:
    """A modulus r in [0, 1] with its complement r' = sqrt(1 - r^2).

    ``saturated`` marks a value produced by clamping an underflowing
    inverse (see :func:`hpdistortion.distortion.mu_inv`).
    """

    r: float
    r_comp: float
    saturated: bool = False

    def __post_init__(self):
        r, rc = self.r, self.r_comp
        if not (0.0 <= r <= 1.0) or not (0.0 <= rc <= 1.0):
            raise DomainError(f"modulus outside [0, 1]: r={r!r}, r'={rc!r}")
        if abs(r * r + rc * rc - 1.0) > 1e-12:
            raise DomainError(f"inconsistent modulus pair r={r!r}, r'={rc!r}")

    @classmethod
    def from_r(cls, r: float) -> "Modulus":
        if isinstance(r, Modulus):
            return r
        r = float(r)
        if not 0.0 <= r <= 1.0:
            raise DomainError(f"modulus r={r!r} outside [0, 1]")
        return cls(r, math.sqrt((1.0 - r) * (1.0 + r)))

    @classmethod
    def from_comp(cls, r_comp: float) -> "Modulus":
        return cls.from_r(r_comp).swap()

    def swap(self) -> "Modulus":
        """The complementary modulus r'."""
        return Modulus(self.r_comp, self.r, self.saturated)

    def __float__(self) -> float:
        return self.r


def as_modulus(m) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus.from_r(m)


@dataclass(frozen=True)
class EllipticPair:
    K_val: float
    E_val: float


@lru_cache(maxsize=None)
def _R(a: float) -> float:
    return ramanujan_R(a)


def _interior(m: Modulus, name: str) -> None:
    # r may round to 1.0 while r' is still a positive number
    if not (m.r > 0.0 and m.r_comp > 0.0):
        raise DomainError(f"{name} requires 0 < r < 1, got r={m.r!r}, r'={m.r_comp!r}")


@lru_cache(maxsize=1 << 16)
def _k_log_series(a: float, rc: float) -> tuple[float, float, int]:
    """K_a from its expansion in x' = rc^2 about x = 1.

    K_a = (sin(pi a)/2) * sum_n A_n [h_n - ln x'] x'^n with
    A_n = ((a)_n (1-a)_n / n!^2) and h_n = 2psi(n+1) - psi(a+n) - psi(1-a+n).
    Every term is positive for x' < 1.
    """
    xc = rc * rc
    log_xc = 2.0 * math.log(rc)
    A = 1.0
    h = _R(a)
    s = 0.0
    n = 0
    t = 0.0
    while n < _MAX_TERMS:
        t = A * (h - log_xc)
        s += t
        if t <= DEFAULT_TOL * s:
            break
        h += 2.0 / (n + 1) - 1.0 / (a + n) - 1.0 / (1.0 - a + n)
        A *= (a + n) * (1.0 - a + n) / ((n + 1) ** 2) * xc
        n += 1
    scale = 0.5 * math.sin(math.pi * a)
    return scale * s, scale * t * xc / (1.0 - xc), n + 1


@lru_cache(maxsize=1 << 16)
def _e_log_series(a: float, rc: float) -> tuple[float, float, int]:
    """E_a near x = 1 (the c - a - b = 1 case of the log expansion).

    E_a = sin(pi a)/(2(1-a))
          + (sin(pi a)/2)(1-a) x' sum_n B_n [g_n - ln x'] x'^n
    with B_n = (a)_n (2-a)_n / (n! (n+1)!) and
    g_n = psi(n+1) + psi(n+2) - psi(a+n) - psi(2-a+n).
    """
    xc = rc * rc
    log_xc = 2.0 * math.log(rc)
    B = 1.0
    g = _R(a) + 1.0 - 1.0 / (1.0 - a)
    s = 0.0
    n = 0
    t = 0.0
    while n < _MAX_TERMS:
        t = B * (g - log_xc)
        s += t
        if t <= DEFAULT_TOL * s:
            break
        g += 1.0 / (n + 1) + 1.0 / (n + 2) - 1.0 / (a + n) - 1.0 / (2.0 - a + n)
        B *= (a + n) * (2.0 - a + n) / ((n + 1) * (n + 2)) * xc
        n += 1
    sin_pa = math.sin(math.pi * a)
    head = sin_pa / (2.0 * (1.0 - a))
    scale = 0.5 * sin_pa * (1.0 - a) * xc
    return head + scale * s, scale * t * xc / (1.0 - xc), n + 1


def ellint_K(a, m, tol: float = DEFAULT_TOL) -> EvalResult:
    """K_a(r) = (pi/2) F(a, 1-a; 1; r^2) for 0 <= r < 1."""
    a = as_signature(a).a
    m = as_modulus(m)
    if m.r_comp == 0.0:
        raise PoleError(f"K_a has a logarithmic pole at r = 1 (a={a})")
    if m.r * m.r <= _LOG_SWITCH:
        return hyp2f1(HypergeomParams(a, 1.0 - a, 1.0, m.r * m.r), tol).scaled(HALF_PI)
    val, err, n = _k_log_series(a, m.r_comp)
    return EvalResult(val, err, n, err <= tol * val)


def ellint_E(a, m, tol: float = DEFAULT_TOL) -> EvalResult:
    """E_a(r) = (pi/2) F(a-1, 1-a; 1; r^2) for 0 <= r <= 1."""
    a = as_signature(a).a
    m = as_modulus(m)
    if m.r_comp == 0.0:
        return EvalResult(math.sin(math.pi * a) / (2.0 * (1.0 - a)), 0.0, 0, True)
    if m.r * m.r <= _LOG_SWITCH:
        return hyp2f1(HypergeomParams(a - 1.0, 1.0 - a, 1.0, m.r * m.r), tol).scaled(HALF_PI)
    val, err, n = _e_log_series(a, m.r_comp)
    return EvalResult(val, err, n, err <= tol * val)


def K(a, m) -> float:
    """Shorthand for ``ellint_K(a, m).value``."""
    return ellint_K(a, m).value


def E(a, m) -> float:
    return ellint_E(a, m).value


def elliptic_pair(a, m) -> EllipticPair:
    return EllipticPair(K(a, m), E(a, m))


def _small_x_sum(a: float, x: float, coeff) -> float:
    """sum_n coeff(n) A_n x^n with A_n = (a)_n (1-a)_n / n!^2."""
    A = 1.0
    s = 0.0
    n = 0
    while n < _MAX_TERMS:
        t = coeff(n) * A
        s += t
        if abs(t) <= DEFAULT_TOL * abs(s) and n > 0:
            break
        A *= (a + n) * (1.0 - a + n) / ((n + 1) ** 2) * x
        n += 1
    return s


def k_minus_e(a, m) -> float:
    """K_a(r) - E_a(r), summed termwise for small r to avoid cancellation."""
    a = as_signature(a).a
    m = as_modulus(m)
    x = m.r * m.r
    if x <= _LOG_SWITCH:
        # sum_{n>=1} A_n n/(a+n-1) x^n, shifted down one index
        return HALF_PI * x * _small_x_sum(a, x, lambda n: (1.0 - a + n) / (n + 1))
    return K(a, m) - E(a, m)


def e_minus_comp2_k(a, m) -> float:
    """E_a(r) - r'^2 K_a(r) = x (pi/2) sum_n a A_n x^n / (n + 1)."""
    a = as_signature(a).a
    m = as_modulus(m)
    x = m.r * m.r
    if x <= _LOG_SWITCH:
        return HALF_PI * x * _small_x_sum(a, x, lambda n: a / (n + 1))
    if m.r_comp == 0.0:
        return E(a, m)
    return E(a, m) - m.r_comp**2 * K(a, m)


def kd_combo(a, m) -> float:
    """(1 + (2a-1)/(2(1-a)) r^2) K_a(r) - E_a(r).

    For small r this is O(r^2); the series
    (pi/2) sum_n (2a^2-2a+n+1)/(2(1-a)(n+1)) A_n x^(n+1) is used there.
    """
    a = as_signature(a).a
    m = as_modulus(m)
    x = m.r * m.r
    if x <= _LOG_SWITCH:
        return HALF_PI * x * _small_x_sum(
            a, x, lambda n: (2 * a * a - 2 * a + n + 1) / (2.0 * (1.0 - a) * (n + 1))
        )
    c = (2.0 * a - 1.0) / (2.0 * (1.0 - a))
    return (1.0 + c * x) * K(a, m) - E(a, m)


def dK_dr(a, m) -> float:
    """dK_a/dr = 2(1-a)(E_a - r'^2 K_a) / (r r'^2)."""
    a = as_signature(a).a
    m = as_modulus(m)
    _interior(m, "dK_dr")
    return 2.0 * (1.0 - a) * e_minus_comp2_k(a, m) / (m.r * m.r_comp**2)


def dE_dr(a, m) -> float:
    """dE_a/dr = 2(a-1)(K_a - E_a) / r."""
    a = as_signature(a).a
    m = as_modulus(m)
    _interior(m, "dE_dr")
    return 2.0 * (a - 1.0) * k_minus_e(a, m) / m.r


__all__ = [
    "E",
    "K",
    "EllipticPair",
    "Modulus",
    "SignatureParam",
    "as_modulus",
    "dE_dr",
    "dK_dr",
    "e_minus_comp2_k",
    "elliptic_pair",
    "ellint_E",
    "ellint_K",
    "k_minus_e",
    "kd_combo",
]
