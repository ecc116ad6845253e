"""Scalar special functions: gamma, digamma, the Ramanujan constant and 2F1.

All arguments are real. The functions extend to complex arguments, but
nothing downstream needs them, so complex input is rejected rather than
silently truncated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from scipy import special as _sp

from .errors import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286061

DEFAULT_TOL = 2.0**-53
DEFAULT_MAX_TERMS = 10**6


@dataclass(frozen=True)
class SignatureParam:
    """The family parameter ``a`` in (0, 1/2]."""

    a: float

    def __post_init__(self):
        a = self.a
        if isinstance(a, complex) or not math.isfinite(a):
            raise DomainError(f"signature parameter must be a finite real, got {a!r}")
        if not 0.0 < a <= 0.5:
            raise DomainError(f"signature parameter a={a!r} outside (0, 1/2]")
        object.__setattr__(self, "a", float(a))

    def __float__(self) -> float:
        return self.a

    @property
    def sin_pi_a(self) -> float:
        return math.sin(math.pi * self.a)

    @property
    def mu_center(self) -> float:
        """pi / (2 sin(pi a)): the value of mu_a at r = 1/sqrt(2)."""
        return math.pi / (2.0 * self.sin_pi_a)


def as_signature(a) -> SignatureParam:
    if isinstance(a, SignatureParam):
        return a
    return SignatureParam(a)


@dataclass(frozen=True)
class HypergeomParams:
    """Arguments of F(a, b; c; x) restricted to the convergent real series."""

    a: float
    b: float
    c: float
    x: float

    def __post_init__(self):
        for name in ("a", "b", "c", "x"):
            v = getattr(self, name)
            if isinstance(v, complex) or not math.isfinite(v):
                raise DomainError(f"2F1 parameter {name}={v!r} must be a finite real")
        c = self.c
        if c <= 0 and c == math.floor(c):
            raise DomainError(f"2F1 lower parameter c={c!r} is a nonpositive integer")
        x = self.x
        if abs(x) > 1.0 or (abs(x) == 1.0 and not (x == 1.0 and self.c - self.a - self.b > 0)):
            raise DomainError(
                f"2F1 series needs |x| < 1, or x = 1 with c - a - b > 0 (x={x!r}, "
                f"c-a-b={self.c - self.a - self.b!r})"
            )


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_err_estimate: float
    terms_used: int
    converged: bool

    def __float__(self) -> float:
        return self.value

    def scaled(self, factor: float) -> "EvalResult":
        return EvalResult(
            self.value * factor, self.abs_err_estimate * abs(factor), self.terms_used, self.converged
        )


def gamma(x: float) -> float:
    """Euler gamma function for x > 0."""
    if not x > 0:
        raise DomainError(f"gamma is only provided for x > 0, got {x!r}")
    return math.gamma(x)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"digamma is only provided for x > 0, got {x!r}")
    return float(_sp.digamma(x))


def ramanujan_R(a) -> float:
    """R(a) = -2*gamma - psi(a) - psi(1 - a)."""
    a = as_signature(a).a
    return -2.0 * EULER_GAMMA - digamma(a) - digamma(1.0 - a)


def hyp2f1_terms(p: HypergeomParams) -> Iterator[float]:
    """Yield the terms (a)_n (b)_n / ((c)_n n!) x^n of the Gauss series."""
    a, b, c, x = p.a, p.b, p.c, p.x
    t = 1.0
    n = 0
    while True:
        yield t
        t *= (a + n) * (b + n) * x / ((c + n) * (n + 1))
        n += 1


def hyp2f1(p: HypergeomParams, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """Sum the Gauss hypergeometric series directly.

    Summation stops once two consecutive terms satisfy |t_n| <= tol*|S_n|.
    No transformation is applied, so convergence is slow when x is close
    to 1; callers needing accuracy there must transform first.
    """
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    a, b, c, x = p.a, p.b, p.c, p.x
    s = 0.0
    small = 0
    t = 1.0
    n = 0
    while n < max_terms:
        s += t
        if abs(t) <= tol * abs(s):
            small += 1
            if small == 2:
                break
        else:
            small = 0
        t *= (a + n) * (b + n) * x / ((c + n) * (n + 1))
        n += 1
    else:
        raise ConvergenceError(f"2F1 series did not converge in {max_terms} terms for {p}")

    # t is the last term added; estimate the remaining tail from it
    if t == 0.0:
        err = 0.0
    else:
        q = abs((a + n) * (b + n) * x / ((c + n) * (n + 1)))
        if x < 0.0 and q < 1.0:
            # alternating tail: bounded by the next term
            err = abs(t) * q
        elif q < 1.0 and abs(x) < 1.0:
            err = abs(t) * q / (1.0 - q)
        else:
            # x = 1: terms decay like n^-(1 + c - a - b)
            err = abs(t) * n / (c - a - b)
    n_used = n + 1
    converged = err <= tol * max(1.0, abs(s))
    return EvalResult(s, err, n_used, converged)
