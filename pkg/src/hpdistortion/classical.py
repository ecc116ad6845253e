"""Classical (a = 1/2) elliptic integrals by the arithmetic-geometric mean.

This path shares no code with the hypergeometric series in
:mod:`hpdistortion.elliptic`; it exists as an independent cross-check of the
a = 1/2 specialization and is never used inside verification sweeps.
"""

from __future__ import annotations

import math

from .errors import DomainError, PoleError


def _comp(r: float) -> float:
    return math.sqrt((1.0 - r) * (1.0 + r))


_AGM_STEPS = 64


def agm(x: float, y: float) -> float:
    for _ in range(_AGM_STEPS):
        if abs(x - y) <= 4e-16 * x:
            break
        x, y = 0.5 * (x + y), math.sqrt(x * y)
    return 0.5 * (x + y)


def ellipk(r: float, r_comp: float | None = None) -> float:
    """K(r) = pi / (2 AGM(1, r'))."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"modulus r={r!r} outside [0, 1]")
    rc = _comp(r) if r_comp is None else r_comp
    if rc == 0.0:
        raise PoleError("K has a logarithmic pole at r = 1")
    return math.pi / (2.0 * agm(1.0, rc))


def ellipe(r: float, r_comp: float | None = None) -> float:
    """E(r) = K(r) (1 - sum_n 2^(n-1) c_n^2) along the AGM sequence."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"modulus r={r!r} outside [0, 1]")
    rc = _comp(r) if r_comp is None else r_comp
    if rc == 0.0:
        return 1.0
    x, y, c = 1.0, rc, r
    acc = 0.5 * c * c
    w = 0.5
    for _ in range(_AGM_STEPS):
        if abs(c) <= 1e-17:
            break
        c = 0.5 * (x - y)
        x, y = 0.5 * (x + y), math.sqrt(x * y)
        w *= 2.0
        acc += w * c * c
    return math.pi / (2.0 * x) * (1.0 - acc)


def grotzsch_mu(r: float) -> float:
    rc = _comp(r)
    return 0.5 * math.pi * ellipk(rc, r) / ellipk(r, rc)


def hubner_m(r: float) -> float:
    rc = _comp(r)
    return 2.0 / math.pi * rc * rc * ellipk(rc, r) * ellipk(r, rc)


def mult_exponents(r: float, t: float) -> tuple[float, float]:
    """(m(r) + m(t) - m(rt), mu(r) + mu(t) - mu(rt)) for the classical case."""
    x = r * t
    return (
        hubner_m(r) + hubner_m(t) - hubner_m(x),
        grotzsch_mu(r) + grotzsch_mu(t) - grotzsch_mu(x),
    )


def power_exponents(r: float, p: float) -> tuple[float, float]:
    """(p m(r) - m(r^p), p mu(r) - mu(r^p)) for the classical case."""
    x = r**p
    return p * hubner_m(r) - hubner_m(x), p * grotzsch_mu(r) - grotzsch_mu(x)
