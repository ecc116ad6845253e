import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hpdistortion.elliptic import (
    E,
    K,
    Modulus,
    dE_dr,
    dK_dr,
    e_minus_comp2_k,
    ellint_E,
    ellint_K,
    k_minus_e,
    kd_combo,
)
from hpdistortion.errors import DomainError, PoleError

# (a, r, K_a(r), E_a(r)); oracle: mpmath.hyp2f1 at 40 digits
ORACLE = [
    (0.1, 0.3, 1.5841572068160179, 1.4557793623632245),
    (0.25, 0.6, 1.7048753139729173, 1.2380395234540448),
    (1 / 3, 0.9, 2.1958166656061465, 0.90154932862366716),
    (0.5, 0.5, 1.685750354812596, 1.4674622093394272),
    (0.2, 0.99, 2.654432759862172, 0.40846271879781937),
    (0.4, 0.999999, 7.6417119936316337, 0.79255588654124304),
]


@pytest.mark.parametrize("a,r,k_ref,e_ref", ORACLE)
def test_K_E_against_oracle(a, r, k_ref, e_ref):
    assert K(a, r) == pytest.approx(k_ref, rel=5e-15)
    assert E(a, r) == pytest.approx(e_ref, rel=5e-15)


def test_classical_golden_value():
    assert ellint_K(0.5, Modulus.from_r(1 / math.sqrt(2))).value == pytest.approx(1.8540746773013719, rel=1e-11)


def test_values_at_zero():
    for a in (0.1, 0.3, 0.5):
        assert K(a, 0.0) == pytest.approx(math.pi / 2, rel=1e-15)
        assert E(a, 0.0) == pytest.approx(math.pi / 2, rel=1e-15)


def test_E_at_one_closed_form():
    a = 0.3
    assert E(a, Modulus(1.0, 0.0)) == pytest.approx(math.sin(math.pi * a) / (2 * (1 - a)), rel=1e-15)


def test_K_pole_and_domain():
    with pytest.raises(PoleError):
        ellint_K(0.3, Modulus(1.0, 0.0))
    with pytest.raises(DomainError):
        K(0.3, 1.2)
    with pytest.raises(DomainError):
        K(0.3, -0.1)
    with pytest.raises(DomainError):
        K(0.7, 0.5)


def test_modulus_pair_consistency():
    with pytest.raises(DomainError):
        Modulus(0.6, 0.6)
    m = Modulus.from_r(0.6)
    assert m.r_comp == pytest.approx(0.8, rel=1e-15)
    assert m.swap().swap() == m
    assert Modulus.from_comp(0.8).r == pytest.approx(0.6, rel=1e-15)


def test_near_one_uses_complement_exactly():
    # r = 1 - 1e-20 is not representable; the complement carries the information
    m = Modulus(1.0, 1e-10)
    a = 0.5
    lead = 0.5 * math.sin(math.pi * a) * (math.log(16.0) - 2 * math.log(1e-10))
    assert K(a, m) == pytest.approx(lead, rel=1e-18 + 1e-19)


def test_result_metadata():
    res = ellint_K(0.25, Modulus.from_r(0.9))
    assert res.converged and res.terms_used > 1
    assert res.abs_err_estimate < 1e-14 * res.value


@given(st.floats(0.01, 0.5), st.floats(0.001, 0.999))
@settings(max_examples=80, deadline=None)
def test_combinations_consistent_with_direct_difference(a, r):
    m = Modulus.from_r(r)
    k, e = K(a, m), E(a, m)
    assert k_minus_e(a, m) == pytest.approx(k - e, rel=1e-12, abs=1e-14)
    assert e_minus_comp2_k(a, m) == pytest.approx(e - m.r_comp**2 * k, rel=1e-12, abs=1e-14)
    c = (2 * a - 1) / (2 * (1 - a))
    assert kd_combo(a, m) == pytest.approx((1 + c * r * r) * k - e, rel=1e-11, abs=1e-14)


def test_small_r_combinations_keep_relative_accuracy():
    a, r = 0.3, 1e-6
    x = r * r
    # leading terms of the series
    assert k_minus_e(a, r) == pytest.approx(math.pi / 2 * x * (1 - a), rel=1e-10)
    assert e_minus_comp2_k(a, r) == pytest.approx(math.pi / 2 * x * a, rel=1e-10)
    assert kd_combo(a, r) == pytest.approx(math.pi / 2 * x * (2 * a * a - 2 * a + 1) / (2 * (1 - a)), rel=1e-10)


def test_legendre_relation_classical():
    # E K' + E' K - K K' = pi/2 at a = 1/2
    for r in (0.1, 0.5, 0.9):
        m = Modulus.from_r(r)
        c = m.swap()
        lhs = E(0.5, m) * K(0.5, c) + E(0.5, c) * K(0.5, m) - K(0.5, m) * K(0.5, c)
        assert lhs == pytest.approx(math.pi / 2, rel=1e-14)


def test_derivative_oracles():
    # oracle: mpmath.diff of the hypergeometric definitions
    assert dK_dr(0.5, 0.5) == pytest.approx(0.54173184861328033, rel=1e-13)
    assert dE_dr(0.5, 0.5) == pytest.approx(-0.43657629094633777, rel=1e-13)


@pytest.mark.parametrize("a", [0.1, 0.25, 1 / 3, 0.5])
@pytest.mark.parametrize("r", [0.05, 0.3, 0.7, 0.95])
def test_derivatives_against_finite_differences(a, r):
    h = 1e-5
    fd_k = (K(a, r + h) - K(a, r - h)) / (2 * h)
    fd_e = (E(a, r + h) - E(a, r - h)) / (2 * h)
    assert dK_dr(a, r) == pytest.approx(fd_k, rel=1e-7, abs=1e-8)
    assert dE_dr(a, r) == pytest.approx(fd_e, rel=1e-7, abs=1e-8)


def test_derivatives_need_interior():
    with pytest.raises(DomainError):
        dK_dr(0.3, 0.0)
    with pytest.raises(DomainError):
        dE_dr(0.3, Modulus(1.0, 0.0))


def test_log_switch_continuity():
    # both sides of r^2 = 1/2 must agree to rounding
    a = 0.2
    lo = Modulus.from_r(math.sqrt(0.5) - 1e-12)
    hi = Modulus.from_r(math.sqrt(0.5) + 1e-12)
    assert K(a, lo) == pytest.approx(K(a, hi), rel=1e-11)
    assert E(a, lo) == pytest.approx(E(a, hi), rel=1e-11)
