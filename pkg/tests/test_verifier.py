import math

import pytest

from hpdistortion.distortion import mu, phi
from hpdistortion.errors import DomainError
from hpdistortion.verifier import (
    CheckRecord,
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


def test_namedfn_validation():
    NamedFn("f1", {"a": 0.3})
    with pytest.raises(DomainError):
        NamedFn("f12", {"a": 0.3})
    with pytest.raises(DomainError):
        NamedFn("f4", {"a": 0.3})
    with pytest.raises(DomainError):
        NamedFn("f1", {"a": 0.3, "p": 2.0})
    with pytest.raises(DomainError):
        NamedFn("f1", {"a": 0.6})
    with pytest.raises(DomainError):
        NamedFn("f7", {"a": 0.3, "x": 0.5, "r": 0.4})
    with pytest.raises(DomainError):
        NamedFn("g8", {"a": 0.3, "r": 0.5, "p": -1.0})
    with pytest.raises(DomainError):
        NamedFn("g3", {"a": 0.3, "r": 1.0, "t": 0.5})


def test_log_and_deriv_flags_restricted():
    with pytest.raises(DomainError):
        eval_named(NamedFn("f1", {"a": 0.3}), 0.5, log=True)
    with pytest.raises(DomainError):
        eval_named(NamedFn("g1", {"a": 0.3, "r": 0.5, "t": 0.5, "lam": 1.0}), 2.0, deriv=True)


def test_g_functions_at_K_one():
    a, r, t, p = 0.3, 0.4, 0.7, 2.5
    alpha, _ = sharp_exp_mult(a, r, t)
    mb, _ = sharp_exp_power(a, r, p)
    assert NamedFn("g1", {"a": a, "r": r, "t": t, "lam": 0.7})(1.0) == pytest.approx(math.exp(0.7), rel=1e-13)
    assert NamedFn("g2", {"a": a, "r": r, "t": t, "tau": -0.2})(1.0) == pytest.approx(math.exp(-0.2), rel=1e-13)
    assert NamedFn("g3", {"a": a, "r": r, "t": t})(1.0) == pytest.approx(alpha, rel=1e-12)
    assert NamedFn("g8", {"a": a, "r": r, "p": p})(1.0) == pytest.approx(mb, rel=1e-12)


def test_g1_direct_definition():
    a, r, t, lam, K = 0.2, 0.3, 0.6, 1.5, 3.0
    direct = phi(a, K, r).r * phi(a, K, t).r / phi(a, K, r * t).r * math.exp(lam / K)
    assert NamedFn("g1", {"a": a, "r": r, "t": t, "lam": lam})(K) == pytest.approx(direct, rel=1e-11)


def test_f7_f8_log_consistent():
    fn = NamedFn("f8", {"a": 0.25, "x": 0.2, "r": 0.6})
    assert math.log(fn(2.0)) == pytest.approx(eval_named(fn, 2.0, log=True), rel=1e-13)


@pytest.mark.parametrize("name,extra", [("g3", {"t": 0.6}), ("g8", {"p": 0.4}), ("g8", {"p": 3.0})])
@pytest.mark.parametrize("K", [0.5, 1.5, 6.0])
def test_closed_form_K_derivative(name, extra, K):
    fn = NamedFn(name, {"a": 0.3, "r": 0.45, **extra})
    h = 1e-5 * K
    fd = (fn(K + h) - fn(K - h)) / (2 * h)
    assert eval_named(fn, K, deriv=True) == pytest.approx(fd, rel=1e-7, abs=1e-12)


def test_recorder_classification():
    rec = Recorder("unit", guard=1e-11)
    rec.less(0.0, 1.0)
    rec.less(0.0, 1e-13)
    rec.less(0.0, -1.0)
    rec.less(0.0, math.nan)
    rec.expect_violation(1.0, 0.0)
    rec.expect_violation(0.0, 1.0)
    rep = rec.finish()
    assert rep.total_checks == 6
    assert len(rep.indeterminate) == 1
    assert len(rep.expected_violations) == 1
    assert len(rep.failures) == 3
    assert rep.min_margin == -1.0
    assert not rep.passed


def test_report_json_round_trip_and_merge():
    rep = VerificationReport("x", {"k": 1}, 3, [CheckRecord({"r": 0.5}, 1.0, 0.0, -1.0)], min_margin=-1.0)
    back = VerificationReport.from_json(rep.to_json())
    assert back == rep
    other = VerificationReport("y", total_checks=2, min_margin=0.5)
    rep.merge(other)
    assert rep.total_checks == 5 and rep.min_margin == -1.0
    assert "FAIL" in rep.summary()


def test_check_monotone_detects_direction():
    fn = NamedFn("f9", {"a": 0.3})
    grid = [0.1 * k for k in range(1, 10)]
    assert check_monotone(fn, grid, "increasing").passed
    bad = check_monotone(fn, grid, "decreasing")
    assert len(bad.failures) == len(grid) - 1
    assert bad.failures[0].params["a"] == 0.3
    with pytest.raises(DomainError):
        check_monotone(fn, grid[::-1], "increasing")
    with pytest.raises(DomainError):
        check_monotone(fn, grid, "up")


def test_check_range():
    fn = NamedFn("f1", {"a": 0.3})
    ok = check_range(fn, "lower", math.pi / (2 * 0.7), 1e-7, 1e-6)
    assert ok.passed, ok.failures
    bad = check_range(fn, "lower", 0.0, 1e-7, 1e-6)
    assert not bad.passed
    assert bad.failures[0].params["tolerance"] == 1e-6


def test_theorem_mult_example():
    rep = check_theorem_mult(0.25, 0.3, 0.6, [1.0, 1.5, 2.0, 5.0, 20.0])
    assert rep.passed, rep.failures[:3]
    assert len(rep.expected_violations) == 4
    assert rep.min_margin > 0


def test_theorem_mult_classical_reduction_recorded():
    rep = check_theorem_mult(0.5, 0.3, 0.6, [2.0])
    assert rep.passed


def test_theorem_mult_rejects_K_below_one():
    with pytest.raises(DomainError):
        check_theorem_mult(0.25, 0.3, 0.6, [0.5])


@pytest.mark.parametrize("p", [0.3, 1.0, 2.5])
def test_theorem_power_example(p):
    rep = check_theorem_power(0.2, 0.5, p, [1.5, 3.0, 10.0])
    assert rep.passed, rep.failures[:3]
    if p == 1.0:
        assert not rep.expected_violations


def test_theorem_without_falsification():
    rep = check_theorem_power(0.2, 0.5, 2.0, [2.0], falsify_epsilon=0)
    assert rep.passed and not rep.expected_violations


def test_find_sign_change():
    root = find_sign_change(lambda k: math.log(k) - 1.0, 1.0, 10.0, tol=1e-12)
    assert root == pytest.approx(math.e, rel=1e-11)
    with pytest.raises(DomainError):
        find_sign_change(lambda k: k, 1.0, 2.0)
    with pytest.raises(DomainError):
        find_sign_change(lambda k: k - 1.5, 2.0, 1.0)


def test_g8_derivative_crossover_inside_bracket():
    fn = NamedFn("g8", {"a": 0.3, "r": 0.5, "p": 2.0})
    # the derivative underflows to 0 for large K, so keep the bracket modest
    k0 = find_sign_change(fn, 1.0 + 1e-9, 50.0, derivative=True)
    assert k0 > 1.0
    # g8 decreases then increases for p > 1
    assert eval_named(fn, k0 / 1.5, deriv=True) < 0 < eval_named(fn, k0 * 1.5, deriv=True)


def test_f6_matches_mu_definition():
    a, r, t = 0.3, 0.5, 0.4
    expected = mu(a, r) + mu(a, t) - mu(a, r * t)
    assert NamedFn("f6", {"a": a, "t": t})(r) == pytest.approx(expected, rel=1e-13)
