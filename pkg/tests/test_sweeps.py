import pytest

from hpdistortion.errors import DomainError
from hpdistortion.sweeps import SUITES, SweepSpec, log_grid, run_suite, unit_grid


def test_grids():
    g = unit_grid(19)
    assert g[0] == 0.05 and g[-1] == 0.95 and len(g) == 19
    assert g[9] == 0.5
    k = log_grid(-1, 1, 2)
    assert k[2] == 1.0 and len(k) == 5
    with pytest.raises(DomainError):
        unit_grid(0)


def test_spec_validation():
    with pytest.raises(DomainError):
        SweepSpec("nope")
    with pytest.raises(DomainError):
        SweepSpec("thm-mult", K_grid=[0.5])
    with pytest.raises(DomainError):
        SweepSpec("thm-mult", r_grid=[1.0])
    with pytest.raises(DomainError):
        SweepSpec("thm-mult", a_grid=[0.7])
    with pytest.raises(DomainError):
        SweepSpec("thm-mult", workers=0)
    assert "workers" not in SweepSpec("identities").to_dict()


def test_suite_order_is_stable():
    assert SUITES[0] == "prop-pro2" and SUITES[-1] == "asymptotics" and len(SUITES) == 10


def test_small_mult_sweep_serial_equals_parallel():
    kw = dict(a_grid=[0.25], r_grid=[0.3, 0.7], t_grid=[0.4], K_grid=[1.0 + 1e-6, 2.0])
    serial = run_suite(SweepSpec("thm-mult", **kw))
    parallel = run_suite(SweepSpec("thm-mult", workers=2, **kw))
    assert serial.passed
    serial.elapsed_ms = parallel.elapsed_ms = None
    assert serial.to_dict() == parallel.to_dict()


def test_indeterminate_entries_only_near_K_one():
    rep = run_suite(SweepSpec("thm-mult", a_grid=[0.1], r_grid=[0.2, 0.8], t_grid=[0.5]))
    assert rep.passed
    assert all(abs(c.params["K"] - 1.0) <= 1e-6 for c in rep.indeterminate)


def test_small_power_sweep_passes():
    rep = run_suite(SweepSpec("thm-power", a_grid=[1 / 3], r_grid=[0.5], p_grid=[0.5, 1.0, 3.0]))
    assert rep.passed, rep.failures[:3]
    assert rep.expected_violations
