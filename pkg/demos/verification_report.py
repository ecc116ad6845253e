# Running a verification sweep and reading its report.
from hpdistortion import NamedFn, check_monotone, find_sign_change
from hpdistortion.sweeps import SweepSpec, run_suite

spec = SweepSpec("thm-power", a_grid=[0.1, 0.5], r_grid=[0.2, 0.8], p_grid=[0.5, 2.0])
rep = run_suite(spec)
print(rep.summary())
print("first indeterminate entry:", rep.indeterminate[0].params if rep.indeterminate else None)

# a failing direction claim shows up as failures, not as an exception
f9 = NamedFn("f9", {"a": 0.3})
bad = check_monotone(f9, [0.2, 0.4, 0.6, 0.8], "decreasing")
print(bad.summary())

g8 = NamedFn("g8", {"a": 0.3, "r": 0.5, "p": 2.0})
k0 = find_sign_change(g8, 1.0, 50.0, derivative=True)
print(f"g8 turns from decreasing to increasing at K = {k0:.8f}")

text = rep.to_json()
print(f"JSON report: {len(text)} bytes")
