# Sharp submultiplicative and power bounds, checked numerically.
import math

from hpdistortion import (
    check_theorem_mult,
    check_theorem_power,
    phi,
    sharp_exp_mult,
    sharp_exp_power,
)

a, r, t = 0.25, 0.3, 0.6
alpha, gamma = sharp_exp_mult(a, r, t)
print(f"alpha = {alpha:.12f}, gamma = {gamma:.12f}")
for k in (1.5, 3.0, 10.0):
    ratio = phi(a, k, r).r * phi(a, k, t).r / phi(a, k, r * t).r
    print(f"  K={k:<4} log ratio={math.log(ratio):.10f} < alpha(1-1/K)={alpha * (1 - 1 / k):.10f}")

rep = check_theorem_mult(a, r, t, [1.0, 1.1, 2.0, 5.0, 100.0])
print(rep.summary())
# the expected violations are the sharpness probes: alpha - 0.001 no longer works near K = 1
print(f"  probe example: {rep.expected_violations[0].params['check']}")

for p in (0.5, 2.0):
    mb, mub = sharp_exp_power(a, r, p)
    print(f"p={p}: m-based {mb:.10f}  mu-based {mub:.10f}")
    print(" ", check_theorem_power(a, r, p, [1.5, 4.0, 50.0]).summary())
