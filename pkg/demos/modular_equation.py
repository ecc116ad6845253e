# Solving the generalized modular equation mu_a(s) = p mu_a(r).
import math

from hpdistortion import modular_residual, solve_modular

# at a = 1/2 and degree 2 this is the descending Landen transformation
r = 0.8
sol = solve_modular(0.5, 2.0, r)
rc = math.sqrt(1 - r * r)
print(f"degree 2, a=1/2: s={sol.s.r!r}  Landen={(1 - rc) / (1 + rc)!r}")

for a, p in ((1 / 3, 3.0), (0.25, 2.0), (0.1, 0.5)):
    sol = solve_modular(a, p, 0.5)
    print(f"a={a:.4f} p={p}: s={sol.s.r:.15f} residual={modular_residual(a, p, 0.5, sol.s):.1e}"
          f" iterations={sol.iterations}")
