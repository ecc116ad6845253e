# Generalized elliptic integrals K_a, E_a and how they behave near r = 1.
import math

from hpdistortion import E, K, Modulus, classical, ellint_K, ramanujan_R

print("a = 1/2 recovers the classical integrals; compare with the AGM path")
for r in (0.1, 0.5, 0.9, 0.999):
    print(f"  r={r:<6} K_1/2={K(0.5, r):.16f}  agm={classical.ellipk(r):.16f}")

# K_a grows like (sin(pi a)/2) (R(a) - log r'^2) as r -> 1.  Passing the
# complement directly keeps this visible far past where r rounds to 1.
a = 0.2
print(f"\nnear r = 1 with a = {a}")
for rc in (1e-4, 1e-8, 1e-12, 1e-100):
    m = Modulus(math.sqrt((1 - rc) * (1 + rc)), rc)
    lead = 0.5 * math.sin(math.pi * a) * (ramanujan_R(a) - 2 * math.log(rc))
    print(f"  r'={rc:.0e}  K={K(a, m):.12f}  leading term={lead:.12f}")

res = ellint_K(1 / 3, 0.9)
print(f"\nK_1/3(0.9) = {res.value!r}  err~{res.abs_err_estimate:.1e}  terms={res.terms_used}")
print(f"E_1/3(1)   = {E(1 / 3, Modulus(1.0, 0.0))!r}")
