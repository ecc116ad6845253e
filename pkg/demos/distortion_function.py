# The distortion function phi_K^a and the functions it is built from.
from hpdistortion import Modulus, mu, mu_inv, phi, phi_image

a = 0.25
r = 0.6
print(f"mu_{a}({r}) = {mu(a, r):.15f}")
print(f"mu_inv recovers r: {mu_inv(a, mu(a, r)).r:.15f}")

print("\nphi_K(r) for a few K; K < 1 pulls r toward 0, K > 1 toward 1")
for k in (0.25, 0.5, 1.0, 2.0, 4.0):
    print(f"  K={k:<5} phi={phi(a, k, r).r:.15f}")

# phi_K(r)^2 + phi_{1/K}(r')^2 = 1
m = Modulus.from_r(r)
for k in (0.5, 3.0):
    s, u = phi(a, k, m).r, phi(a, 1 / k, m.swap()).r
    print(f"  K={k}: s^2 + u^2 - 1 = {s * s + u * u - 1:.1e}")

# for tiny K the image underflows, but its logarithm is still exact
img = phi_image(a, 1e-3, r)
print(f"\nK=1e-3: s = {img.s.r} (saturated={img.s.saturated}), log s = {img.log_s:.6f}")
