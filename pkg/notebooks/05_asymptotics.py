"""
Mean values and maximal orders
==============================
"""

from regint import (
    limsup_rho_sigma,
    maximal_order_trajectory,
    preg_mean_constant,
    rho_mean_constant,
    summatory,
    zeta_ratio,
)

c = rho_mean_constant()
print(f"prod (1 - 1/(p^2 (p+1))) = {c.value:.8f}  (log tail bound {c.tail_bound:.0e})")
print(f"prod (1 - 1/p^2 + 1/p^3) = {preg_mean_constant().value:.8f}")

# sum of rho(n), n <= x, against (C/2) x^2
for x in (10**4, 10**5, 10**6):
    r = summatory("rho", x)
    print(f"x={x}: ratio {r.ratio:.6f}")

# rho(n) sigma(n) / n^2 along primorials, divided by log log n
print("limit 6 e^gamma / pi^2 =", limsup_rho_sigma())
for t in maximal_order_trajectory("rho_sigma", 25)[9::5]:
    print(f"k={t.k}: {t.normalized:.4f}")

# with s = 2 the ratio stays below zeta(2)/zeta(4)
last = maximal_order_trajectory("rho_sigma_s", 30, s=2)[-1]
print(float(last.exact), "<", zeta_ratio(2))
