"""
Products, Gamma values and trigonometric sums
=============================================
"""

import math

from regint import (
    gamma_product_regular,
    product_regular,
    regular_set,
    trig_product,
    trig_sum,
)

# product of the regular residues, exact
n = 12
print("Qbar(12) =", product_regular(n), "brute:", math.prod(regular_set(n)))

# Gamma products overflow quickly, so they live in log space
for n in (12, 600, 5000):
    g = gamma_product_regular(n)
    print(f"log Rbar({n}) = {g.log_value:.6f}")

# sums of cos^2, tan^2, tan^4 of k pi / n over Reg_n are rational
for kind in ("cos2", "tan2", "tan4"):
    print(kind, "over Reg_9:", trig_sum(kind, "regular", 9))

# brute check for tan^2
brute = sum(math.tan(k * math.pi / 9) ** 2 for k in regular_set(9))
print("tan2 brute:", brute)

# sin / cos products with k = n left out
print("Ubar*(12) =", trig_product("sin", "regular_mod", 12))
print("Vbar*(9) =", trig_product("cos", "regular_mod", 9))
