"""
Power sums and Bernoulli sums over Reg_n
========================================

Sums of k^r over the regular residues reduce to Bernoulli numbers times
the rho-type functions rho_{1-2m}.  Everything here is an exact rational.
"""

from regint import (
    bernoulli_number,
    bernoulli_poly,
    bernoulli_sum_regular,
    bernoulli_sum_regular_m1,
    partial_power_sum_regular,
    power_sum_regular,
    regular_set,
    special_case_sums,
)

print("B_0..B_12:", [str(bernoulli_number(m)) for m in range(13)])
print("B_3(x) =", bernoulli_poly(3).to_text())

n = 12
brute = sum(k * k for k in regular_set(n))
print("sum of k^2 over Reg_12:", power_sum_regular(2, n), "brute:", brute)
print("r = 1..4 via the short formulas:", special_case_sums(n))

# Bernoulli polynomial sums
print("Tbar_2(4) =", bernoulli_sum_regular(2, 4))
print("Tbar_1(n) is always", bernoulli_sum_regular_m1(97))

# counting regular k <= x: the density is rho(n)/n
for x in (10**3, 10**4, 10**5):
    r = partial_power_sum_regular(0, 72, x)
    print(f"x={x}: count {r.value:.0f}, main term {r.main_term:.1f}")
