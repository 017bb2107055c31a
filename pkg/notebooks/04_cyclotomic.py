"""
Cyclotomic polynomials over unitary divisors
============================================

phi_regular(n) has the regular residues as its root exponents.
"""

import numpy as np

from regint import cyclotomic, kappa, phi_regular, phi_regular_star, regular_set

print("Phi_12 =", cyclotomic(12).to_text())
print("Phibar_12 =", phi_regular(12).to_text())
print("Phibar*_12 =", phi_regular_star(12).to_text())

# roots: exp(2 pi i k / n) for k in Reg_n
n = 12
coeffs = np.array(phi_regular(n).coeffs[::-1], dtype=float)
ks = np.array(regular_set(n).tolist())
print("max |Phibar_12(root)|:", np.abs(np.polyval(coeffs, np.exp(2j * np.pi * ks / n))).max())

# value at 1 is kappa(n); the coefficients are symmetric
for n in (12, 72, 360):
    star = phi_regular_star(n)
    print(n, star(1), kappa(n), star.is_palindromic())

# Phi_105 is the first with a coefficient of absolute value 2
print("coefficients of Phi_105 range over", sorted(set(cyclotomic(105).coeffs)))
