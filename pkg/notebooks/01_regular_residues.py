"""
Regular residues mod n
======================

k is regular (mod n) when some power k^{m+1} comes back to k.  Equivalently
gcd(k, n) is a unitary divisor of n.
"""

from regint import is_regular, regular_set, rho, rho_r, unitary_divisors
from regint.oracles import weak_order_regular

n = 12
print("Reg_12 =", regular_set(n).tolist())
print("rho(12) =", rho(n))

# the two definitions agree
for k in range(1, n + 1):
    assert is_regular(k, n) == weak_order_regular(k, n)

# 2 is not regular mod 12: its powers 2, 4, 8, 4, 8, ... never return to 2
print("powers of 2 mod 12:", [pow(2, m, 12) for m in range(1, 7)])

# rho counts one block per unitary divisor d, of size phi(n/d)
print("unitary divisors of 12:", unitary_divisors(12))

# squarefree n: everything is regular
print("rho(30) =", rho(30))

# r-tuples whose gcd is regular
print("rho_2(12) =", rho_r(2, 12))
