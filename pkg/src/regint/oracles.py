"""Definition-level brute-force oracles.

Nothing here calls a closed form from the rest of the package: every value
is an explicit enumeration over residues, tuples or exponential sums, so it
can serve as an independent check on the identities.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, List

import mpmath
import numpy as np

from .arith import divisors, factorize, mobius
from .bernoulli import bernoulli_number

__all__ = [
    "coprime_residues",
    "definitional_jordan",
    "exp_sum",
    "lgamma_sum",
    "prime_power_regular",
    "regular_residues",
    "tuple_count_regular",
    "weak_order_regular",
]

TAU = 2.0 * math.pi


def weak_order_regular(k: int, n: int) -> bool:
    """True if k^{m+1} = k (mod n) for some m in [1, n]."""
    k %= n
    for m in range(1, n + 1):
        if pow(k, m + 1, n) == k:
            return True
    return False


def prime_power_regular(k: int, n: int) -> bool:
    """For every p^e || n, either p does not divide k or p^e divides k."""
    return all(k % p != 0 or k % p**e == 0 for p, e in factorize(n))


def regular_residues(n: int) -> np.ndarray:
    """Reg_n by testing gcd(k, n) against the unitary-divisor condition."""
    k = np.arange(1, n + 1, dtype=np.int64)
    g = np.gcd(k, n)
    return k[np.gcd(g, n // g) == 1]


def coprime_residues(n: int) -> np.ndarray:
    k = np.arange(1, n + 1, dtype=np.int64)
    return k[np.gcd(k, n) == 1]


def tuple_count_regular(r: int, n: int) -> int:
    """Number of (k_1..k_r) in [1, n]^r with gcd(k_1..k_r) regular (mod n)."""
    k = np.arange(1, n + 1, dtype=np.int64)
    g = k
    for _ in range(r - 1):
        g = np.gcd.outer(g.ravel(), k)
    g = np.gcd(g.ravel(), n)
    return int(np.count_nonzero(np.gcd(g, n // g) == 1))


def definitional_jordan(s: int, n: int) -> Fraction:
    """sum_{d | n} d^s mu(n/d)."""
    return sum((Fraction(d) ** s * mobius(n // d) for d in divisors(n)), Fraction(0))


def power_sums(ks: np.ndarray, max_e: int) -> List[int]:
    """Exact [sum k^0, ..., sum k^max_e] over the given integers."""
    acc = np.ones(len(ks), dtype=object)
    base = ks.astype(object)
    out = [len(ks)]
    for _ in range(max_e):
        acc = acc * base
        out.append(int(acc.sum()))
    return out


def bernoulli_poly_sum(m: int, n: int, sums: List[int]) -> Fraction:
    """sum over a set K of B_m(k/n), given sums[e] = sum_{k in K} k^e.

    This is the polynomial B_m(x) = sum_j C(m, j) B_j x^{m-j} summed term by
    term over x = k/n.
    """
    return sum(
        (comb(m, j) * bernoulli_number(j) * Fraction(sums[m - j], n ** (m - j)) for j in range(m + 1)),
        Fraction(0),
    )


def exp_sum(n: int, ks: Iterable[int], t, weights=None) -> np.ndarray:
    """sum_k w_k exp(2 pi i k t / n) for one t or an array of t.

    k t is reduced mod n in exact integer arithmetic before taking the angle.
    """
    ks = np.asarray(ks, dtype=np.int64)
    ts = np.atleast_1d(np.asarray(t, dtype=np.int64))
    w = np.ones(len(ks)) if weights is None else np.asarray(weights, dtype=np.float64)
    roots = np.exp(1j * TAU * np.arange(n) / n)
    residues = np.mod(np.outer(ts, ks), n)
    return roots[residues] @ w


def lgamma_sum(n: int, ks: Iterable[int]) -> float:
    return math.fsum(math.lgamma(k / n) for k in ks)


def trig_values(n: int, dps: int = 40):
    """cos^2, tan^2, tan^4 of k pi / n for k = 1..n (tan entries None at k/n = 1/2)."""
    with mpmath.workdps(dps):
        cos2, tan2, tan4 = [], [], []
        for k in range(1, n + 1):
            x = mpmath.pi * k / n
            c = mpmath.cos(x)
            cos2.append(c * c)
            if 2 * k == n:
                tan2.append(None)
                tan4.append(None)
            else:
                tt = mpmath.tan(x) ** 2
                tan2.append(tt)
                tan4.append(tt * tt)
        return cos2, tan2, tan4


def float_product(values: Iterable[float]) -> float:
    out = 1.0
    for v in values:
        out *= v
    return out


def sin_product(n: int, ks: Iterable[int]) -> float:
    return float_product(math.sin(math.pi * k / n) for k in ks)


def cos_product(n: int, ks: Iterable[int]) -> float:
    return float_product(math.cos(math.pi * k / n) for k in ks)


def brute_product(ks: Iterable[int]) -> int:
    return math.prod(int(k) for k in ks)


def coprime_sum(g: Callable[[Fraction], Fraction], n: int) -> Fraction:
    """Gbar(n) = sum_{k <= n, gcd(k, n) = 1} g(k/n)."""
    return sum((g(Fraction(k, n)) for k in range(1, n + 1) if math.gcd(k, n) == 1), Fraction(0))


def full_sum(g: Callable[[Fraction], Fraction], n: int) -> Fraction:
    """G(n) = sum_{k <= n} g(k/n)."""
    return sum((g(Fraction(k, n)) for k in range(1, n + 1)), Fraction(0))


def is_squarefull(n: int) -> bool:
    """Every prime dividing n divides it at least twice (trial division)."""
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e == 1:
                return False
        p += 1
    return m == 1
