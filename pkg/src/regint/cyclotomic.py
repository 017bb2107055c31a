"""Cyclotomic polynomials and their unitary-divisor analogues.

``phi_regular(n)`` is the monic polynomial whose roots are exp(2 pi i k/n)
for k in Reg_n; it factors as the product of Phi_d over unitary divisors d
of n.  ``phi_regular_star(n)`` drops the factor Phi_1 = x - 1.
"""

from __future__ import annotations

import threading

import numpy as np

from .arith import divisors, factorize, mobius, unitary_divisors
from .polynomial import IntPolynomial
from .regular import CapacityError

__all__ = [
    "CYCLOTOMIC_LIMIT",
    "cyclotomic",
    "cyclotomic_at_minus_one",
    "cyclotomic_at_one",
    "phi_regular",
    "phi_regular_star",
    "phi_regular_star_at",
]

CYCLOTOMIC_LIMIT = 10**4

_cache: dict = {}
_cache_lock = threading.Lock()

_GUARD = 2**60


def _times_xd_minus_one(a: np.ndarray, d: int) -> np.ndarray:
    out = np.zeros(len(a) + d, dtype=a.dtype)
    out[d:] += a
    out[: len(a)] -= a
    return out


def _div_xd_minus_one(a: np.ndarray, d: int) -> np.ndarray:
    """Exact quotient a / (x^d - 1); raises if the remainder is nonzero.

    With a = q (x^d - 1), coefficients satisfy q_i = q_{i-d} - a_i, i.e. q is
    the negated running sum of a over stride-d blocks.
    """
    deg = len(a) - 1
    qlen = deg - d + 1
    blocks = -(-len(a) // d)
    padded = np.zeros(blocks * d, dtype=a.dtype)
    padded[: len(a)] = a
    running = -np.cumsum(padded.reshape(blocks, d), axis=0).reshape(-1)
    q, tail = running[:qlen], running[qlen:]
    # the last d slots of the running sum must vanish for exactness
    if np.any(tail[: len(a) - qlen] != 0):
        raise ArithmeticError(f"x^{d} - 1 does not divide the polynomial")
    return q


def _compute_cyclotomic(n: int) -> IntPolynomial:
    # Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}; multiply first, then divide.
    ups, downs = [], []
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            ups.append(d)
        elif mu == -1:
            downs.append(d)
    dtype = np.int64 if len(ups) < 60 else object
    acc = np.array([1], dtype=dtype)
    for d in ups:
        acc = _times_xd_minus_one(acc, d)
    for d in downs:
        acc = _div_xd_minus_one(acc, d)
    if acc.dtype != object and np.abs(acc).max() > _GUARD:
        raise ArithmeticError("cyclotomic coefficient overflow guard tripped")
    return IntPolynomial(acc.tolist())


def cyclotomic(n: int) -> IntPolynomial:
    """Phi_n, the minimal polynomial of the primitive n-th roots of unity."""
    if n < 1:
        raise ValueError("cyclotomic requires n >= 1")
    if n > CYCLOTOMIC_LIMIT:
        raise CapacityError(f"cyclotomic: n = {n} exceeds {CYCLOTOMIC_LIMIT}")
    poly = _cache.get(n)
    if poly is None:
        poly = _compute_cyclotomic(n)
        with _cache_lock:
            poly = _cache.setdefault(n, poly)
    return poly


def phi_regular(n: int) -> IntPolynomial:
    """prod over unitary divisors d of n of Phi_d; degree rho(n)."""
    if n > CYCLOTOMIC_LIMIT:
        raise CapacityError(f"phi_regular: n = {n} exceeds {CYCLOTOMIC_LIMIT}")
    out = IntPolynomial([1])
    for d in unitary_divisors(n):
        out = out * cyclotomic(d)
    return out


def phi_regular_star(n: int) -> IntPolynomial:
    """phi_regular(n) / (x - 1), computed by exact division."""
    if n < 2:
        raise ValueError("phi_regular_star requires n >= 2")
    return phi_regular(n).exact_div(IntPolynomial([-1, 1]))


def cyclotomic_at_one(n: int) -> int:
    """Phi_n(1): p if n is a power of the prime p, else 1 (n >= 2)."""
    if n < 2:
        raise ValueError("cyclotomic_at_one requires n >= 2")
    fs = factorize(n)
    return fs.primes[0] if len(fs) == 1 else 1


def cyclotomic_at_minus_one(n: int) -> int:
    """Phi_n(-1): 2 if n = 2^e, p if n = 2 p^e with p odd, else 1 (n >= 3)."""
    if n < 3:
        raise ValueError("cyclotomic_at_minus_one requires n >= 3")
    fs = factorize(n).factors
    if len(fs) == 1 and fs[0][0] == 2:
        return 2
    if len(fs) == 2 and fs[0] == (2, 1):
        return fs[1][0]
    return 1


def phi_regular_star_at(n: int, x0: int) -> int:
    """Evaluate phi_regular_star(n) at x0 = 1 (n >= 2) or x0 = -1 (odd n >= 3)."""
    if x0 == 1:
        if n < 2:
            raise ValueError("phi_regular_star_at(n, 1) requires n >= 2")
    elif x0 == -1:
        if n < 3 or n % 2 == 0:
            raise ValueError("phi_regular_star_at(n, -1) requires odd n >= 3")
    else:
        raise ValueError("x0 must be 1 or -1")
    return phi_regular_star(n)(x0)
