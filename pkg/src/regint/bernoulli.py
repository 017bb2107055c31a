"""Bernoulli numbers and polynomials, power sums and Bernoulli-polynomial sums.

Three families of sums are provided, each over one of the index sets
{1..n}, {k <= n : gcd(k, n) = 1} and Reg_n:

* power sums  S_r, S'_r, Sbar_r  of k**r,
* Bernoulli sums  T_m, T'_m, Tbar_m  of B_m(k/n).

All identity arithmetic is exact (``fractions.Fraction``).  Note the
convention B_1 = -1/2.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from math import comb
from typing import Dict, NamedTuple

import numpy as np

from .arith import factorize, jordan_phi, omega
from .polynomial import Polynomial
from .regular import CapacityError, regular_mask, rho, rho_s

__all__ = [
    "BernoulliCache",
    "PartialSum",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_eval",
    "bernoulli_sum_all",
    "bernoulli_sum_coprime",
    "bernoulli_sum_regular",
    "bernoulli_sum_regular_m1",
    "partial_power_sum_regular",
    "power_sum_all",
    "power_sum_coprime",
    "power_sum_regular",
    "special_case_sums",
]


class BernoulliCache:
    """Grow-only table of B_0, B_1, ... computed from the binomial recurrence.

    For m >= 2, B_m = sum_{j=0}^{m} C(m, j) B_j cancels B_m and leaves
    sum_{j=0}^{m-1} C(m, j) B_j = 0, which determines B_{m-1}.
    """

    def __init__(self):
        self._values = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("Bernoulli index must be >= 0")
        values = self._values
        if m < len(values):
            return values[m]
        with self._lock:
            values = list(self._values)
            while len(values) <= m:
                k = len(values)  # next index, solved from the recurrence at m = k + 1
                acc = sum(comb(k + 1, j) * values[j] for j in range(k))
                values.append(-acc / (k + 1))
            self._values = values
        return values[m]


_CACHE = BernoulliCache()


def bernoulli_number(m: int) -> Fraction:
    """B_m with B_1 = -1/2."""
    return _CACHE[m]


def bernoulli_poly(m: int) -> Polynomial:
    """B_m(x) = sum_j C(m, j) B_j x^{m-j}."""
    coeffs = [Fraction(0)] * (m + 1)
    for j in range(m + 1):
        coeffs[m - j] = comb(m, j) * bernoulli_number(j)
    return Polynomial(coeffs)


def bernoulli_poly_eval(m: int, x) -> Fraction:
    return Fraction(bernoulli_poly(m)(Fraction(x)))


def _faulhaber_terms(r: int):
    return [(m, comb(r + 1, 2 * m) * bernoulli_number(2 * m)) for m in range(r // 2 + 1)]


def power_sum_all(r: int, n: int) -> int:
    """S_r(n) = sum_{k=1}^{n} k**r."""
    if r < 1 or n < 1:
        raise ValueError("power_sum_all requires r, n >= 1")
    total = Fraction(n**r, 2) + sum(
        c * Fraction(n) ** (r + 1 - 2 * m) for m, c in _faulhaber_terms(r)
    ) / (r + 1)
    return _as_int(total)


def power_sum_coprime(r: int, n: int) -> int:
    """S'_r(n) = sum of k**r over 1 <= k <= n with gcd(k, n) = 1.

    The closed form holds for n >= 2; n = 1 returns 1 (the single term k = 1).
    """
    if r < 1 or n < 1:
        raise ValueError("power_sum_coprime requires r, n >= 1")
    if n == 1:
        return 1
    f = factorize(n)
    inner = sum(c * jordan_phi(1 - 2 * m, f) for m, c in _faulhaber_terms(r))
    return _as_int(Fraction(n**r, r + 1) * inner)


def power_sum_regular(r: int, n: int) -> int:
    """Sbar_r(n) = sum of k**r over Reg_n."""
    if r < 1 or n < 1:
        raise ValueError("power_sum_regular requires r, n >= 1")
    inner = sum(c * rho_s(1 - 2 * m, n) for m, c in _faulhaber_terms(r))
    return _as_int(Fraction(n**r, 2) + Fraction(n**r, r + 1) * inner)


def _as_int(q: Fraction) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {q}")
    return int(q.numerator)


def special_case_sums(n: int) -> Dict[int, int]:
    """Sbar_1 .. Sbar_4 from their individual displayed formulas.

    Uses the local products prod (p^e - p + 1) and prod (p^{3e} - p^3 + 1)
    over p^e || n rather than the general Bernoulli expansion.
    """
    fs = factorize(n)
    a = math.prod(p**e - p + 1 for p, e in fs)
    b = math.prod(p ** (3 * e) - p**3 + 1 for p, e in fs)
    r = rho(n)
    values = {
        1: Fraction(n * (r + 1), 2),
        2: Fraction(n**2, 2) + Fraction(n**2 * r, 3) + Fraction(n * a, 6),
        3: Fraction(n**3, 2) + Fraction(n**3 * r, 4) + Fraction(n**2 * a, 4),
        4: Fraction(n**4, 2)
        + Fraction(n**4 * r, 5)
        + Fraction(n**3 * a, 3)
        - Fraction(n * b, 30),
    }
    return {k: _as_int(v) for k, v in values.items()}


PARTIAL_SUM_LIMIT = 10**7


class PartialSum(NamedTuple):
    """Sum of k**s over regular k <= x, against the main term x^{s+1} rho(n) / ((s+1) n)."""

    value: float
    main_term: float
    s: float = 0.0
    n: int = 1
    x: float = 1.0

    @property
    def scaled_error(self) -> float:
        """|value - main_term| / (x**s * 3**omega(n))."""
        return abs(self.value - self.main_term) / (self.x**self.s * 3 ** omega(self.n))

    @property
    def relative_error(self) -> float:
        return abs(self.value / self.main_term - 1.0)


def partial_power_sum_regular(s: float, n: int, x: float) -> PartialSum:
    """Enumerate k <= x regular (mod n) and sum k**s.

    Regularity is periodic in k with period n, so the residue mask of
    [1, n] is tiled over [1, x].
    """
    if s < 0:
        raise ValueError("partial_power_sum_regular requires s >= 0")
    if x <= 1:
        raise ValueError("partial_power_sum_regular requires x > 1")
    if x > PARTIAL_SUM_LIMIT:
        raise CapacityError(f"x = {x} exceeds the enumeration bound {PARTIAL_SUM_LIMIT}")
    top = int(math.floor(x))
    mask = regular_mask(n)
    mask[0] = mask[n]  # residue 0 is the class of n
    k = np.arange(1, top + 1, dtype=np.int64)
    chosen = k[mask[k % n]]
    if s == 0:
        value = float(len(chosen))
    else:
        value = math.fsum((chosen.astype(np.float64) ** s).tolist())
    main = x ** (s + 1) / (s + 1) * rho(n) / n
    return PartialSum(value, main, float(s), n, float(x))


def bernoulli_sum_all(m: int, n: int) -> Fraction:
    """T_m(n) = sum_{k=1}^{n} B_m(k/n) = B_m / n^{m-1}."""
    _check_m(m)
    return bernoulli_number(m) / Fraction(n) ** (m - 1)


def bernoulli_sum_coprime(m: int, n: int) -> Fraction:
    """T'_m(n) = B_m phi_{1-m}(n)."""
    _check_m(m)
    return bernoulli_number(m) * jordan_phi(1 - m, n)


def bernoulli_sum_regular(m: int, n: int) -> Fraction:
    """Tbar_m(n) = B_m rho_{1-m}(n)."""
    _check_m(m)
    return bernoulli_number(m) * rho_s(1 - m, n)


def bernoulli_sum_regular_m1(n: int, include_zero: bool = False) -> Fraction:
    """The m = 1 case of Tbar.

    Summing over Reg_n gives 1/2 for every n.  Summing over the regular
    k in [0, n-1] instead gives B_1 rho_0(n) = -1/2, since rho_0 = 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if include_zero:
        return bernoulli_number(1) * rho_s(0, n)
    return Fraction(1, 2)


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError("Bernoulli sums require m >= 2 (use bernoulli_sum_regular_m1)")
