"""Products over Reg_n: factorials, Gamma values, trigonometric sums and products.

Gamma products are returned in log space (:class:`LogSpaceReal`) because
(2 pi)^{(rho(n) - 1)/2} overflows a double once rho(n) is in the hundreds.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    divisors,
    euler_phi,
    jordan_phi,
    kappa,
    mangoldt,
    mobius,
    unitary_divisors,
)
from .cyclotomic import cyclotomic_at_minus_one, cyclotomic_at_one
from .regular import CapacityError, mu_bar, rho, rho_r

__all__ = [
    "FACTORIAL_LIMIT",
    "LogSpaceReal",
    "factorial",
    "factorial_core",
    "gamma_product_all",
    "gamma_product_coprime",
    "gamma_product_regular",
    "product_coprime",
    "product_regular",
    "trig_product",
    "trig_sum",
]

FACTORIAL_LIMIT = 5000
LOG_2PI = math.log(2 * math.pi)


class _FactorialTable:
    def __init__(self):
        self._table = [1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        table = self._table
        if n < len(table):
            return table[n]
        if n > FACTORIAL_LIMIT:
            raise CapacityError(f"factorial table is bounded by {FACTORIAL_LIMIT}, got {n}")
        with self._lock:
            table = list(self._table)
            while len(table) <= n:
                table.append(table[-1] * len(table))
            self._table = table
        return table[n]


factorial = _FactorialTable()


def factorial_core(n: int) -> Fraction:
    """A(n) = prod_{d | n} (d! / d^d)^{mu(n/d)}."""
    if n < 1:
        raise ValueError("factorial_core requires n >= 1")
    if n > FACTORIAL_LIMIT:
        raise CapacityError(f"factorial_core: n = {n} exceeds {FACTORIAL_LIMIT}")
    out = Fraction(1)
    for d in divisors(n):
        mu = mobius(n // d)
        if mu:
            out *= Fraction(factorial(d), d**d) ** mu
    return out


def product_coprime(n: int) -> int:
    """Q'(n) = n^{phi(n)} A(n), the product of the residues coprime to n."""
    q = n ** euler_phi(n) * factorial_core(n)
    if q.denominator != 1:
        raise ArithmeticError(f"Q'({n}) is not an integer: {q}")
    return int(q.numerator)


def product_regular(n: int) -> int:
    """Qbar(n) = n^{rho(n)} prod_{d || n} A(d), the product of the members of Reg_n."""
    if n > FACTORIAL_LIMIT:
        raise CapacityError(f"product_regular: n = {n} exceeds {FACTORIAL_LIMIT}")
    q = Fraction(n ** rho(n))
    for d in unitary_divisors(n):
        q *= factorial_core(d)
    if q.denominator != 1:
        raise ArithmeticError(f"Qbar({n}) is not an integer: {q}")
    return int(q.numerator)


@dataclass(frozen=True)
class LogSpaceReal:
    """sign * exp(log_value); sign 0 encodes zero."""

    log_value: float
    sign: int = 1

    def __mul__(self, other: "LogSpaceReal") -> "LogSpaceReal":
        if self.sign == 0 or other.sign == 0:
            return LogSpaceReal(-math.inf, 0)
        return LogSpaceReal(self.log_value + other.log_value, self.sign * other.sign)

    def __truediv__(self, other: "LogSpaceReal") -> "LogSpaceReal":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero LogSpaceReal")
        if self.sign == 0:
            return self
        return LogSpaceReal(self.log_value - other.log_value, self.sign * other.sign)

    def __float__(self) -> float:
        return 0.0 if self.sign == 0 else self.sign * math.exp(self.log_value)

    @classmethod
    def from_float(cls, x: float) -> "LogSpaceReal":
        if x == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(x)), 1 if x > 0 else -1)


def gamma_product_all(n: int) -> LogSpaceReal:
    """R(n) = prod_{k=1}^{n} Gamma(k/n) = (2 pi)^{(n-1)/2} / sqrt(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return LogSpaceReal((n - 1) / 2 * LOG_2PI - 0.5 * math.log(n))


def gamma_product_coprime(n: int) -> LogSpaceReal:
    """R'(n) = (2 pi)^{phi(n)/2} / exp(Lambda(n)/2), n >= 2."""
    if n < 2:
        raise ValueError("gamma_product_coprime requires n >= 2")
    return LogSpaceReal(euler_phi(n) / 2 * LOG_2PI - 0.5 * float(mangoldt(n)))


def gamma_product_regular(n: int) -> LogSpaceReal:
    """Rbar(n) = (2 pi)^{(rho(n)-1)/2} / sqrt(kappa(n)).

    The sum of Lambda(d) over the unitary divisors d of n is log kappa(n);
    it is accumulated exactly before conversion to float.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    log_kappa = sum((mangoldt(d) for d in unitary_divisors(n)), start=mangoldt(1))
    return LogSpaceReal((rho(n) - 1) / 2 * LOG_2PI - 0.5 * float(log_kappa))


TRIG_KINDS = ("cos2", "tan2", "tan4")
DOMAINS = ("all", "coprime", "regular")


def trig_sum(kind: str, domain: str, n: int) -> Fraction:
    """Closed form of sum f(k pi / n) over k in the chosen subset of [1, n].

    ``kind`` is cos2 (cos^2), tan2 (tan^2) or tan4 (tan^4); tangent kinds need
    odd n.  ``domain`` is all, coprime or regular.  The three domains use
    identity, Jordan and rho-type functions respectively.
    """
    if kind not in TRIG_KINDS:
        raise ValueError(f"unknown trig kind {kind!r}")
    if domain not in DOMAINS:
        raise ValueError(f"unknown domain {domain!r}")
    if kind == "cos2":
        if n < 2:
            raise ValueError("cos2 sums require n >= 2")
    elif n < 1 or n % 2 == 0:
        raise ValueError(f"{kind} sums require odd n >= 1, got {n}")

    if domain == "all":
        j = lambda s: Fraction(n**s)
    elif domain == "coprime":
        j = lambda s: jordan_phi(s, n)
    else:
        j = lambda s: Fraction(rho_r(s, n))

    if kind == "cos2":
        if domain == "all":
            return Fraction(n, 2)
        corr = mobius(n) if domain == "coprime" else mu_bar(n)
        return (j(1) + corr) / 2
    if kind == "tan2":
        return j(2) - j(1)
    return (j(4) - 4 * j(2) + 3 * j(1)) / 3


def trig_product(kind: str, domain: str, n: int) -> float:
    """Products of sin(k pi/n) or cos(k pi/n).

    ``domain="coprime"`` is the product over k coprime to n (U for sin, V for
    cos).  ``domain="regular_mod"`` runs over regular k in [1, n-1], dropping
    k = n where sin vanishes:

    * sin: kappa(n) / 2^{rho(n)-1}, n >= 2;
    * cos: (-1/4)^{(rho(n)-1)/2}, odd n >= 3.
    """
    if kind not in ("sin", "cos"):
        raise ValueError(f"unknown product kind {kind!r}")
    if domain == "coprime":
        if kind == "sin":
            if n < 2:
                raise ValueError("U(n) requires n >= 2")
            return math.ldexp(cyclotomic_at_one(n), -euler_phi(n))
        if n < 3:
            raise ValueError("V(n) requires n >= 3")
        half = euler_phi(n) // 2
        return (-1) ** half * math.ldexp(cyclotomic_at_minus_one(n), -2 * half)
    if domain != "regular_mod":
        raise ValueError(f"unknown product domain {domain!r}")
    if kind == "sin":
        if n < 2:
            raise ValueError("Ubar*(n) requires n >= 2")
        return math.ldexp(kappa(n), -(rho(n) - 1))
    if n < 3 or n % 2 == 0:
        raise ValueError(f"Vbar*(n) is only available for odd n >= 3, got {n}")
    half = (rho(n) - 1) // 2
    return (-1) ** half * math.ldexp(1.0, -2 * half)

