"""Regular integers (mod n) and the sums built on them.

An integer k is regular (mod n) when gcd(k, n) is a unitary divisor of n.
Every closed form below is a unitary convolution evaluated by
:func:`reduce_over_regular`: a sum over Reg_n grouped by d = gcd(k, n)
becomes ``sum_{d || n} f(d) * Gbar(n/d)`` with Gbar the corresponding sum
over residues coprime to n/d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Union

import numpy as np

from .arith import (
    euler_phi,
    factorize,
    jordan_phi,
    multiplicative_int,
    ramanujan_sum,
    tau,
    unitary_divisors,
)

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "ID",
    "ONE",
    "ArithFunction",
    "CapacityError",
    "RegularSet",
    "c_bar",
    "gcd_sum_regular",
    "gcd_sum_regular_product",
    "is_regular",
    "jordan_convolution",
    "menon_coprime",
    "menon_regular",
    "menon_regular_convolution",
    "mu_bar",
    "p_reg",
    "p_reg_id1",
    "power",
    "reduce_over_regular",
    "regular_mask",
    "regular_set",
    "resolve_function",
    "rho",
    "rho_r",
    "rho_s",
]

BRUTE_FORCE_LIMIT = 10**6


class CapacityError(ValueError):
    """An argument exceeds the declared bound of a brute-force routine."""


def check_capacity(name: str, n: int, bound: int) -> None:
    if n > bound:
        raise CapacityError(f"{name}: n = {n} exceeds the capacity bound {bound}")


@dataclass(frozen=True)
class ArithFunction:
    """Named arithmetic function handle.

    Multiplicativity of user supplied callables is the caller's responsibility.
    """

    name: str
    func: Callable[[int], Union[int, Fraction]]

    def __call__(self, n: int):
        return self.func(n)


ONE = ArithFunction("one", lambda n: 1)
ID = ArithFunction("id", lambda n: n)


def power(s: int) -> ArithFunction:
    """The function n -> n**s (exact rational for negative s)."""
    if s >= 0:
        return ArithFunction(f"power {s}", lambda n: n**s)
    return ArithFunction(f"power {s}", lambda n: Fraction(1, n ** (-s)))


def resolve_function(f) -> ArithFunction:
    """Accept an :class:`ArithFunction`, a name ("one", "id", "power s") or a callable."""
    if isinstance(f, ArithFunction):
        return f
    if callable(f):
        return ArithFunction(getattr(f, "__name__", "custom"), f)
    name = str(f).strip().lower()
    if name == "one":
        return ONE
    if name == "id":
        return ID
    parts = name.replace("=", " ").split()
    if len(parts) == 2 and parts[0] == "power":
        return power(int(parts[1]))
    raise ValueError(f"unknown arithmetic function {f!r}")


def is_regular(k: int, n: int) -> bool:
    """True if gcd(k, n) is a unitary divisor of n."""
    if n < 1:
        raise ValueError("is_regular requires n >= 1")
    d = math.gcd(k % n or n, n)
    return math.gcd(d, n // d) == 1


def regular_mask(n: int) -> np.ndarray:
    """Boolean array ``m`` of length n + 1 with m[k] True iff k in [1, n] is regular.

    Built by striking, for each p**e || n, the multiples of p that are not
    multiples of p**e.
    """
    check_capacity("regular_mask", n, BRUTE_FORCE_LIMIT)
    bad = np.zeros(n + 1, dtype=bool)
    for p, e in factorize(n):
        if e == 1:
            continue
        q = p**e
        strike = np.zeros(n + 1, dtype=bool)
        strike[p::p] = True
        strike[q::q] = False
        bad |= strike
    bad[0] = True
    return ~bad


@dataclass(frozen=True, eq=False)
class RegularSet:
    """Reg_n: the regular residues in [1, n], ascending."""

    n: int
    members: np.ndarray

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members.tolist())

    def __contains__(self, k) -> bool:
        return 1 <= k <= self.n and bool(self._mask()[k])

    def _mask(self) -> np.ndarray:
        m = np.zeros(self.n + 1, dtype=bool)
        m[self.members] = True
        return m

    def __eq__(self, other) -> bool:
        if isinstance(other, RegularSet):
            return self.n == other.n and np.array_equal(self.members, other.members)
        try:
            return self.tolist() == sorted(other)
        except TypeError:
            return NotImplemented

    def tolist(self) -> list:
        return self.members.tolist()


def regular_set(n: int) -> RegularSet:
    if n < 1:
        raise ValueError("regular_set requires n >= 1")
    members = np.flatnonzero(regular_mask(n)).astype(np.int64)
    members.flags.writeable = False
    return RegularSet(n, members)


def rho_r(r: int, n) -> int:
    """Number of r-tuples in [1, n]^r whose gcd is regular (mod n)."""
    if r < 1:
        raise ValueError("rho_r requires r >= 1")
    return multiplicative_int(lambda p, e: p ** (r * e) - p ** (r * (e - 1)) + 1, n)


def rho(n) -> int:
    """Number of regular residues in [1, n]."""
    return rho_r(1, n)


def rho_s(s: int, n) -> Fraction:
    """sum_{d || n} phi_s(d), via the local factor p^{s e} - p^{s(e-1)} + 1."""
    out = Fraction(1)
    for p, e in factorize(n):
        out *= Fraction(p) ** (s * e) - Fraction(p) ** (s * (e - 1)) + 1
    return out


def mu_bar(n) -> int:
    """Indicator of squarefull n (every prime exponent >= 2); mu_bar(1) = 1."""
    return int(all(e >= 2 for _, e in factorize(n)))


def reduce_over_regular(f, g_relprime: Callable[[int], object], n: int):
    """sum_{d || n} f(d) * g_relprime(n // d).

    ``g_relprime(m)`` must be the coprime-restricted sum
    sum_{1 <= j <= m, gcd(j, m) = 1} g(j/m) of the weight g.
    """
    f = resolve_function(f)
    return sum(f(d) * g_relprime(n // d) for d in unitary_divisors(n))


def c_bar(n: int, t: int) -> int:
    """Sum of exp(2 pi i k t / n) over k in Reg_n."""
    return sum(ramanujan_sum(d, t) for d in unitary_divisors(n))


def gcd_sum_regular(n: int) -> int:
    """Sum of gcd(k, n) over Reg_n, as sum_{d || n} d phi(n/d)."""
    return reduce_over_regular(ID, euler_phi, n)


def gcd_sum_regular_product(n: int) -> int:
    """Same value via n * prod_{p | n} (2 - 1/p)."""
    return multiplicative_int(lambda p, e: p ** (e - 1) * (2 * p - 1), n)


def p_reg(f, t: int, n: int):
    """Sum of f(gcd(k, n)) exp(2 pi i k t / n) over Reg_n."""
    return reduce_over_regular(f, lambda m: ramanujan_sum(m, t), n)


def p_reg_id1(n) -> int:
    """p_reg(id, 1, n); prime power values p - 1 at e = 1 and p**e for e >= 2.

    Computed from sum_{d || p^e} d mu(p^e / d) = mu(p^e) + p^e.
    """
    return multiplicative_int(lambda p, e: p**e - (e == 1), n)


def menon_regular(n) -> int:
    """Sum of gcd(k - 1, n) over Reg_n, as prod (p^{e-1}(p-1)(e+1) + 1)."""
    return multiplicative_int(lambda p, e: p ** (e - 1) * (p - 1) * (e + 1) + 1, n)


def menon_regular_convolution(n: int) -> int:
    return sum(euler_phi(d) * tau(d) for d in unitary_divisors(n))


MENON_CHECK_LIMIT = 10**5


def menon_coprime(a: int, n: int, check: bool = True) -> int:
    """Sum of gcd(a k - 1, n) over k in [1, n] coprime to n, for gcd(a, n) = 1.

    The value is phi(n) tau(n) whatever a is.  With ``check`` the defining
    sum is also evaluated (for n up to ``MENON_CHECK_LIMIT``) and compared.
    """
    if math.gcd(a, n) != 1:
        raise ValueError(f"menon_coprime requires gcd(a, n) = 1, got a={a}, n={n}")
    value = euler_phi(n) * tau(n)
    if check and n <= MENON_CHECK_LIMIT:
        k = np.arange(1, n + 1, dtype=np.int64)
        k = k[np.gcd(k, n) == 1]
        direct = int(np.gcd((a % n) * k - 1, n).sum())
        if direct != value:
            raise ArithmeticError(
                f"Menon sum mismatch at a={a}, n={n}: {direct} != {value}"
            )
    return value


def jordan_convolution(s: int, n: int) -> Fraction:
    """rho_s(n) as the unitary sum of Jordan totients (used as a cross-check)."""
    return sum((jordan_phi(s, d) for d in unitary_divisors(n)), Fraction(0))
