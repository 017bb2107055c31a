"""Exact integer arithmetic: factorization and classical multiplicative functions.

Every function here is pure.  Factorizations come from a smallest-prime-factor
sieve (grown on demand up to ``SIEVE_LIMIT``) with a Miller-Rabin / Pollard rho
fallback for larger arguments.
"""

from __future__ import annotations

import math
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterator, Tuple, Union

import numpy as np

__all__ = [
    "SIEVE_LIMIT",
    "Factorization",
    "LogExact",
    "divisors",
    "euler_phi",
    "factorize",
    "is_prime",
    "is_squarefree",
    "jordan_phi",
    "kappa",
    "mangoldt",
    "mobius",
    "multiplicative_eval",
    "omega",
    "primes_up_to",
    "ramanujan_sum",
    "sigma_s",
    "smallest_prime_factors",
    "tau",
    "unitary_divisors",
]

Number = Union[int, Fraction]

SIEVE_LIMIT = 10**7
MAX_FACTOR = 2**64

_sieve_lock = threading.Lock()
_spf: np.ndarray = np.zeros(2, dtype=np.int32)


def smallest_prime_factors(limit: int) -> np.ndarray:
    """Return an array ``spf`` with ``spf[n]`` the least prime factor of n (n >= 2).

    The shared table is extended by doubling and never shrinks; callers must
    treat the returned array as read-only.
    """
    global _spf
    table = _spf
    if limit < len(table):
        return table
    with _sieve_lock:
        if limit < len(_spf):
            return _spf
        size = min(max(2 * len(_spf), limit + 1, 1 << 16), max(SIEVE_LIMIT, limit) + 1)
        spf = np.zeros(size, dtype=np.int32)
        spf[2::2] = 2
        for p in range(3, math.isqrt(size - 1) + 1, 2):
            if spf[p] == 0:
                block = spf[p * p :: 2 * p]
                block[block == 0] = p
        rest = np.flatnonzero(spf == 0)
        spf[rest] = rest
        spf[:2] = 0
        spf.flags.writeable = False
        _spf = spf
        return spf


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit, ascending, as an int64 array."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_p[p]:
            is_p[p * p :: 2 * p] = False
    return np.flatnonzero(is_p).astype(np.int64)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split_large(d, out)
    _split_large(n // d, out)


@dataclass(frozen=True)
class Factorization:
    """Prime power decomposition of ``n`` as ascending ``(p, exponent)`` pairs."""

    n: int
    factors: Tuple[Tuple[int, int], ...]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def prime_powers(self) -> Tuple[int, ...]:
        """The unitary prime-power components p**e of n."""
        return tuple(p**e for p, e in self.factors)

    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)


def factorize(n: int) -> Factorization:
    """Factor ``n >= 1``.

    >>> factorize(12).factors
    ((2, 2), (3, 1))
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n >= MAX_FACTOR:
        raise ValueError(f"n = {n} exceeds the supported bound 2**64")
    if n <= SIEVE_LIMIT:
        spf = smallest_prime_factors(n)
        factors = []
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        return Factorization(n, tuple(factors))
    found: dict = {}
    m = n
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    _split_large(m, found)
    return Factorization(n, tuple(sorted(found.items())))


def _fact(n) -> Factorization:
    return n if isinstance(n, Factorization) else factorize(n)


def divisors(n) -> list:
    """Sorted list of all positive divisors."""
    divs = [1]
    for p, e in _fact(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def unitary_divisors(n) -> list:
    """Sorted divisors d of n with gcd(d, n/d) = 1."""
    divs = [1]
    for q in _fact(n).prime_powers:
        divs = divs + [d * q for d in divs]
    return sorted(divs)


def mobius(n) -> int:
    f = _fact(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def is_squarefree(n) -> bool:
    return all(e == 1 for _, e in _fact(n))


def euler_phi(n) -> int:
    return math.prod(p ** (e - 1) * (p - 1) for p, e in _fact(n))


def tau(n) -> int:
    return math.prod(e + 1 for _, e in _fact(n))


def omega(n) -> int:
    """Number of distinct prime factors."""
    return len(_fact(n))


def kappa(n) -> int:
    """Largest squarefree divisor (the radical)."""
    return math.prod(_fact(n).primes)


def sigma_s(n, s: int = 1) -> int:
    """Sum of the s-th powers of the divisors, s >= 1."""
    if s < 1:
        raise ValueError("sigma_s requires s >= 1")
    return math.prod((p ** (s * (e + 1)) - 1) // (p**s - 1) for p, e in _fact(n))


@dataclass(frozen=True)
class LogExact:
    """The real number log(base), kept exact; addition multiplies the bases."""

    base: int = 1

    def __post_init__(self):
        if self.base < 1:
            raise ValueError("LogExact base must be >= 1")

    def __add__(self, other: "LogExact") -> "LogExact":
        if not isinstance(other, LogExact):
            return NotImplemented
        return LogExact(self.base * other.base)

    def __radd__(self, other):
        # lets sum() start from 0
        if other == 0:
            return self
        return NotImplemented

    def __float__(self) -> float:
        return math.log(self.base)


def mangoldt(n) -> LogExact:
    """von Mangoldt function: log p on prime powers p**e, else 0 (= log 1)."""
    f = _fact(n)
    return LogExact(f.primes[0]) if len(f) == 1 else LogExact(1)


def _prime_power_jordan(p: int, e: int, s: int) -> Fraction:
    return Fraction(p) ** (s * e) - Fraction(p) ** (s * (e - 1))


def jordan_phi(s: int, n) -> Fraction:
    """Generalized Jordan totient sum_{d | n} d**s mu(n/d), exact for every integer s."""
    out = Fraction(1)
    for p, e in _fact(n):
        out *= _prime_power_jordan(p, e, s)
    return out


def ramanujan_sum(n: int, t: int) -> int:
    """c_n(t) by Hoelder's evaluation mu(n/g) phi(n) / phi(n/g), g = gcd(n, t)."""
    if n < 1:
        raise ValueError("ramanujan_sum requires n >= 1")
    m = n // math.gcd(n, t % n)
    mu = mobius(m)
    if mu == 0:
        return 0
    return mu * (euler_phi(n) // euler_phi(m))


def multiplicative_eval(local: Callable[[int, int], Number], n) -> Fraction:
    """Evaluate the multiplicative function with prime-power values ``local(p, e)``."""
    return Fraction(reduce(lambda acc, pe: acc * local(*pe), _fact(n), 1))


def multiplicative_int(local: Callable[[int, int], int], n) -> int:
    """Integer-valued fast path of :func:`multiplicative_eval`."""
    return math.prod(local(p, e) for p, e in _fact(n))


def unitary_convolution(f: Callable, g: Callable, n) -> Number:
    """(f x g)(n) = sum over unitary divisors d of f(d) g(n/d)."""
    n = int(n)
    return sum(f(d) * g(n // d) for d in unitary_divisors(n))
