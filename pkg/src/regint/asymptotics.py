"""Summatory functions, truncated Euler products and maximal-order trajectories."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from .arith import euler_phi, factorize, jordan_phi, primes_up_to
from .bernoulli import bernoulli_number
from .regular import CapacityError

__all__ = [
    "PRIME_BOUND",
    "PRIME_BOUND_LIMIT",
    "SUMMATORY_LIMIT",
    "EulerProductResult",
    "LocalSup",
    "SummatoryResult",
    "TrajectoryPoint",
    "euler_product",
    "limsup_rho_sigma",
    "local_factor",
    "local_factor_bounds",
    "maximal_order_trajectory",
    "multiplicative_sieve",
    "preg_mean_constant",
    "rho_mean_constant",
    "rho_s_constant",
    "rho_sigma_s_max",
    "summatory",
    "zeta",
    "zeta_ratio",
]

SUMMATORY_LIMIT = 10**7
PRIME_BOUND = 10**6
PRIME_BOUND_LIMIT = 10**8

# Reference digits: pi from any standard table; Euler-Mascheroni gamma as in
# OEIS A001620.
PI_DIGITS = "3.14159265358979323846264338327950288419716939937510"
EULER_GAMMA_DIGITS = "0.57721566490153286060651209008240243104215933593992"


def limsup_rho_sigma() -> float:
    """(6 / pi^2) e^gamma, evaluated in 40-digit decimal arithmetic."""
    with localcontext() as ctx:
        ctx.prec = 40
        pi = Decimal(PI_DIGITS)
        return float(6 * Decimal(EULER_GAMMA_DIGITS).exp() / (pi * pi))


def zeta(s: float, terms: int = 20, corrections: int = 12) -> float:
    """Riemann zeta for real s > 1 by Euler-Maclaurin summation.

    The remainder after ``corrections`` Bernoulli terms with ``terms`` = 20
    is far below double precision for s <= 60.
    """
    if s <= 1:
        raise ValueError("zeta requires s > 1")
    N = terms
    total = math.fsum(n ** -s for n in range(1, N))
    total += N ** (1 - s) / (s - 1) + 0.5 * N**-s
    rising = s  # s (s+1) ... (s + 2k - 2)
    fact = 2.0  # (2k)!
    for k in range(1, corrections + 1):
        b = float(bernoulli_number(2 * k))
        total += b / fact * rising * N ** (-s - 2 * k + 1)
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        fact *= (2 * k + 1) * (2 * k + 2)
    return total


def zeta_ratio(s: float) -> float:
    """zeta(s) / zeta(2s) = prod_p (1 + p^{-s})."""
    return zeta(s) / zeta(2 * s)


@dataclass(frozen=True)
class EulerProductResult:
    """Truncated product over primes <= prime_bound.

    ``tail_bound`` bounds |log(full product / value)|.
    """

    prime_bound: int
    value: float
    tail_bound: float

    @property
    def interval(self):
        return (self.value * math.exp(-self.tail_bound), self.value * math.exp(self.tail_bound))


def euler_product(
    term: Callable,
    prime_bound: int,
    tail_exponent: float,
    tail_constant: float = 1.0,
) -> EulerProductResult:
    """prod_{p <= prime_bound} term(p).

    The caller guarantees |term(p) - 1| <= tail_constant * p^{-tail_exponent}
    with tail_exponent > 1.  Since |log(1 + u)| <= 2|u| for |u| <= 1/2, the
    neglected factors contribute at most
    2 c sum_{m > B} m^{-e} <= 2 c B^{1-e} / (e - 1) to the log, summing over
    all integers m > B as a majorant of the primes.
    """
    if tail_exponent <= 1:
        raise ValueError("tail_exponent must exceed 1 for the product to converge")
    if prime_bound < 2:
        raise ValueError("prime_bound must be >= 2")
    if prime_bound > PRIME_BOUND_LIMIT:
        raise CapacityError(f"prime_bound {prime_bound} exceeds {PRIME_BOUND_LIMIT}")
    primes = primes_up_to(prime_bound)
    pf = primes.astype(np.float64)
    try:
        vals = np.asarray(term(pf), dtype=np.float64)
        if vals.shape != pf.shape:
            raise TypeError
    except TypeError:
        vals = np.array([float(term(int(p))) for p in primes], dtype=np.float64)
    if np.any(vals <= 0):
        raise ValueError("Euler product factors must be positive")
    log_value = math.fsum(np.log(vals).tolist())
    B = float(prime_bound)
    tail = 2.0 * tail_constant * B ** (1.0 - tail_exponent) / (tail_exponent - 1.0)
    return EulerProductResult(prime_bound, math.exp(log_value), tail)


@lru_cache(maxsize=None)
def rho_mean_constant(prime_bound: int = PRIME_BOUND) -> EulerProductResult:
    """prod_p (1 - 1/(p^2 (p+1))); half of it is the mean value constant of rho."""
    return euler_product(lambda p: 1.0 - 1.0 / (p * p * (p + 1.0)), prime_bound, 3.0)


@lru_cache(maxsize=None)
def preg_mean_constant(prime_bound: int = PRIME_BOUND) -> EulerProductResult:
    """prod_p (1 - 1/p^2 + 1/p^3)."""
    return euler_product(lambda p: 1.0 - 1.0 / p**2 + 1.0 / p**3, prime_bound, 2.0)


@lru_cache(maxsize=None)
def rho_s_constant(s: float, prime_bound: int = PRIME_BOUND) -> EulerProductResult:
    """prod_p (1 - p^{-(s+1)} + (p-1) / (p (p^{s+1} - 1))), s > 0."""
    if s <= 0:
        raise ValueError("rho_s_constant requires s > 0")

    def term(p):
        q = p ** (s + 1.0)
        return 1.0 - 1.0 / q + (p - 1.0) / (p * (q - 1.0))

    return euler_product(term, prime_bound, s + 1.0, 2.0)


def multiplicative_sieve(
    local: Callable[[int, int], Union[int, float]],
    x: int,
    dtype=np.int64,
) -> np.ndarray:
    """Values f(0..x) of the multiplicative f with f(p^e) = local(p, e).

    Index 0 is left as 0.  ``dtype=object`` gives exact Python integers.
    """
    if x > SUMMATORY_LIMIT:
        raise CapacityError(f"sieve bound {SUMMATORY_LIMIT} exceeded by x = {x}")
    one = 1.0 if dtype is np.float64 else 1
    f = np.full(x + 1, one, dtype=dtype)
    f[0] = 0
    for p in primes_up_to(x).tolist():
        count = x // p
        vals = np.full(count, local(p, 1), dtype=dtype)
        step, e = p, 2
        while step * p <= x:
            # multiples of p^e among p, 2p, ... sit at stride p^{e-1}
            vals[step - 1 :: step] = local(p, e)
            step *= p
            e += 1
        f[p::p] *= vals
    return f


@dataclass(frozen=True)
class SummatoryResult:
    x: int
    sum: Union[int, float]
    main_term: float
    ratio: float


def _summatory_values(function_id: str, x: int, s, t) -> np.ndarray:
    exact = s is None or float(s).is_integer()
    if function_id == "rho":
        s, function_id = 1, "rho_s"
    if function_id in ("rho_s", "phi_s_coprime"):
        if exact:
            si = int(s)
            dtype = np.int64 if float(x) ** si < 2**62 else object
            if function_id == "rho_s":
                local = lambda p, e: p ** (si * e) - p ** (si * (e - 1)) + 1
            else:
                local = lambda p, e: p ** (si * e) - p ** (si * (e - 1))
        else:
            dtype = np.float64
            if function_id == "rho_s":
                local = lambda p, e: p ** (s * e) - p ** (s * (e - 1)) + 1.0
            else:
                local = lambda p, e: p ** (s * e) - p ** (s * (e - 1))
        values = multiplicative_sieve(local, x, dtype)
    elif function_id == "preg_id1":
        values = multiplicative_sieve(lambda p, e: p**e - (e == 1), x)
    elif function_id == "power_coprime":
        n = np.arange(x + 1, dtype=np.int64)
        if exact and float(x) ** s < 2**62:
            values = n ** int(s)
        elif exact:
            values = np.array([k ** int(s) for k in range(x + 1)], dtype=object)
        else:
            values = n.astype(np.float64) ** s
        values[0] = 0
    else:
        raise ValueError(f"unknown summatory function {function_id!r}")
    if t is not None and function_id in ("phi_s_coprime", "power_coprime"):
        coprime = np.gcd(np.arange(x + 1, dtype=np.int64), t) == 1
        values = np.where(coprime, values, 0 if values.dtype != np.float64 else 0.0)
    return values


def summatory(
    function_id: str,
    x: int,
    s: Optional[float] = None,
    t: Optional[int] = None,
    prime_bound: int = PRIME_BOUND,
) -> SummatoryResult:
    """Sum f(n) over n <= x with the leading asymptotic term.

    function_id:
      rho              main term (1/2) prod(1 - 1/(p^2(p+1))) x^2
      rho_s            needs s > 0; main term x^{s+1}/(s+1) * rho_s_constant(s)
      preg_id1         main term (x^2/2) prod(1 - 1/p^2 + 1/p^3)
      phi_s_coprime    needs s > 0, t >= 1; sum over gcd(n, t) = 1 of phi_s(n)
      power_coprime    needs s > 0, t >= 1; sum over gcd(n, t) = 1 of n^s

    Integer s gives an exact integer sum; real s accumulates in floating point.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if x > SUMMATORY_LIMIT:
        raise CapacityError(f"summatory: x = {x} exceeds {SUMMATORY_LIMIT}")
    if function_id in ("rho_s", "phi_s_coprime", "power_coprime") and (s is None or s <= 0):
        raise ValueError(f"{function_id} requires s > 0")
    if function_id in ("phi_s_coprime", "power_coprime") and (t is None or t < 1):
        raise ValueError(f"{function_id} requires t >= 1")

    values = _summatory_values(function_id, x, s, t)
    if values.dtype == np.float64:
        total: Union[int, float] = math.fsum(values.tolist())
    else:
        total = sum(values.tolist())

    xf = float(x)
    if function_id == "rho":
        main = 0.5 * rho_mean_constant(prime_bound).value * xf**2
    elif function_id == "rho_s":
        main = xf ** (s + 1) / (s + 1) * rho_s_constant(float(s), prime_bound).value
    elif function_id == "preg_id1":
        main = 0.5 * preg_mean_constant(prime_bound).value * xf**2
    elif function_id == "phi_s_coprime":
        main = xf ** (s + 1) / ((s + 1) * zeta(s + 1)) * _jordan_coprime_factor(s, t)
    else:
        main = xf ** (s + 1) / (s + 1) * euler_phi(t) / t
    return SummatoryResult(x, total, main, float(total) / main)


def _jordan_coprime_factor(s: float, t: int) -> float:
    """t^s phi(t) / phi_{s+1}(t)."""
    if float(s).is_integer():
        si = int(s)
        return float(Fraction(t**si * euler_phi(t)) / jordan_phi(si + 1, t))
    den = math.prod(p ** ((s + 1) * e) - p ** ((s + 1) * (e - 1)) for p, e in factorize(t))
    return t**s * euler_phi(t) / den


# -- maximal orders -----------------------------------------------------------

KINDS = ("rho_sigma", "rho_psi", "rho_sigma_s")


def local_factor(kind: str, p: int, e: int, s: int = 1) -> Fraction:
    """f(p^e) for f = rho sigma / n^2, rho psi / n^2 or rho_s sigma_s / n^{2s}."""
    q = p**e
    if kind == "rho_sigma":
        return Fraction((q - q // p + 1) * ((q * p - 1) // (p - 1)), q * q)
    if kind == "rho_psi":
        return Fraction((q - q // p + 1) * (q + q // p), q * q)
    if kind == "rho_sigma_s":
        if s < 1:
            raise ValueError("rho_sigma_s needs an integer s >= 1")
        qs, ps = q**s, p**s
        return Fraction((qs - qs // ps + 1) * ((qs * ps - 1) // (ps - 1)), qs * qs)
    raise ValueError(f"unknown kind {kind!r}")


class LocalSup(NamedTuple):
    sup: Fraction
    attained_at: int


def local_factor_bounds(kind: str, p: int, nu_max: int, s: int = 1) -> LocalSup:
    """Largest local value f(p^e) over 1 <= e <= nu_max, with the first e attaining it."""
    if not 1 <= nu_max <= 64:
        raise ValueError("nu_max must lie in [1, 64]")
    best, at = None, 0
    for e in range(1, nu_max + 1):
        v = local_factor(kind, p, e, s)
        if best is None or v > best:
            best, at = v, e
    return LocalSup(best, at)


class TrajectoryPoint(NamedTuple):
    k: int
    n_k: int
    normalized: float
    exact: Fraction


def maximal_order_trajectory(kind: str, k_max: int, s: int = 2) -> List[TrajectoryPoint]:
    """Normalized values along the primorials n_k = p_1 ... p_k, k = 1..k_max.

    rho_sigma / rho_psi: f(n_k) / log log n_k with f = rho sigma / n^2
    (resp. rho psi / n^2); the first point (log log 2 < 0) is reported with
    the exact f only and ``normalized`` = nan.
    rho_sigma_s: f_s(n_k) = rho_s sigma_s / n^{2s} itself, which must stay
    below zeta(s) / zeta(2s).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if not 1 <= k_max <= 100:
        raise CapacityError("k_max must lie in [1, 100]")
    primes = primes_up_to(600).tolist()[:k_max]
    bound = zeta_ratio(s) if kind == "rho_sigma_s" else None
    out = []
    f = Fraction(1)
    n_k = 1
    logs = []
    for k, p in enumerate(primes, start=1):
        n_k *= p
        f *= local_factor(kind, p, 1, s)
        logs.append(math.log(p))
        if kind == "rho_sigma_s":
            value = float(f)
            if not value < bound:
                raise ArithmeticError(f"f_s(n_{k}) = {value} is not below zeta ratio {bound}")
        else:
            loglog = math.log(math.fsum(logs))
            value = float(f) / loglog if loglog > 0 else math.nan
        out.append(TrajectoryPoint(k, n_k, value, f))
    return out



def rho_sigma_s_max(s: int, x: int) -> Tuple[int, Fraction]:
    """The n <= x maximizing f_s(n) = rho_s(n) sigma_s(n) / n^{2s}, with f_s(n) exact.

    The scan runs in floating point; the winner is re-evaluated exactly.
    """
    if s < 1:
        raise ValueError("s must be an integer >= 1")
    values = multiplicative_sieve(lambda p, e: float(local_factor("rho_sigma_s", p, e, s)), x, np.float64)
    n = int(np.argmax(values))
    exact = Fraction(1)
    for p, e in factorize(n):
        exact *= local_factor("rho_sigma_s", p, e, s)
    return n, exact
