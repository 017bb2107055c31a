import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from regint import oracles as orc
from regint.arith import (
    Factorization,
    LogExact,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_squarefree,
    jordan_phi,
    kappa,
    mangoldt,
    mobius,
    multiplicative_int,
    omega,
    primes_up_to,
    ramanujan_sum,
    sigma_s,
    smallest_prime_factors,
    tau,
    unitary_convolution,
    unitary_divisors,
)


def naive_factor(n):
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def test_factorize_examples():
    assert list(factorize(1)) == []
    assert list(factorize(12)) == [(2, 2), (3, 1)]
    assert list(factorize(9699690)) == [(p, 1) for p in (2, 3, 5, 7, 11, 13, 17, 19)]
    assert factorize(360).value() == 360


@pytest.mark.parametrize("n", [0, -5, 2**64])
def test_factorize_domain(n):
    with pytest.raises(ValueError):
        factorize(n)


def test_factorize_beyond_sieve():
    p, q = 1_000_000_007, 998_244_353
    assert list(factorize(p * q)) == [(q, 1), (p, 1)]
    assert list(factorize(2**61 - 1)) == [(2**61 - 1, 1)]
    n = 2**5 * 3**4 * 1_000_003**2
    assert list(factorize(n)) == [(2, 5), (3, 4), (1_000_003, 2)]


@given(st.integers(1, 10**6))
def test_factorize_matches_trial_division(n):
    assert list(factorize(n)) == naive_factor(n)


def test_reconstruction_to_one_million():
    for n in range(1, 10**6 + 1):
        assert factorize(n).value() == n


def test_spf_table_is_read_only():
    spf = smallest_prime_factors(1000)
    assert spf[91] == 7 and spf[97] == 97
    with pytest.raises(ValueError):
        spf[10] = 3


def test_primes_and_is_prime():
    ps = primes_up_to(200).tolist()
    assert ps == [n for n in range(2, 201) if all(n % d for d in range(2, n))]
    assert all(is_prime(p) == (p in ps) for p in range(201))
    assert is_prime(2**61 - 1) and not is_prime(3215031751)  # strong pseudoprime to 2, 3, 5, 7


def test_divisor_families():
    assert unitary_divisors(12) == [1, 3, 4, 12]
    assert unitary_divisors(7**3) == [1, 343]
    assert unitary_divisors(30) == divisors(30) and len(divisors(30)) == 8
    assert divisors(1) == [1]


def test_classical_functions():
    assert euler_phi(12) == 4
    assert kappa(12) == 6
    assert mangoldt(8) == LogExact(2) and mangoldt(12) == LogExact(1)
    assert float(mangoldt(9)) == pytest.approx(math.log(3))
    assert sigma_s(6, 2) == 50
    assert (tau(12), omega(12), mobius(30), mobius(12)) == (6, 2, -1, 0)
    assert is_squarefree(30) and not is_squarefree(18)


def test_logexact_sum():
    total = sum((mangoldt(d) for d in (2, 4, 3, 5)), start=LogExact(1))
    assert total == LogExact(60)


def test_jordan_examples():
    assert jordan_phi(2, 12) == 96
    assert jordan_phi(3, 1) == 1 and jordan_phi(-2, 1) == 1
    assert jordan_phi(-1, 4) == Fraction(-1, 4)


@pytest.mark.parametrize("s", range(-3, 5))
def test_jordan_vs_definition(s):
    for n in range(1, 501):
        assert jordan_phi(s, n) == orc.definitional_jordan(s, n)


def test_ramanujan_examples():
    assert ramanujan_sum(12, 0) == 4
    assert ramanujan_sum(9, 3) == -3
    assert all(ramanujan_sum(n, 1) == mobius(n) for n in range(1, 51))


def test_ramanujan_bounded_by_phi():
    for n in range(1, 501):
        phi = euler_phi(n)
        for t in range(-500, 501):
            c = ramanujan_sum(n, t)
            assert isinstance(c, int) and abs(c) <= phi


def test_ramanujan_vs_exponential_sum():
    for n in range(1, 80):
        ks = orc.coprime_residues(n)
        for t in range(-n, 2 * n):
            assert abs(ramanujan_sum(n, t) - orc.exp_sum(n, ks, t)[0]) < 1e-9


def test_multiplicative_reconstruction():
    assert multiplicative_int(lambda p, e: p**e, 360) == 360
    assert multiplicative_int(lambda p, e: 7, 1) == 1
    assert multiplicative_int(lambda p, e: p**e - p ** (e - 1) + 1, 12) == 9


def test_unitary_convolution_identity():
    # sum over unitary divisors of 1 * 1 is 2^omega
    for n in range(1, 300):
        assert unitary_convolution(lambda d: 1, lambda d: 1, n) == 2 ** omega(n)


coprime_pairs = st.tuples(st.integers(1, 10**4), st.integers(1, 10**4)).filter(lambda ab: math.gcd(*ab) == 1)


@settings(max_examples=200)
@given(coprime_pairs, st.integers(-3, 4))
def test_multiplicativity(ab, s):
    a, b = ab
    assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)
    assert jordan_phi(s, a * b) == jordan_phi(s, a) * jordan_phi(s, b)
    assert sigma_s(a * b, 2) == sigma_s(a, 2) * sigma_s(b, 2)
    assert kappa(a * b) == kappa(a) * kappa(b)


def test_factorization_object():
    f = factorize(72)
    assert isinstance(f, Factorization)
    assert f.primes == (2, 3) and f.prime_powers == (8, 9) and len(f) == 2
    assert euler_phi(f) == euler_phi(72)
