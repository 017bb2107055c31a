import random
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from regint import oracles as orc
from regint.arith import is_squarefree, omega
from regint.bernoulli import (
    bernoulli_number,
    bernoulli_poly,
    bernoulli_poly_eval,
    bernoulli_sum_all,
    bernoulli_sum_coprime,
    bernoulli_sum_regular,
    bernoulli_sum_regular_m1,
    partial_power_sum_regular,
    power_sum_all,
    power_sum_coprime,
    power_sum_regular,
    special_case_sums,
)
from regint.polynomial import Polynomial
from regint.regular import regular_set, rho


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1 and bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(7) == 0
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert all(bernoulli_number(m) == 0 for m in range(3, 60, 2))


def test_bernoulli_12_reconstructs_power_sum():
    # Faulhaber: sum_{k<n} k^12 = (1/13) sum_j C(13, j) B_j n^{13-j}
    for n in (5, 17):
        faulhaber = sum(comb(13, j) * bernoulli_number(j) * Fraction(n) ** (13 - j) for j in range(13)) / 13
        assert faulhaber == sum(k**12 for k in range(n))


def test_recurrence_closure():
    for r in range(1, 41):
        total = sum(comb(r + 1, 2 * m) * bernoulli_number(2 * m) for m in range(r // 2 + 1))
        assert total == Fraction(r + 1, 2)


def test_bernoulli_polynomials():
    assert bernoulli_poly(2) == Polynomial([Fraction(1, 6), -1, 1])
    assert bernoulli_poly(3) == Polynomial([0, Fraction(1, 2), Fraction(-3, 2), 1])
    assert bernoulli_poly_eval(2, Fraction(1, 2)) == Fraction(-1, 12)
    for m in range(1, 12):
        # B_m(x + 1) - B_m(x) = m x^{m-1}
        for x in (Fraction(1, 3), Fraction(2), Fraction(-5, 7)):
            assert bernoulli_poly_eval(m, x + 1) - bernoulli_poly_eval(m, x) == m * x ** (m - 1)


def test_power_sum_examples():
    assert power_sum_all(1, 10) == 55
    assert power_sum_all(2, 4) == 30
    assert power_sum_all(3, 5) == 225
    assert power_sum_coprime(1, 12) == 24
    assert power_sum_coprime(2, 12) == 196
    assert power_sum_coprime(2, 2) == 1
    assert power_sum_coprime(3, 1) == 1
    assert power_sum_regular(1, 12) == 60
    assert power_sum_regular(2, 12) == 510
    assert all(power_sum_regular(r, 1) == 1 for r in range(1, 8))
    assert special_case_sums(12) == {1: 60, 2: 510, 3: 4860, 4: 49398}


def test_power_sums_vs_brute():
    for n in range(1, 2001):
        brute = {
            "all": orc.power_sums(np.arange(1, n + 1), 6),
            "coprime": orc.power_sums(orc.coprime_residues(n), 6),
            "regular": orc.power_sums(orc.regular_residues(n), 6),
        }
        special = special_case_sums(n)
        for r in range(1, 7):
            assert power_sum_all(r, n) == brute["all"][r]
            assert power_sum_coprime(r, n) == brute["coprime"][r]
            assert power_sum_regular(r, n) == brute["regular"][r]
            if r <= 4:
                assert special[r] == brute["regular"][r]


def test_squarefree_reduction():
    for n in range(1, 2001):
        if is_squarefree(n):
            assert regular_set(n).tolist() == list(range(1, n + 1))
            assert all(power_sum_regular(r, n) == power_sum_all(r, n) for r in range(1, 7))


def test_bernoulli_sum_examples():
    assert bernoulli_sum_all(2, 4) == Fraction(1, 24)
    assert bernoulli_sum_regular(2, 4) == Fraction(1, 8)
    assert bernoulli_sum_regular_m1(12) == Fraction(1, 2) == bernoulli_sum_regular_m1(1)
    assert bernoulli_sum_regular_m1(12, include_zero=True) == Fraction(-1, 2)
    for n in (6, 30, 210):
        assert all(bernoulli_sum_regular(m, n) == bernoulli_sum_all(m, n) for m in range(2, 11))
    with pytest.raises(ValueError):
        bernoulli_sum_regular(1, 5)


def test_bernoulli_sums_vs_brute():
    for n in range(1, 2001):
        sets = {
            "all": np.arange(1, n + 1),
            "coprime": orc.coprime_residues(n),
            "regular": orc.regular_residues(n),
        }
        sums = {k: orc.power_sums(v, 10) for k, v in sets.items()}
        for m in range(2, 11):
            assert bernoulli_sum_all(m, n) == orc.bernoulli_poly_sum(m, n, sums["all"])
            assert bernoulli_sum_coprime(m, n) == orc.bernoulli_poly_sum(m, n, sums["coprime"])
            assert bernoulli_sum_regular(m, n) == orc.bernoulli_poly_sum(m, n, sums["regular"])
        assert orc.bernoulli_poly_sum(1, n, sums["regular"]) == Fraction(1, 2)


def test_partial_sums():
    r = partial_power_sum_regular(0, 12, 1200)
    assert (r.value, r.main_term) == (900, 900)
    r = partial_power_sum_regular(0, 1, 100)
    assert (r.value, r.main_term) == (100, 100)
    r = partial_power_sum_regular(1, 12, 1200)
    brute = sum(k for k in range(1, 1201) if orc.prime_power_regular(k, 12))
    assert r.value == brute and r.main_term == 540000
    assert abs(r.value - r.main_term) <= 12 * 3**2 * 1200
    with pytest.raises(ValueError):
        partial_power_sum_regular(-1, 5, 10)


def test_partial_sum_uniformity():
    # |Sbar_0(n, x) - x rho(n)/n| / 3^omega(n) stays bounded in x
    worst = []
    for x in (10**3, 10**4, 10**5):
        worst.append(max(partial_power_sum_regular(0, n, x).scaled_error for n in range(1, 201)))
    assert max(worst) <= 1.0
    sample = random.Random(3).sample(range(2, 201), 20)
    for n in sample:
        res = partial_power_sum_regular(0, n, 10**5)
        assert abs(res.value * n / (10**5 * rho(n)) - 1) <= 0.02
        assert res.scaled_error == abs(res.value - res.main_term) / 3 ** omega(n)
