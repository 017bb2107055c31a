import numpy as np
import pytest

from regint import oracles as orc
from regint.arith import divisors, euler_phi, is_prime, is_squarefree, kappa
from regint.cyclotomic import (
    cyclotomic,
    cyclotomic_at_minus_one,
    cyclotomic_at_one,
    phi_regular,
    phi_regular_star,
    phi_regular_star_at,
)
from regint.polynomial import Polynomial
from regint.regular import CapacityError, rho

X = Polynomial([0, 1])


def test_cyclotomic_examples():
    assert cyclotomic(1) == X - 1
    assert cyclotomic(4) == X**2 + 1
    assert cyclotomic(12) == X**4 - X**2 + 1
    # the first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    assert min(cyclotomic(105).coeffs) == -2


def test_phi_regular_examples():
    assert phi_regular(12).to_text() == "x^9 - x^6 + x^3 - 1"
    assert phi_regular(30) == X**30 - 1
    assert phi_regular(4) == X**3 - X**2 + X - 1
    assert phi_regular_star(12).to_text() == "x^8 + x^7 + x^6 + x^2 + x + 1"
    assert phi_regular_star(4) == X**2 + 1
    for p in (2, 3, 7, 101):
        assert phi_regular_star(p) == Polynomial([1] * p)


def test_values_at_plus_minus_one():
    assert cyclotomic_at_one(8) == 2 and cyclotomic_at_one(12) == 1
    assert cyclotomic_at_minus_one(18) == 3 and cyclotomic_at_minus_one(15) == 1
    assert phi_regular_star_at(12, 1) == 6
    assert abs(phi_regular_star_at(9, -1)) == 1
    assert phi_regular_star_at(13, 1) == 13
    with pytest.raises(ValueError):
        phi_regular_star_at(12, -1)
    with pytest.raises(ValueError):
        phi_regular_star_at(9, 2)


def test_structure_to_2000():
    for n in range(1, 2001):
        full = Polynomial([1])
        for d in divisors(n):
            full = full * cyclotomic(d)
        assert full == X**n - 1
        assert cyclotomic(n).degree == euler_phi(n)
        bar = phi_regular(n)
        assert bar.degree == rho(n)
        if n >= 2:
            star = phi_regular_star(n)
            assert star.degree == rho(n) - 1
            assert star.is_palindromic()
            assert star(1) == kappa(n)
            assert cyclotomic_at_one(n) == cyclotomic(n)(1)
        if n >= 3:
            assert cyclotomic_at_minus_one(n) == cyclotomic(n)(-1)
        if is_squarefree(n):
            assert bar == X**n - 1


def test_roots_are_regular_residues():
    for n in range(1, 101):
        coeffs = np.array(phi_regular(n).coeffs[::-1], dtype=float)
        ks = orc.regular_residues(n)
        z = np.exp(2j * np.pi * ks / n)
        assert np.max(np.abs(np.polyval(coeffs, z))) <= 1e-6
        # non-regular residues are not roots
        others = np.setdiff1d(np.arange(1, n + 1), ks)
        if len(others):
            w = np.exp(2j * np.pi * others / n)
            assert np.min(np.abs(np.polyval(coeffs, w))) > 1e-6


def test_capacity():
    with pytest.raises(CapacityError):
        cyclotomic(10**4 + 1)
    with pytest.raises(ValueError):
        cyclotomic(0)
    assert is_prime(9973) and cyclotomic(9973).degree == 9972
