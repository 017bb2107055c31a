import math
from fractions import Fraction

import numpy as np
import pytest

from regint.arith import euler_phi, jordan_phi, primes_up_to
from regint.asymptotics import (
    euler_product,
    limsup_rho_sigma,
    local_factor,
    local_factor_bounds,
    maximal_order_trajectory,
    multiplicative_sieve,
    preg_mean_constant,
    rho_mean_constant,
    rho_s_constant,
    rho_sigma_s_max,
    summatory,
    zeta,
    zeta_ratio,
)
from regint.regular import CapacityError, p_reg_id1, rho, rho_s


def test_zeta_against_known_values():
    assert zeta(2) == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert zeta(4) == pytest.approx(math.pi**4 / 90, rel=1e-15)
    assert zeta_ratio(2) == pytest.approx(15 / math.pi**2, rel=1e-15)
    scipy_special = pytest.importorskip("scipy.special")
    for s in (1.5, 2.5, 3.0, 7.25, 30.0):
        assert zeta(s) == pytest.approx(scipy_special.zeta(s), rel=1e-14)


def test_limsup_constant():
    assert limsup_rho_sigma() == pytest.approx(6 * math.exp(0.5772156649015329) / math.pi**2, rel=1e-15)
    assert limsup_rho_sigma() == pytest.approx(1.0827622, abs=1e-7)


def test_summatory_small():
    assert summatory("rho", 10).sum == 49
    assert summatory("preg_id1", 10).sum == 41


def test_sieve_matches_direct():
    x = 10**4
    for fid, direct in (("rho", rho), ("preg_id1", p_reg_id1)):
        vals = np.cumsum(np.array([0] + [direct(n) for n in range(1, x + 1)], dtype=object))
        assert summatory(fid, x).sum == vals[-1]
    assert summatory("rho_s", x, s=2).sum == sum(int(rho_s(2, n)) for n in range(1, x + 1))
    assert summatory("phi_s_coprime", 2000, s=1, t=6).sum == sum(
        euler_phi(n) for n in range(1, 2001) if math.gcd(n, 6) == 1)


def test_jordan_coprime_main_term():
    res = summatory("phi_s_coprime", 10**5, s=1, t=6)
    expected = 1e10 * euler_phi(6) * 6 / (2 * zeta(2) * float(jordan_phi(2, 6)))
    assert res.main_term == pytest.approx(expected, rel=1e-12)
    assert res.ratio == pytest.approx(1, abs=0.01)


def test_euler_product_basics():
    one = euler_product(lambda p: 1.0 + 0 * p, 1000, 2.0)
    assert one.value == 1.0
    res = rho_mean_constant(10**6)
    assert res.value == pytest.approx(0.8815, abs=1e-4)
    assert res.interval[0] <= res.value <= res.interval[1]
    # the first factors are 11/12, 35/36, 149/150
    small = euler_product(lambda p: 1.0 - 1.0 / (p * p * (p + 1.0)), 5, 3.0)
    assert small.value == pytest.approx(11 / 12 * 35 / 36 * 149 / 150, rel=1e-15)
    assert preg_mean_constant(10**6).value == pytest.approx(0.748535, abs=1e-5)
    with pytest.raises(ValueError):
        euler_product(lambda p: p, 100, 1.0)
    with pytest.raises(CapacityError):
        euler_product(lambda p: p, 10**9, 2.0)


def test_euler_product_tail_is_rigorous():
    ref = rho_mean_constant(10**6).value
    for bound in (10, 100, 1000):
        r = rho_mean_constant(bound)
        assert abs(math.log(ref / r.value)) <= r.tail_bound


def test_rho_s_constant_matches_local_densities():
    # direct product over p <= 1000 of (1 - 1/p) sum_e rho_s(p^e) / p^{e(s+1)}
    s = 2
    direct = 1.0
    for p in primes_up_to(1000).tolist():
        series = 1.0 + sum((p ** (s * e) - p ** (s * (e - 1)) + 1) / p ** (e * (s + 1)) for e in range(1, 40))
        direct *= (1 - 1 / p) * series
    assert rho_s_constant(2, 1000).value == pytest.approx(direct, rel=1e-12)


def test_multiplicative_sieve_float():
    vals = multiplicative_sieve(lambda p, e: float(p**e - p ** (e - 1) + 1), 1000, np.float64)
    assert all(vals[n] == rho(n) for n in range(1, 1001))


def test_local_factor_bounds():
    assert local_factor_bounds("rho_sigma", 2, 64) == (Fraction(3, 2), 1)
    assert local_factor("rho_sigma", 2, 2) == Fraction(21, 16)
    assert local_factor_bounds("rho_sigma", 3, 64).sup == Fraction(4, 3)
    assert local_factor_bounds("rho_sigma_s", 2, 64, 2) == (Fraction(5, 4), 1)
    for p in primes_up_to(200).tolist():
        cap = Fraction(p + 1, p)
        assert all(local_factor("rho_sigma", p, e) < cap for e in range(2, 65))
    with pytest.raises(ValueError):
        local_factor_bounds("rho_sigma", 2, 65)


def test_trajectory():
    traj = maximal_order_trajectory("rho_sigma", 30)
    assert traj[0].exact == Fraction(3, 2) and traj[0].n_k == 2 and math.isnan(traj[0].normalized)
    window = [t.normalized for t in traj[9:25]]
    assert all(a > b for a, b in zip(window, window[1:]))
    assert min(window) >= limsup_rho_sigma()
    assert traj[24].normalized == pytest.approx(1.143, abs=1e-3)
    traj_s = maximal_order_trajectory("rho_sigma_s", 40, s=2)
    assert all(float(t.exact) < zeta_ratio(2) for t in traj_s)


@pytest.mark.parametrize("s", [2, 3])
def test_zeta_ratio_bound(s):
    n, f = rho_sigma_s_max(s, 10**5)
    assert n == 30030
    assert float(f) < zeta_ratio(s)


def test_convergence_ratios():
    assert 0.99 <= summatory("rho", 10**6).ratio <= 1.01
    assert 0.98 <= summatory("preg_id1", 10**6).ratio <= 1.02
    assert 0.99 <= summatory("rho_s", 10**5, s=2).ratio <= 1.01
    real = summatory("rho_s", 10**4, s=1.5)
    assert isinstance(real.sum, float) and 0.98 <= real.ratio <= 1.02


def test_summatory_preconditions():
    with pytest.raises(ValueError):
        summatory("rho_s", 100)
    with pytest.raises(ValueError):
        summatory("power_coprime", 100, s=1)
    with pytest.raises(CapacityError):
        summatory("rho", 10**8)
    with pytest.raises(ValueError):
        summatory("nope", 10)
