"""Acceptance criteria, one test each, each printing a single PASS/FAIL line."""

import random
import time
from fractions import Fraction

import numpy as np
import pytest

from regint import oracles as orc
from regint.asymptotics import (
    limsup_rho_sigma,
    local_factor,
    local_factor_bounds,
    maximal_order_trajectory,
    rho_sigma_s_max,
    summatory,
    zeta_ratio,
)
from regint.arith import primes_up_to
from regint.bernoulli import bernoulli_number, bernoulli_sum_regular_m1, partial_power_sum_regular
from regint.cyclotomic import phi_regular, phi_regular_star
from regint.regular import is_regular, regular_set, rho
from regint.verify import run_identity


@pytest.fixture
def announce(capsys):
    def _announce(number, ok, detail):
        with capsys.disabled():
            print(f"\nacceptance criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return _announce


def test_criterion_1_pinned_values(announce):
    t0 = time.perf_counter()
    checks = {
        "rho(12) = 9": rho(12) == 9,
        "Reg_12": regular_set(12).tolist() == [1, 3, 4, 5, 7, 8, 9, 11, 12],
        "Phibar_12": phi_regular(12).to_text() == "x^9 - x^6 + x^3 - 1",
        "Phibar*_12": phi_regular_star(12).to_text() == "x^8 + x^7 + x^6 + x^2 + x + 1",
        "B_2, B_4": (bernoulli_number(2), bernoulli_number(4)) == (Fraction(1, 6), Fraction(-1, 30)),
    }
    sample = random.Random(1).sample(range(1, 5000), 50)
    checks["Tbar_1 = 1/2 on 50 n"] = all(
        bernoulli_sum_regular_m1(n) == Fraction(1, 2)
        and orc.bernoulli_poly_sum(1, n, orc.power_sums(orc.regular_residues(n), 1)) == Fraction(1, 2)
        for n in sample
    )
    bad = [k for k, v in checks.items() if not v]
    announce(1, not bad, f"{len(checks) - len(bad)}/{len(checks)} exact checks in {time.perf_counter() - t0:.1f}s"
             + (f"; failed: {bad}" if bad else ""))


EXACT_SUITES = [
    ("prop1_rho_r", 60),
    ("prop4_power_sums", 2000),
    ("sum1_4", 2000),
    ("prop6_bernoulli", 2000),
    ("prop7_preg", 2000),
    ("prop9_menon", 5000),
    ("prop12_product", 300),
    ("prop14_cyclotomic", 2000),
]


def test_criterion_2_exact_suites(announce):
    t0 = time.perf_counter()
    reports = [run_identity(name, max_n=max_n) for name, max_n in EXACT_SUITES]
    elapsed = time.perf_counter() - t0
    failed = [r.identity for r in reports if not r.passed or r.error != 0]
    cases = sum(r.cases for r in reports)
    ok = not failed and elapsed <= 300
    announce(2, ok, f"{len(reports)} exact suites, {cases} cases, tolerance 0, {elapsed:.0f}s (limit 300s)"
             + (f"; failed: {failed}" if failed else ""))


FLOAT_SUITES = [
    ("prop13_gamma", 500, 1e-9),
    ("prop10_11_trig", 300, 1e-7),
    ("prop15_sin_cos", 300, 1e-9),
    ("cbar_exponential", 300, 1e-9),
]


def test_criterion_3_float_suites(announce):
    reports = [run_identity(name, max_n=max_n, tolerance=tol) for name, max_n, tol in FLOAT_SUITES]
    detail = ", ".join(f"{r.identity} max err {float(r.error):.1e} <= {r.tolerance:g}" for r in reports)
    announce(3, all(r.passed for r in reports), detail)


def test_criterion_4_asymptotic_ratios(announce):
    results = {}
    timings = {}

    t0 = time.perf_counter()
    results["rho x=1e6"] = (summatory("rho", 10**6).ratio, 0.99, 1.01)
    timings["rho x=1e6"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    results["preg_id1 x=1e6"] = (summatory("preg_id1", 10**6).ratio, 0.98, 1.02)
    timings["preg_id1 x=1e6"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    results["rho_2 x=1e5"] = (summatory("rho_s", 10**5, s=2).ratio, 0.99, 1.01)
    timings["rho_2 x=1e5"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    worst = max(partial_power_sum_regular(0, n, 10**5).relative_error for n in range(1, 201))
    results["Sbar_0 witness x=1e5"] = (1 + worst, 0.98, 1.02)
    timings["Sbar_0 witness x=1e5"] = time.perf_counter() - t0

    ok = all(lo <= v <= hi for v, lo, hi in results.values()) and all(t <= 120 for t in timings.values())
    detail = "; ".join(f"{k}: {v:.5f} in [{lo}, {hi}] ({timings[k]:.1f}s)" for k, (v, lo, hi) in results.items())
    announce(4, ok, detail)


def test_criterion_5_maximal_orders(announce):
    limit = limsup_rho_sigma()
    traj = maximal_order_trajectory("rho_sigma", 25)
    window = [t.normalized for t in traj[9:25]]
    decreasing = all(a > b for a, b in zip(window, window[1:]))
    above = min(window) >= limit
    at_25 = traj[24].normalized <= 1.20

    local_ok = True
    for p in primes_up_to(100).tolist():
        for kind, s in (("rho_sigma", 1), ("rho_sigma_s", 2), ("rho_sigma_s", 3)):
            cap = local_factor(kind, p, 1, s)
            sup = local_factor_bounds(kind, p, 64, s)
            strict = all(local_factor(kind, p, e, s) < cap for e in range(2, 65))
            local_ok &= sup.attained_at == 1 and sup.sup == cap and strict
        local_ok &= local_factor("rho_sigma", p, 1) == Fraction(p + 1, p)

    zeta_ok = []
    for s in (2, 3):
        n, f = rho_sigma_s_max(s, 10**5)
        zeta_ok.append((s, n, float(f), zeta_ratio(s)))
    below = all(f < z for _, _, f, z in zeta_ok)

    ok = decreasing and above and at_25 and local_ok and below
    detail = (f"k=10..25 decreasing={decreasing}, min {min(window):.4f} >= {limit:.4f}, "
              f"k=25 {traj[24].normalized:.4f} <= 1.20; local sups exact={local_ok}; "
              + ", ".join(f"max f_{s} = {f:.5f} at n={n} < {z:.5f}" for s, n, f, z in zeta_ok))
    announce(5, ok, detail)


def test_criterion_6_regularity_characterizations(announce):
    mismatches = 0
    for n in range(1, 101):
        for k in range(1, n + 1):
            mismatches += is_regular(k, n) != orc.weak_order_regular(k, n)
    rng = np.random.default_rng(6)
    checked = 0
    for n in range(1, 10**5 + 1):
        members = regular_set(n)
        ks = rng.integers(1, n + 1, size=min(n, 4)).tolist()
        for k in ks:
            by_gcd = is_regular(k, n)
            mismatches += by_gcd != orc.prime_power_regular(k, n)
            mismatches += by_gcd != (k in members)
            checked += 1
    announce(6, mismatches == 0,
             f"{mismatches} mismatches; weak order on all k for n <= 100, prime-power and mask on {checked} sampled (k, n), n <= 1e5")
