"""Exact arithmetic for regular integers (mod n).

An integer k is regular (mod n) when k^{m+1} = k (mod n) for some m >= 1,
equivalently when gcd(k, n) is a unitary divisor of n.  The package gives
closed forms for counts, sums and products over the regular residues, each
paired with a brute-force oracle in :mod:`regint.oracles` and checked by
:mod:`regint.verify`.
"""

from .arith import (
    Factorization,
    LogExact,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    jordan_phi,
    kappa,
    mangoldt,
    mobius,
    ramanujan_sum,
    sigma_s,
    tau,
    unitary_divisors,
)
from .asymptotics import (
    EulerProductResult,
    euler_product,
    limsup_rho_sigma,
    local_factor_bounds,
    maximal_order_trajectory,
    preg_mean_constant,
    rho_mean_constant,
    rho_s_constant,
    rho_sigma_s_max,
    summatory,
    zeta_ratio,
)
from .bernoulli import (
    bernoulli_number,
    bernoulli_poly,
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
from .cyclotomic import (
    cyclotomic,
    cyclotomic_at_minus_one,
    cyclotomic_at_one,
    phi_regular,
    phi_regular_star,
    phi_regular_star_at,
)
from .polynomial import IntPolynomial, Polynomial, RationalPolynomial
from .products import (
    LogSpaceReal,
    factorial_core,
    gamma_product_all,
    gamma_product_coprime,
    gamma_product_regular,
    product_coprime,
    product_regular,
    trig_product,
    trig_sum,
)
from .regular import (
    ID,
    ONE,
    ArithFunction,
    CapacityError,
    RegularSet,
    c_bar,
    gcd_sum_regular,
    is_regular,
    menon_coprime,
    menon_regular,
    mu_bar,
    p_reg,
    p_reg_id1,
    power,
    regular_set,
    rho,
    rho_r,
    rho_s,
)
from .verify import CATALOG, VerificationReport, run_identity

__version__ = "0.1.0"
