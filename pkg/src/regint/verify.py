"""Identity catalog: closed forms checked against brute-force oracles over n-ranges.

Each :class:`Identity` yields ``(label, observed, expected)`` cases for one n.
Exact identities compare with tolerance zero; float identities compare with
an absolute or relative tolerance.  :func:`run_identity` folds the cases
into a :class:`VerificationReport`.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

import mpmath
import numpy as np

from . import oracles as orc
from .arith import (
    divisors,
    euler_phi,
    is_prime,
    is_squarefree,
    jordan_phi,
    mobius,
    ramanujan_sum,
)
from .asymptotics import local_factor, local_factor_bounds
from .bernoulli import (
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
)
from .polynomial import IntPolynomial
from .products import (
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
    c_bar,
    gcd_sum_regular,
    gcd_sum_regular_product,
    is_regular,
    menon_coprime,
    menon_regular,
    menon_regular_convolution,
    mu_bar,
    p_reg,
    p_reg_id1,
    power,
    reduce_over_regular,
    regular_set,
    rho,
    rho_r,
)

__all__ = ["CATALOG", "Identity", "VerificationReport", "run_identity"]

Case = Tuple[str, object, object]
ORACLE_DPS = 40


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    check: Callable[[int], Iterable[Case]]
    exact: bool = True
    default_max_n: int = 1000
    n_min: int = 1
    tolerance: float = 0.0
    relative: bool = False


@dataclass
class VerificationReport:
    """Outcome of checking one identity over [n_from, n_to]."""

    identity: str
    n_from: int
    n_to: int
    passed: bool = True
    exact: bool = True
    tolerance: float = 0.0
    cases: int = 0
    worst_n: Optional[int] = None
    worst_label: str = ""
    observed: object = None
    expected: object = None
    error: object = 0
    failures: int = 0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_row(self) -> Dict[str, object]:
        return {
            "identity": self.identity,
            "from": self.n_from,
            "to": self.n_to,
            "status": self.status,
            "exact": self.exact,
            "tolerance": self.tolerance,
            "cases": self.cases,
            "failures": self.failures,
            "worst_n": self.worst_n,
            "worst_label": self.worst_label,
            "observed": self.observed,
            "expected": self.expected,
            "error": self.error,
        }


# -- per-n checks ---------------------------------------------------------


def _regularity(n: int) -> Iterator[Case]:
    members = set(regular_set(n).tolist())
    for k in range(1, n + 1):
        by_gcd = is_regular(k, n)
        yield (f"k={k} weak-order", by_gcd, orc.weak_order_regular(k, n))
        yield (f"k={k} prime-power", by_gcd, orc.prime_power_regular(k, n))
        yield (f"k={k} regular_set", k in members, by_gcd)
        yield (f"k={k} shift", is_regular(k + n, n), by_gcd)


def _prop1(n: int) -> Iterator[Case]:
    for r in (1, 2, 3):
        yield (f"r={r}", rho_r(r, n), orc.tuple_count_regular(r, n))
        conv = sum(jordan_phi(r, d) for d in _unitary(n))
        yield (f"r={r} unitary sum of Jordan", Fraction(rho_r(r, n)), conv)


def _unitary(n: int) -> List[int]:
    return [d for d in divisors(n) if math.gcd(d, n // d) == 1]


_G_POOL: Tuple[Tuple[str, Callable[[Fraction], Fraction]], ...] = (
    ("x", lambda x: x),
    ("x^2", lambda x: x * x),
    ("x^3-x", lambda x: x**3 - x),
    ("1/(1+x)", lambda x: 1 / (1 + x)),
    ("x/(2+x^2)", lambda x: x / (2 + x * x)),
    ("[x>1/2]", lambda x: Fraction(int(x > Fraction(1, 2)))),
)


def _prop3(n: int) -> Iterator[Case]:
    members = orc.regular_residues(n).tolist()
    for gname, g in _G_POOL:
        gbar = orc.coprime_sum(g, n)
        yield (f"g={gname} connect", gbar, sum(mobius(d) * orc.full_sum(g, n // d) for d in divisors(n)))
        for f in (ONE, ID):
            direct = sum((f(math.gcd(k, n)) * g(Fraction(k, n)) for k in members), Fraction(0))
            reduced = reduce_over_regular(f, lambda m: orc.coprime_sum(g, m), n)
            yield (f"g={gname} f={f.name}", reduced, direct)
    # weight not of the form g(k/n)
    w = lambda k: k * k + n
    direct = sum(w(k) for k in members)
    grouped = sum(sum(w(d * j) for j in range(1, n // d + 1) if math.gcd(j, n // d) == 1) for d in _unitary(n))
    yield ("w=k^2+n", grouped, direct)


R_MAX = 6
M_MAX = 10


def _prop4(n: int) -> Iterator[Case]:
    sets = {
        "all": np.arange(1, n + 1, dtype=np.int64),
        "coprime": orc.coprime_residues(n),
        "regular": orc.regular_residues(n),
    }
    sums = {k: orc.power_sums(v, R_MAX) for k, v in sets.items()}
    for r in range(1, R_MAX + 1):
        yield (f"S_{r}", power_sum_all(r, n), sums["all"][r])
        yield (f"S'_{r}", power_sum_coprime(r, n), sums["coprime"][r])
        yield (f"Sbar_{r}", power_sum_regular(r, n), sums["regular"][r])
    if is_squarefree(n):
        yield ("squarefree Sbar_3 = S_3", power_sum_regular(3, n), power_sum_all(3, n))


def _sum1_4(n: int) -> Iterator[Case]:
    brute = orc.power_sums(orc.regular_residues(n), 4)
    special = special_case_sums(n)
    for r in range(1, 5):
        yield (f"display r={r}", special[r], brute[r])
        yield (f"display r={r} vs general", special[r], power_sum_regular(r, n))


PARTIAL_X = 10**5


def _prop5(n: int) -> Iterator[Case]:
    res = partial_power_sum_regular(0, n, PARTIAL_X)
    yield (f"x={PARTIAL_X}", res.value / res.main_term, 1.0)


def _prop6(n: int) -> Iterator[Case]:
    sets = {
        "all": np.arange(1, n + 1, dtype=np.int64),
        "coprime": orc.coprime_residues(n),
        "regular": orc.regular_residues(n),
    }
    sums = {k: orc.power_sums(v, M_MAX) for k, v in sets.items()}
    closed = {"all": bernoulli_sum_all, "coprime": bernoulli_sum_coprime, "regular": bernoulli_sum_regular}
    for m in range(2, M_MAX + 1):
        for dom, fn in closed.items():
            yield (f"m={m} {dom}", fn(m, n), orc.bernoulli_poly_sum(m, n, sums[dom]))
    yield ("m=1 regular", bernoulli_sum_regular_m1(n), orc.bernoulli_poly_sum(1, n, sums["regular"]))
    zero_based = orc.regular_residues(n) % n  # k = n becomes k = 0
    yield (
        "m=1 regular from 0",
        bernoulli_sum_regular_m1(n, include_zero=True),
        orc.bernoulli_poly_sum(1, n, orc.power_sums(zero_based, 1)),
    )


def _prop7_exact(n: int) -> Iterator[Case]:
    members = orc.regular_residues(n)
    gcds = np.gcd(members, n)
    yield ("Ptilde", gcd_sum_regular(n), int(gcds.sum()))
    yield ("Ptilde product form", gcd_sum_regular_product(n), int(gcds.sum()))
    yield ("Pbar_{id^2,0}", p_reg(power(2), 0, n), int((gcds.astype(object) ** 2).sum()))
    yield ("cbar(0) = rho", c_bar(n, 0), len(members))
    yield ("cbar(1) = squarefull", c_bar(n, 1), int(orc.is_squarefull(n)))
    yield ("mu_bar", mu_bar(n), int(orc.is_squarefull(n)))
    yield ("mu_bar = sum mu(d)", mu_bar(n), sum(mobius(d) for d in _unitary(n)))
    yield ("Pbar_{id,1} local", p_reg_id1(n), sum(d * mobius(n // d) for d in _unitary(n)))
    yield ("Pbar_{id,1} generic", p_reg(ID, 1, n), p_reg_id1(n))
    for t in (1, 2, 3, 4, 6, 12, n, -5):
        kluyver = sum(d * mobius(n // d) for d in divisors(n) if t % d == 0)
        yield (f"c_n({t}) divisor form", ramanujan_sum(n, t), kluyver)


EXP_T_RANGE = 300


def _cbar_exponential(n: int) -> Iterator[Case]:
    ts = np.arange(-EXP_T_RANGE, EXP_T_RANGE + 1)
    members = orc.regular_residues(n)
    coprime = orc.coprime_residues(n)
    reg = orc.exp_sum(n, members, ts)
    rel = orc.exp_sum(n, coprime, ts)
    for t, a, b in zip(ts.tolist(), reg, rel):
        yield (f"cbar t={t}", complex(c_bar(n, t)), complex(a))
        yield (f"c_n t={t}", complex(ramanujan_sum(n, t)), complex(b))


def _prop7_exponential(n: int) -> Iterator[Case]:
    ts = np.arange(-EXP_T_RANGE, EXP_T_RANGE + 1, 7)
    members = orc.regular_residues(n)
    weights = np.gcd(members, n).astype(np.float64)
    sums = orc.exp_sum(n, members, ts, weights)
    for t, a in zip(ts.tolist(), sums):
        yield (f"Pbar_id t={t}", complex(p_reg(ID, t, n)), complex(a))


def _prop9(n: int) -> Iterator[Case]:
    members = orc.regular_residues(n)
    brute = int(np.gcd(members - 1, n).sum())
    yield ("closed product", menon_regular(n), brute)
    yield ("unitary convolution", menon_regular_convolution(n), brute)
    coprime = orc.coprime_residues(n)
    for a in (1, 2, 3, 5, 7):
        if math.gcd(a, n) == 1:
            direct = int(np.gcd(a * coprime - 1, n).sum())
            yield (f"Menon a={a}", menon_coprime(a, n, check=False), direct)


def _mpsum(values, ks):
    with mpmath.workdps(ORACLE_DPS):
        return mpmath.fsum(values[k - 1] for k in ks)


def _prop10_11(n: int) -> Iterator[Case]:
    cos2, tan2, tan4 = orc.trig_values(n, ORACLE_DPS)
    domains = {
        "all": list(range(1, n + 1)),
        "coprime": orc.coprime_residues(n).tolist(),
        "regular": orc.regular_residues(n).tolist(),
    }
    for dom, ks in domains.items():
        if n >= 2:
            yield (f"cos2 {dom}", trig_sum("cos2", dom, n), _mpsum(cos2, ks))
        if n % 2 == 1:
            yield (f"tan2 {dom}", trig_sum("tan2", dom, n), _mpsum(tan2, ks))
            yield (f"tan4 {dom}", trig_sum("tan4", dom, n), _mpsum(tan4, ks))


def _prop12(n: int) -> Iterator[Case]:
    members = orc.regular_residues(n)
    yield ("Qbar", product_regular(n), orc.brute_product(members))
    yield ("Q'", product_coprime(n), orc.brute_product(orc.coprime_residues(n)))
    ud = _unitary(n)
    lhs = product_regular(n) * math.prod(d ** euler_phi(d) for d in ud)
    rhs = n ** rho(n) * math.prod(orc.brute_product(orc.coprime_residues(d)) for d in ud)
    yield ("log decomposition", lhs, rhs)


def _prop13(n: int) -> Iterator[Case]:
    yield ("log R", gamma_product_all(n).log_value, orc.lgamma_sum(n, range(1, n + 1)))
    if n >= 2:
        yield ("log R'", gamma_product_coprime(n).log_value, orc.lgamma_sum(n, orc.coprime_residues(n).tolist()))
    yield ("log Rbar", gamma_product_regular(n).log_value, orc.lgamma_sum(n, orc.regular_residues(n).tolist()))


_X_MINUS_ONE = IntPolynomial([-1, 1])


def _prop14(n: int) -> Iterator[Case]:
    full = IntPolynomial([1])
    for d in divisors(n):
        full = full * cyclotomic(d)
    yield ("prod Phi_d = x^n - 1", full, IntPolynomial.monomial(n) - 1)
    yield ("deg Phi_n = phi(n)", cyclotomic(n).degree, euler_phi(n))
    bar = phi_regular(n)
    r = len(orc.regular_residues(n))
    yield ("deg Phibar = rho", bar.degree, r)
    if is_squarefree(n):
        yield ("squarefree Phibar = x^n - 1", bar, IntPolynomial.monomial(n) - 1)
    if n >= 2:
        star = phi_regular_star(n)
        yield ("Phibar* (x - 1) = Phibar", star * _X_MINUS_ONE, bar)
        yield ("deg Phibar* = rho - 1", star.degree, r - 1)
        yield ("palindrome", star.coeffs, star.coeffs[::-1])
        yield ("Phibar*(1) = kappa", star(1), math.prod(p for p in range(2, n + 1) if n % p == 0 and is_prime(p)))
        if n % 2 == 1 and n >= 3:
            yield ("Phibar*(-1) = 1", star(-1), 1)


def _prop14_roots(n: int) -> Iterator[Case]:
    bar = phi_regular(n)
    coeffs = np.array(bar.coeffs[::-1], dtype=np.float64)
    for k in orc.regular_residues(n).tolist():
        z = np.exp(2j * math.pi * k / n)
        yield (f"root k={k}", abs(np.polyval(coeffs, z)), 0.0)


def _cyclotomic_values(n: int) -> Iterator[Case]:
    if n >= 2:
        yield ("Phi_n(1)", cyclotomic_at_one(n), cyclotomic(n)(1))
    if n >= 3:
        yield ("Phi_n(-1)", cyclotomic_at_minus_one(n), cyclotomic(n)(-1))


def _prop15(n: int) -> Iterator[Case]:
    if n < 2:
        return
    ks = [k for k in orc.regular_residues(n).tolist() if k < n]
    yield ("Ubar*", trig_product("sin", "regular_mod", n), orc.sin_product(n, ks))
    if n % 2 == 1:
        yield ("Vbar*", trig_product("cos", "regular_mod", n), orc.cos_product(n, ks))


def _formula_u(n: int) -> Iterator[Case]:
    if n >= 2:
        yield ("U", trig_product("sin", "coprime", n), orc.sin_product(n, orc.coprime_residues(n).tolist()))


def _formula_v(n: int) -> Iterator[Case]:
    if n >= 3:
        yield ("V", trig_product("cos", "coprime", n), orc.cos_product(n, orc.coprime_residues(n).tolist()))


def _prop16_local(n: int) -> Iterator[Case]:
    if not is_prime(n):
        return
    p = n
    for kind, s, cap in (("rho_sigma", 1, Fraction(p + 1, p)), ("rho_psi", 1, Fraction(p + 1, p)),
                         ("rho_sigma_s", 2, Fraction(p * p + 1, p * p)), ("rho_sigma_s", 3, Fraction(p**3 + 1, p**3))):
        sup = local_factor_bounds(kind, p, 64, s)
        yield (f"{kind} s={s} sup", sup.sup, cap)
        yield (f"{kind} s={s} attained at", sup.attained_at, 1)
        strict = all(local_factor(kind, p, e, s) < cap for e in range(2, 65))
        yield (f"{kind} s={s} strict for e>=2", strict, True)


CATALOG: Dict[str, Identity] = {
    i.name: i
    for i in (
        Identity("regularity", "gcd-unitary test vs weak order, prime powers and Reg_n", _regularity, default_max_n=100),
        Identity("prop1_rho_r", "rho_r vs brute count of r-tuples, r <= 3", _prop1, default_max_n=60),
        Identity("prop3_general_scheme", "unitary reduction of sums over Reg_n", _prop3, default_max_n=150),
        Identity("prop4_power_sums", "S_r, S'_r, Sbar_r vs brute power sums, r <= 6", _prop4, default_max_n=2000),
        Identity("sum1_4", "displayed Sbar_1..Sbar_4 formulas", _sum1_4, default_max_n=2000),
        Identity("prop5_partial_sums", "Sbar_0(n, x) n / (x rho(n)) close to 1 at x = 1e5", _prop5,
                 exact=False, default_max_n=200, tolerance=0.02),
        Identity("prop6_bernoulli", "T_m, T'_m, Tbar_m vs brute, m <= 10, plus m = 1", _prop6, default_max_n=2000),
        Identity("prop7_preg", "Ptilde, cbar, Pbar_{f,t} integer identities", _prop7_exact, default_max_n=2000),
        Identity("prop7_exponential", "Pbar_{id,t} vs exponential sums", _prop7_exponential,
                 exact=False, default_max_n=300, tolerance=1e-9),
        Identity("cbar_exponential", "cbar_n(t), c_n(t) vs exponential sums, |t| <= 300", _cbar_exponential,
                 exact=False, default_max_n=300, tolerance=1e-9),
        Identity("prop9_menon", "Menon analogue over Reg_n", _prop9, default_max_n=5000),
        Identity("prop10_11_trig", "cos^2, tan^2, tan^4 sums (40-digit oracle)", _prop10_11,
                 exact=False, default_max_n=300, tolerance=1e-7),
        Identity("prop12_product", "Qbar(n) = n^rho prod A(d)", _prop12, default_max_n=300),
        Identity("prop13_gamma", "Gamma products in log space", _prop13,
                 exact=False, default_max_n=500, tolerance=1e-9),
        Identity("prop14_cyclotomic", "Phibar_n structure", _prop14, default_max_n=2000),
        Identity("prop14_roots", "Phibar_n vanishes on exp(2 pi i k/n), k in Reg_n", _prop14_roots,
                 exact=False, default_max_n=100, tolerance=1e-6),
        Identity("cyclotomic_values", "Phi_n(1), Phi_n(-1) case tables", _cyclotomic_values, default_max_n=2000),
        Identity("prop15_sin_cos", "modified sin / cos products over Reg_n", _prop15,
                 exact=False, default_max_n=300, tolerance=1e-9, relative=True),
        Identity("formula_U", "product of sin(k pi/n) over coprime k", _formula_u,
                 exact=False, default_max_n=300, tolerance=1e-9, relative=True),
        Identity("formula_V", "product of cos(k pi/n) over coprime k", _formula_v,
                 exact=False, default_max_n=300, tolerance=1e-9, relative=True),
        Identity("prop16_local_factors", "local sup of rho sigma / n^2 at e = 1, strict after", _prop16_local,
                 default_max_n=200),
    )
}


def _error(identity: Identity, observed, expected):
    if identity.exact:
        if observed == expected:
            return 0
        try:
            return abs(Fraction(observed) - Fraction(expected))
        except (TypeError, ValueError):
            return 1
    if isinstance(expected, mpmath.mpf):
        # compare a rational closed form against a high-precision oracle
        with mpmath.workdps(ORACLE_DPS):
            obs = Fraction(observed)
            return float(abs(mpmath.mpf(obs.numerator) / obs.denominator - expected))
    diff = abs(complex(observed) - complex(expected))
    if identity.relative:
        scale = abs(complex(expected))
        return diff / scale if scale else diff
    return diff


def _run_range(name: str, lo: int, hi: int, tolerance: float) -> VerificationReport:
    identity = CATALOG[name]
    report = VerificationReport(name, lo, hi, exact=identity.exact, tolerance=tolerance)
    worst = None
    for n in range(max(lo, identity.n_min), hi + 1):
        for label, observed, expected in identity.check(n):
            report.cases += 1
            err = _error(identity, observed, expected)
            bad = err != 0 if identity.exact else not err <= tolerance
            if bad:
                report.failures += 1
            if identity.exact:
                # exact suites report the first mismatch, if any
                if not bad or worst is not None:
                    continue
                key = (True, 1)
            else:
                key = (bad, err)
            if worst is None or key > worst[0]:
                if isinstance(expected, mpmath.mpf):
                    expected = float(expected)
                worst = (key, n, label, observed, expected, err)
    if worst is not None:
        _, report.worst_n, report.worst_label, report.observed, report.expected, report.error = worst
    report.passed = report.failures == 0
    return report


def _merge(parts: List[VerificationReport], lo: int, hi: int) -> VerificationReport:
    out = VerificationReport(parts[0].identity, lo, hi, exact=parts[0].exact, tolerance=parts[0].tolerance)
    best = None
    for part in parts:  # fixed order: ascending chunks
        out.cases += part.cases
        out.failures += part.failures
        if part.worst_n is None:
            continue
        key = (not part.passed, part.error if not part.exact else int(not part.passed))
        if best is None or key > best[0]:
            best = (key, part)
    if best is not None:
        p = best[1]
        out.worst_n, out.worst_label, out.observed, out.expected, out.error = (
            p.worst_n, p.worst_label, p.observed, p.expected, p.error)
    out.passed = out.failures == 0
    return out


def run_identity(
    name: str,
    max_n: Optional[int] = None,
    tolerance: Optional[float] = None,
    jobs: int = 1,
    n_from: int = 1,
) -> VerificationReport:
    """Check a catalog identity for n in [n_from, max_n].

    A tolerance may only be given for float identities; exact identities
    always compare with tolerance zero.
    """
    if name not in CATALOG:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(sorted(CATALOG))}")
    identity = CATALOG[name]
    if tolerance is not None and identity.exact:
        raise ValueError(f"{name} is an exact identity and admits no tolerance")
    tol = identity.tolerance if tolerance is None else float(tolerance)
    hi = identity.default_max_n if max_n is None else int(max_n)
    if hi < n_from:
        raise ValueError("max_n must be >= n_from")
    if jobs <= 1 or hi - n_from < 2 * jobs:
        return _run_range(name, n_from, hi, tol)
    # more chunks than workers, since cost grows with n
    edges = np.linspace(n_from, hi + 1, 4 * jobs + 1).astype(int)
    chunks = [(int(a), int(b) - 1) for a, b in zip(edges[:-1], edges[1:]) if b > a]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_run_range, [name] * len(chunks), [a for a, _ in chunks],
                              [b for _, b in chunks], [tol] * len(chunks)))
    return _merge(parts, n_from, hi)
