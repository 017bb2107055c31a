"""Command-line front end: ``regint {tabulate,verify,constant,poly}``.

Exit codes: 0 success, 1 a verification failed, 2 bad input (unknown name,
violated precondition, capacity exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import arith, asymptotics, bernoulli, products, regular
from .cyclotomic import CYCLOTOMIC_LIMIT, cyclotomic, phi_regular, phi_regular_star
from .polynomial import Polynomial
from .verify import CATALOG, run_identity

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


# -- value formatting ---------------------------------------------------------


def format_value(v):
    """JSON-ready value: ints stay ints, rationals become "p/q", floats keep 12 digits."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v) or math.isinf(v):
            return str(v)
        return float(f"{v:.12g}")
    if isinstance(v, Polynomial):
        return v.to_list()
    if isinstance(v, complex):
        return [format_value(v.real), format_value(v.imag)]
    if isinstance(v, (list, tuple)):
        return [format_value(x) for x in v]
    return str(v)


def _csv_cell(v) -> str:
    v = format_value(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return json.dumps(v)
    if isinstance(v, float):
        return f"{v:.12g}"
    return "" if v is None else str(v)


def render(function: str, params: Dict[str, object], columns: List[str], rows: List[list], fmt: str) -> str:
    if fmt == "json":
        doc = {
            "function": function,
            "params": {k: format_value(v) for k, v in params.items()},
            "rows": [{c: format_value(x) for c, x in zip(columns, row)} for row in rows],
        }
        return json.dumps(doc) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(x) for x in row])
    return buf.getvalue()


# -- tabulate catalog ---------------------------------------------------------


class Tab:
    def __init__(self, func: Callable, params=(), capacity: int = arith.MAX_FACTOR - 1, doc: str = ""):
        self.func = func
        self.params = tuple(params)  # (name, converter, default or None)
        self.capacity = capacity
        self.doc = doc


def _trig_m(n, m):
    return bernoulli.bernoulli_sum_regular_m1(n) if m == 1 else bernoulli.bernoulli_sum_regular(m, n)


_INT = int
_BRUTE = regular.BRUTE_FORCE_LIMIT

TABULATE: Dict[str, Tab] = {
    "rho": Tab(lambda n: regular.rho(n), doc="number of regular k in [1, n]"),
    "rho_r": Tab(lambda n, r: regular.rho_r(r, n), [("r", _INT, None)], doc="regular r-tuples"),
    "rho_s": Tab(lambda n, s: regular.rho_s(s, n), [("s", _INT, None)], doc="sum over d || n of phi_s(d)"),
    "mu_bar": Tab(lambda n: regular.mu_bar(n), doc="1 if n is squarefull, else 0"),
    "c_bar": Tab(lambda n, t: regular.c_bar(n, t), [("t", _INT, None)], doc="regular Ramanujan sum"),
    "ramanujan": Tab(lambda n, t: arith.ramanujan_sum(n, t), [("t", _INT, None)], doc="c_n(t)"),
    "ptilde": Tab(lambda n: regular.gcd_sum_regular(n), doc="sum of gcd(k, n) over Reg_n"),
    "preg": Tab(lambda n, f, t: regular.p_reg(f, t, n), [("f", str, "id"), ("t", _INT, 1)],
                doc="sum of f(gcd(k, n)) e(kt/n) over Reg_n"),
    "preg_id1": Tab(lambda n: regular.p_reg_id1(n), doc="preg with f = id, t = 1"),
    "menon_reg": Tab(lambda n: regular.menon_regular(n), doc="sum of gcd(k - 1, n) over Reg_n"),
    "menon": Tab(lambda n, a: regular.menon_coprime(a, n), [("a", _INT, 1)], capacity=_BRUTE,
                 doc="sum of gcd(ak - 1, n) over k coprime to n"),
    "phi": Tab(lambda n: arith.euler_phi(n)),
    "jordan": Tab(lambda n, s: arith.jordan_phi(s, n), [("s", _INT, None)]),
    "kappa": Tab(lambda n: arith.kappa(n)),
    "S_all": Tab(lambda n, r: bernoulli.power_sum_all(r, n), [("r", _INT, None)]),
    "S_coprime": Tab(lambda n, r: bernoulli.power_sum_coprime(r, n), [("r", _INT, None)]),
    "S_reg": Tab(lambda n, r: bernoulli.power_sum_regular(r, n), [("r", _INT, None)]),
    "T_all": Tab(lambda n, m: bernoulli.bernoulli_sum_all(m, n), [("m", _INT, None)]),
    "T_coprime": Tab(lambda n, m: bernoulli.bernoulli_sum_coprime(m, n), [("m", _INT, None)]),
    "T_reg": Tab(_trig_m, [("m", _INT, None)], doc="sum of B_m(k/n) over Reg_n"),
    "Q_coprime": Tab(lambda n: products.product_coprime(n), capacity=products.FACTORIAL_LIMIT),
    "Q_reg": Tab(lambda n: products.product_regular(n), capacity=products.FACTORIAL_LIMIT,
                 doc="product of the members of Reg_n"),
    "R_reg": Tab(lambda n: products.gamma_product_regular(n).log_value,
                 doc="log of the product of Gamma(k/n) over Reg_n"),
    "R_coprime": Tab(lambda n: products.gamma_product_coprime(n).log_value),
    "trig_sum": Tab(lambda n, kind, domain: products.trig_sum(kind, domain, n),
                    [("kind", str, None), ("domain", str, "regular")]),
    "U": Tab(lambda n: products.trig_product("sin", "coprime", n)),
    "V": Tab(lambda n: products.trig_product("cos", "coprime", n)),
    "U_star": Tab(lambda n: products.trig_product("sin", "regular_mod", n),
                  doc="product of sin(k pi/n), k in Reg_n, k < n"),
    "V_star": Tab(lambda n: products.trig_product("cos", "regular_mod", n),
                  doc="product of cos(k pi/n), k in Reg_n, k < n (odd n)"),
    "phi_reg_poly": Tab(lambda n: phi_regular(n), capacity=CYCLOTOMIC_LIMIT),
    "cyclotomic": Tab(lambda n: cyclotomic(n), capacity=CYCLOTOMIC_LIMIT),
}


def _parse_params(tab: Tab, items: Sequence[str]) -> Dict[str, object]:
    raw = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"parameter {item!r} is not of the form key=value")
        raw[key] = val
    known = {name for name, _, _ in tab.params}
    extra = set(raw) - known
    if extra:
        raise UsageError(f"unexpected parameter(s) {sorted(extra)}; expected {sorted(known) or 'none'}")
    out = {}
    for name, conv, default in tab.params:
        if name in raw:
            try:
                out[name] = conv(raw[name])
            except ValueError:
                raise UsageError(f"parameter {name}={raw[name]!r} is not valid") from None
        elif default is None:
            raise UsageError(f"missing required parameter {name}=...")
        else:
            out[name] = default
    return out


def cmd_tabulate(function: str, n_from: int, n_to: int, params: Sequence[str] = (), fmt: str = "csv") -> str:
    if function not in TABULATE:
        raise UsageError(f"unknown function {function!r}; known: {', '.join(sorted(TABULATE))}")
    tab = TABULATE[function]
    if n_from < 1:
        raise UsageError("--from must be >= 1")
    if n_to < n_from:
        raise UsageError("--to must be >= --from")
    if n_to > tab.capacity:
        raise regular.CapacityError(f"{function}: --to {n_to} exceeds capacity {tab.capacity}")
    kw = _parse_params(tab, params)
    rows = [[n, tab.func(n, **kw)] for n in range(n_from, n_to + 1)]
    return render(function, kw, ["n", "value"], rows, fmt)


def cmd_verify(names: Sequence[str], max_n: Optional[int], tolerance: Optional[float], jobs: int, fmt: str):
    for name in names:
        if name not in CATALOG:
            raise UsageError(f"unknown identity {name!r}; known: {', '.join(CATALOG)}")
        if tolerance is not None and CATALOG[name].exact:
            raise UsageError(f"{name} is exact; --tolerance is only accepted for float identities")
    reports = [run_identity(name, max_n=max_n, tolerance=tolerance, jobs=jobs) for name in names]
    rows = [r.as_row() for r in reports]
    columns = list(rows[0]) if rows else []
    params = {"max_n": max_n, "tolerance": tolerance}
    text = render("verify", params, columns, [list(r.values()) for r in rows], fmt)
    return text, all(r.passed for r in reports)


CONSTANTS = ("rho_mean", "rho_s_mean", "preg_mean", "limsup_rho_sigma", "zeta_ratio")


def cmd_constant(name: str, s: Optional[float], prime_bound: int, fmt: str) -> str:
    """Mean-value constants (Euler product times the 1/(s+1) prefactor) and closed constants.

    rho_mean = (1/2) prod(1 - 1/(p^2 (p+1))), preg_mean = (1/2) prod(1 - 1/p^2 + 1/p^3),
    rho_s_mean = prod(...) / (s + 1); the truncated product and the bound on
    the log of its neglected tail are reported alongside.
    """
    if name not in CONSTANTS:
        raise UsageError(f"unknown constant {name!r}; known: {', '.join(CONSTANTS)}")
    if name in ("rho_s_mean", "zeta_ratio") and s is None:
        raise UsageError(f"{name} needs a parameter s (e.g. `constant {name} 2`)")
    columns = ["value", "euler_product", "tail_bound"]
    params: Dict[str, object] = {}
    if name == "limsup_rho_sigma":
        return render(name, params, ["value"], [[asymptotics.limsup_rho_sigma()]], fmt)
    if name == "zeta_ratio":
        params["s"] = s
        return render(name, params, ["value"], [[asymptotics.zeta_ratio(s)]], fmt)
    params["prime_bound"] = prime_bound
    if name == "rho_mean":
        res, scale = asymptotics.rho_mean_constant(prime_bound), 0.5
    elif name == "preg_mean":
        res, scale = asymptotics.preg_mean_constant(prime_bound), 0.5
    else:
        params["s"] = s
        res, scale = asymptotics.rho_s_constant(s, prime_bound), 1.0 / (s + 1.0)
    return render(name, params, columns, [[scale * res.value, res.value, res.tail_bound]], fmt)


def cmd_poly(n: int, star: bool, fmt: Optional[str]) -> str:
    poly = phi_regular_star(n) if star else phi_regular(n)
    name = "phi_regular_star" if star else "phi_regular"
    if fmt is None:
        return poly.to_text() + "\n" + json.dumps(poly.to_list()) + "\n"
    if fmt == "json":
        return json.dumps({"function": name, "params": {"n": n},
                           "rows": [{"text": poly.to_text(), "coeffs": poly.to_list()}]}) + "\n"
    return render(name, {"n": n}, ["n", "text", "coeffs"], [[n, poly.to_text(), poly.to_list()]], "csv")


# -- argument parsing -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regint", description="Regular integers (mod n): exact tables and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tabulate", help="tabulate an arithmetic function over a range of n")
    t.add_argument("function", help="one of: " + ", ".join(sorted(TABULATE)))
    t.add_argument("params", nargs="*", help="key=value parameters")
    t.add_argument("--from", dest="n_from", type=int, default=1)
    t.add_argument("--to", dest="n_to", type=int, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")

    v = sub.add_parser("verify", help="check closed forms against brute-force oracles")
    v.add_argument("identity", nargs="*", help="one or more of: " + ", ".join(CATALOG))
    v.add_argument("--all", action="store_true", help="run the whole catalog")
    v.add_argument("--max-n", type=int)
    v.add_argument("--tolerance", type=float)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("csv", "json"), default="csv")

    c = sub.add_parser("constant", help="asymptotic constants")
    c.add_argument("name", help="one of: " + ", ".join(CONSTANTS))
    c.add_argument("s", nargs="?", type=float)
    c.add_argument("--prime-bound", type=int, default=asymptotics.PRIME_BOUND)
    c.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("poly", help="print Phibar_n or Phibar*_n")
    p.add_argument("n", type=int)
    p.add_argument("--star", action="store_true")
    p.add_argument("--format", choices=("csv", "json"))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "tabulate":
            out = cmd_tabulate(args.function, args.n_from, args.n_to, args.params, args.format)
        elif args.command == "verify":
            if args.all == bool(args.identity):
                raise UsageError("give identity names or --all, not both")
            if args.jobs < 1:
                raise UsageError("--jobs must be >= 1")
            names = list(CATALOG) if args.all else args.identity
            out, ok = cmd_verify(names, args.max_n, args.tolerance, args.jobs, args.format)
            sys.stdout.write(out)
            return EXIT_OK if ok else EXIT_FAIL
        elif args.command == "constant":
            out = cmd_constant(args.name, args.s, args.prime_bound, args.format)
        else:
            out = cmd_poly(args.n, args.star, args.format)
    except (ValueError, KeyError) as exc:  # CapacityError is a ValueError
        msg = exc.args[0] if exc.args else exc
        print(f"regint: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
