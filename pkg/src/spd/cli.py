"""Command-line interface.

Subcommands: rank-partials / rank-shifted (flattening ranks), macaulay-rep /
macaulay-bound (growth bounds), bound (closed-form quantities), degenerate
(explicit specializations), case-check / sweep (four-regime verdicts), and
verify-smallscale (oracle-vs-engine cross checks).  Output is JSON on
stdout; exit codes for case-check/sweep are 0 (confirmed), 2 (unresolved or
out of regime) and 3 (falsification alarm).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from math import comb
from pathlib import Path

from . import bounds, casecheck, oracle, serialize
from .degenerations import c1_block_substitution, c3_two_powers
from .flatten import matrix_rank, partial_space, shifted_space
from .macaulay import macaulay_min_growth, macaulay_rep
from .poly import (SparsePolynomial, make_determinant, make_padded_permanent,
                   make_permanent)


def _emit(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _load_poly(spec: str) -> SparsePolynomial:
    kind, _, args = spec.partition(":")
    if kind == "det":
        return make_determinant(int(args))
    if kind == "perm":
        return make_permanent(int(args))
    if kind == "padded":
        m, n = (int(a) for a in args.split(","))
        return make_padded_permanent(m, n)
    path = Path(spec)
    if not path.exists():
        raise SystemExit(f"no such polynomial spec or file: {spec}")
    text = path.read_text()
    if path.suffix == ".json":
        return serialize.poly_from_json_dict(json.loads(text))
    return serialize.poly_from_text(text)


def _basis_summary(basis) -> dict:
    return {
        "rank": basis.rank,
        "rows": len(basis.rows),
        "columns": len(basis.columns),
        "degree": basis.degree,
        "mode": basis.mode,
        "prime": basis.prime,
        "truncated": basis.truncated,
    }


def _cmd_rank_partials(args) -> int:
    poly = _load_poly(args.poly)
    basis = partial_space(poly, args.k, mode=args.mode, prime=args.prime,
                          max_entries=args.max_entries)
    _emit({"poly": args.poly, "k": args.k, **_basis_summary(basis)})
    return 0


def _cmd_rank_shifted(args) -> int:
    poly = _load_poly(args.poly)
    basis = shifted_space(poly, args.k, args.tau, mode=args.mode, prime=args.prime,
                          shift_vars=args.shift_vars, max_entries=args.max_entries)
    _emit({"poly": args.poly, "k": args.k, "tau": args.tau,
           "shift_vars": args.shift_vars, **_basis_summary(basis)})
    return 0


def _cmd_macaulay_rep(args) -> int:
    rep = macaulay_rep(args.Q, args.d)
    _emit({"rep": [[a, i] for a, i in rep.terms]})
    return 0


def _cmd_macaulay_bound(args) -> int:
    rep = macaulay_rep(args.Q, args.d)
    bound = macaulay_min_growth(args.Q, args.d, args.tau, args.N)
    _emit({"rep": [[a, i] for a, i in rep.terms], "bound": bound})
    return 0


_BOUND_BUILDERS = {
    "padded-upper": (("n", "m", "k", "tau"), bounds.padded_ideal_upper),
    "det-partials-count": (("n", "k"), bounds.det_partials_count),
    "two-power-dim": (("n", "k", "tau"), bounds.two_power_ideal_dim),
    "det-shifted-lower": (("n", "k", "tau"), bounds.det_shifted_lower),
    "perm-partials-upper": (("m", "k"), lambda m, k, mode, prec: bounds.perm_partials_upper(m, k)),
    "perm-shifted-upper": (("n", "m", "k", "tau"), bounds.perm_shifted_upper),
    "full-component": (("N", "d"), bounds.full_degree_component),
}


def _cmd_bound(args) -> int:
    if args.name in _BOUND_BUILDERS:
        wanted, builder = _BOUND_BUILDERS[args.name]
        params = {}
        for key in wanted:
            val = getattr(args, key)
            if val is None:
                raise SystemExit(f"bound {args.name} needs --{key}")
            params[key] = val
        if args.name == "perm-partials-upper":
            quantity = builder(params["m"], params["k"], args.mode, args.prec)
        else:
            quantity = builder(**params, mode=args.mode, prec=args.prec)
        _emit(quantity.to_json_dict())
        return 0
    if args.name in ("ln-factorial", "ln-binom", "ln-central-binom"):
        key = {"ln-factorial": "factorial", "ln-binom": "binom",
               "ln-central-binom": "central_binom"}[args.name]
        params = {}
        if key == "factorial":
            params["q"] = args.q
        elif key == "binom":
            params["a"], params["b"] = args.a, args.b
        else:
            params["m"] = args.m
        if any(v is None for v in params.values()):
            raise SystemExit(f"estimate {args.name} needs {sorted(params)}")
        est = bounds.log_estimate(key, prec=args.prec, **params)
        from mpmath import mp
        _emit({"name": args.name, "log_interval": [mp.nstr(est.lo, 25), mp.nstr(est.hi, 25)],
               "prec": est.prec})
        return 0
    raise SystemExit(f"unknown bound {args.name!r}; known: "
                     f"{sorted(_BOUND_BUILDERS) + ['ln-factorial', 'ln-binom', 'ln-central-binom']}")


def _cmd_degenerate(args) -> int:
    if args.kind == "c1":
        if args.m is None or args.k is None:
            raise SystemExit("degenerate --kind c1 needs --m and --k")
        spec = c1_block_substitution(args.n, args.m, args.k)
    else:
        spec = c3_two_powers(args.n)
    image = spec.image()
    _emit({
        "kind": spec.kind,
        "params": {"n": spec.n, "m": spec.m, "k": spec.k},
        "regime": spec.regime,
        "sign_corrected": spec.sign_corrected,
        "substitution": serialize.substitution_to_json_dict(spec.substitution),
        "polynomial": serialize.poly_to_json_dict(image),
        "polynomial_text": serialize.poly_to_text(image).splitlines(),
    })
    return 0


def _case_exit(report_verdict: str, alarm: bool) -> int:
    if alarm:
        return 3
    if report_verdict == casecheck.VERDICT_CONFIRMED:
        return 0
    return 2


def _cmd_case_check(args) -> int:
    report = casecheck.case_check(args.m, args.n, args.k, args.tau, mode=args.mode)
    print(report.to_json())
    return _case_exit(report.verdict, report.alarm)


def _parse_samples(raw: str) -> list[int]:
    return [int(tok) for tok in raw.replace(",", " ").split()]


def _cmd_sweep(args) -> int:
    result = casecheck.theorem_sweep(args.m, args.n, _parse_samples(args.k_samples),
                                     _parse_samples(args.tau_samples), mode=args.mode)
    print(result.to_json())
    if result.alarms:
        return 3
    if result.unresolved or result.uncovered:
        return 2
    return 0


def _cmd_verify_smallscale(args) -> int:
    rng = random.Random(20240101)
    checks: list[tuple[str, bool]] = []

    ok = True
    for n in (2, 3):
        det = make_determinant(n)
        for k in range(n + 1):
            ok &= partial_space(det, k).rank == comb(n, k) ** 2
    checks.append(("determinant partial ranks match the minor-count formula", ok))

    ok = True
    for _ in range(40):
        rows = _random_rows(rng)
        ok &= oracle.brute_rank(rows) == matrix_rank(rows)
    checks.append(("dense oracle rank equals sparse engine rank (40 random)", ok))

    ok = True
    prime = (1 << 61) - 1
    for _ in range(20):
        rows = _random_rows(rng)
        ok &= matrix_rank(rows, mode="prime", prime=prime) == matrix_rank(rows)
    checks.append(("prime-field rank equals exact rank (20 random)", ok))

    ok = True
    for n in (2, 3, 4):
        for k in range(n):
            ok &= len(oracle.leading_monomials_of_minors(n, k)) == comb(n + k, 2 * k)
    checks.append(("diagonal/superdiagonal minor leading-monomial counts", ok))

    ok = True
    for n in (2, 3):
        image = c3_two_powers(n).image()
        for k in range(1, n):
            for tau in range(3):
                got = shifted_space(image, k, tau).rank
                ok &= got == bounds.two_power_ideal_dim(n, k, tau).value
    checks.append(("two-powers shifted dimensions match the closed form", ok))

    ok = True
    for _ in range(200):
        N = rng.randrange(2, 9)
        d = rng.randrange(1, 6)
        q = rng.randrange(0, d)
        tau = rng.randrange(0, 8)
        full = comb(N + d - 1, d)
        hypo = comb(N + d - q - 1, d - q)
        ok &= (macaulay_min_growth(full - hypo, d, tau, N)
               == comb(N + tau + d - q - 1, tau + d - q))
    checks.append(("growth bound agrees with the closed-form corollary", ok))

    mic = oracle.monomial_ideal_component(oracle.leading_monomials_of_minors(3, 1), 1, 9)
    dim = shifted_space(make_determinant(3), 1, 1).rank
    checks.append(("monomial floor below the true shifted dimension", mic <= dim))

    width = max(len(name) for name, _ in checks)
    failures = 0
    for name, passed in checks:
        status = "PASS" if passed else "FAIL"
        print(f"{name.ljust(width)}  {status}")
        failures += not passed
    return 1 if failures else 0


def _random_rows(rng: random.Random) -> list[SparsePolynomial]:
    from .poly import Monomial, VariableTable
    nvars = rng.randrange(2, 6)
    table = VariableTable(tuple(f"z_{i}" for i in range(1, nvars + 1)))
    degree = rng.randrange(1, 4)
    rows = []
    for _ in range(rng.randrange(1, 8)):
        terms = []
        for _ in range(rng.randrange(1, 5)):
            combo = [rng.randrange(nvars) for _ in range(degree)]
            counts: dict[int, int] = {}
            for i in combo:
                counts[i] = counts.get(i, 0) + 1
            terms.append((Monomial(counts), rng.randrange(-4, 5)))
        rows.append(SparsePolynomial(table, terms))
    return rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spd",
        description="Exact flattening ranks, growth bounds, and four-regime verdicts")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rank_common(p):
        p.add_argument("--poly", required=True,
                       help="det:N | perm:M | padded:M,N | path to .txt/.json")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--mode", choices=("exact", "prime"), default="exact")
        p.add_argument("--prime", type=int, default=None)
        p.add_argument("--max-entries", type=int, default=5_000_000)

    p = sub.add_parser("rank-partials", help="rank of the order-k partial span")
    add_rank_common(p)
    p.set_defaults(func=_cmd_rank_partials)

    p = sub.add_parser("rank-shifted", help="dimension of the shifted component")
    add_rank_common(p)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--shift-vars", choices=("all", "active"), default="all")
    p.set_defaults(func=_cmd_rank_shifted)

    p = sub.add_parser("macaulay-rep", help="unique binomial decomposition of Q at degree d")
    p.add_argument("Q", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_macaulay_rep)

    p = sub.add_parser("macaulay-bound", help="minimal ideal growth from quotient size Q")
    p.add_argument("Q", type=int)
    p.add_argument("d", type=int)
    p.add_argument("tau", type=int)
    p.add_argument("N", type=int)
    p.set_defaults(func=_cmd_macaulay_bound)

    p = sub.add_parser("bound", help="closed-form quantity, exact or log-interval")
    p.add_argument("name")
    for flag in ("n", "m", "k", "tau", "N", "d", "q", "a", "b"):
        p.add_argument(f"--{flag}", type=int, default=None)
    p.add_argument("--mode", choices=("auto", "exact", "interval"), default="auto")
    p.add_argument("--prec", type=int, default=bounds.PREC_START)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("degenerate", help="emit an explicit determinant specialization")
    p.add_argument("--kind", choices=("c1", "c3"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_degenerate)

    p = sub.add_parser("case-check", help="four-regime verdict for one instance")
    for flag in ("m", "n", "k", "tau"):
        p.add_argument(f"--{flag}", type=int, required=True)
    p.add_argument("--mode", choices=("auto", "exact", "interval"), default="auto")
    p.set_defaults(func=_cmd_case_check)

    p = sub.add_parser("sweep", help="verdicts over a sampled (k, tau) grid")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-samples", required=True, help="comma/space separated")
    p.add_argument("--tau-samples", required=True, help="comma/space separated")
    p.add_argument("--mode", choices=("auto", "exact", "interval"), default="auto")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify-smallscale",
                       help="oracle-vs-engine cross checks, pass/fail table")
    p.set_defaults(func=_cmd_verify_smallscale)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
