"""Command line surface.

Exit codes: 0 success (and "is CP" for check), 1 check failed (not CP),
2 malformed input, 3 budget exceeded.  Every subcommand takes --json for
a single machine-readable document on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .cpcheck import (
    CoeffWitness,
    DirectWitness,
    generator_family,
    enumerate_cp,
    is_cp_coeff,
    is_cp_direct,
    random_cp_many,
)
from .cpcount import DEFAULT_BUDGET, cp_count
from .errors import BudgetExceededError
from .modring import canonical_associate, factorize, mu, mu_prime, subgroup_order, unary_lcm_mod
from .newton import FunctionTable, NewtonCoeffs, decompose, evaluate

_SEED_MASK = (1 << 64) - 1


class _UsageError(Exception):
    pass


def _parse_csv(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise _UsageError(f"expected comma-separated integers, got {text!r}") from None


def _modulus(m: int):
    if m < 1:
        raise _UsageError(f"m must be >= 1, got {m}")
    return factorize(m)


def _table(n: int, m: int, text: str) -> FunctionTable:
    if n < 1:
        raise _UsageError(f"n must be >= 1, got {n}")
    values = _parse_csv(text)
    if len(values) != n:
        raise _UsageError(f"expected {n} values, got {len(values)}")
    # raw entries outside [0, m) are reduced on ingestion
    return FunctionTable.reduced(values, _modulus(m))


def _coeffs(n: int, m: int, text: str) -> NewtonCoeffs:
    if n < 1:
        raise _UsageError(f"n must be >= 1, got {n}")
    coeffs = _parse_csv(text)
    if len(coeffs) != n:
        raise _UsageError(f"expected {n} coefficients, got {len(coeffs)}")
    return NewtonCoeffs.reduced(coeffs, _modulus(m))


def _emit(doc) -> None:
    print(json.dumps(doc))


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _cmd_factor(args) -> int:
    mod = _modulus(args.m)
    if args.json:
        _emit({"m": mod.m, "factors": [[p, e] for p, e in mod.factors]})
    else:
        if mod.factors:
            parts = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in mod.factors)
        else:
            parts = "1"
        print(f"{mod.m} = {parts}")
    return 0


def _cmd_mu(args) -> int:
    mod = _modulus(args.m)
    if args.json:
        _emit({"m": mod.m, "mu": mu(mod)})
    else:
        print(mu(mod))
    return 0


def _cmd_mu_prime(args) -> int:
    mod = _modulus(args.m)
    if args.json:
        _emit({"m": mod.m, "mu_prime": mu_prime(mod)})
    else:
        print(mu_prime(mod))
    return 0


def _cmd_lcm_table(args) -> int:
    mod = _modulus(args.m)
    kmax = mod.m if args.max is None else args.max
    if kmax < 1:
        raise _UsageError(f"--max must be >= 1, got {kmax}")
    rows = [
        (k, unary_lcm_mod(k, mod).value, canonical_associate(k, mod).value, subgroup_order(mod, k))
        for k in range(1, kmax + 1)
    ]
    if args.json:
        _emit(
            {
                "m": mod.m,
                "mu": mu(mod),
                "rows": [{"k": k, "lcm": l, "assoc": a, "lambda": lam} for k, l, a, lam in rows],
            }
        )
    else:
        print(f"m = {mod.m}  mu = {mu(mod)}")
        print("k\tlcm\tassoc\tlambda")
        for k, l, a, lam in rows:
            print(f"{k}\t{l}\t{a}\t{lam}")
    return 0


def _cmd_decompose(args) -> int:
    f = _table(args.n, args.m, args.values)
    c = decompose(f)
    if args.json:
        _emit({"n": f.n, "m": f.mod.m, "coeffs": list(c.coeffs)})
    else:
        print(_csv(c.coeffs))
    return 0


def _cmd_eval(args) -> int:
    c = _coeffs(args.n, args.m, args.coeffs)
    if not 0 <= args.at < c.n:
        raise _UsageError(f"--at must be in [0, {c.n}), got {args.at}")
    value = evaluate(c, args.at).value
    if args.json:
        _emit({"n": c.n, "m": c.mod.m, "x": args.at, "value": value})
    else:
        print(value)
    return 0


def _witness_doc(witness):
    if witness is None:
        return None
    if isinstance(witness, DirectWitness):
        return {"d": witness.d, "a": witness.a, "b": witness.b}
    return {"k": witness.k, "coeff": witness.coeff, "lcm": witness.lcm_mod}


def _witness_text(witness) -> str:
    if isinstance(witness, DirectWitness):
        return f"(d={witness.d}, pair=({witness.a},{witness.b}))"
    return f"(k={witness.k}, a_k={witness.coeff}, lcm_k={witness.lcm_mod})"


def _cmd_check(args) -> int:
    f = _table(args.n, args.m, args.values)
    methods = ("direct", "coeff") if args.method == "both" else (args.method,)
    reports = {}
    if "direct" in methods:
        reports["direct"] = is_cp_direct(f)
    if "coeff" in methods:
        reports["coeff"] = is_cp_coeff(f)
    verdict = all(r.verdict for r in reports.values())
    if args.json:
        doc = {
            "n": f.n,
            "m": f.mod.m,
            "values": list(f.values),
            "method": args.method,
            "verdict": verdict,
        }
        for name, report in reports.items():
            doc[name] = {"verdict": report.verdict, "witness": _witness_doc(report.witness)}
        _emit(doc)
    else:
        for name, report in reports.items():
            if report.verdict:
                print(f"{name}: CP")
            else:
                print(f"{name}: not CP {_witness_text(report.witness)}")
    return 0 if verdict else 1


def _cmd_count(args) -> int:
    if args.n < 1:
        raise _UsageError(f"n must be >= 1, got {args.n}")
    count = cp_count(args.n, _modulus(args.m), method=args.method)
    if args.json:
        _emit({"n": args.n, "m": args.m, "method": args.method, "count": count})
    else:
        print(count)
    return 0


def _cmd_enumerate(args) -> int:
    if args.n < 1:
        raise _UsageError(f"n must be >= 1, got {args.n}")
    budget = DEFAULT_BUDGET if args.limit is None else args.limit
    stream = enumerate_cp(args.n, _modulus(args.m), budget=budget)
    if args.json:
        tables = [list(f.values) for f in stream]
        _emit({"n": args.n, "m": args.m, "count": len(tables), "tables": tables})
    else:
        for f in stream:
            print(_csv(f.values))
    return 0


def _cmd_random(args) -> int:
    if args.n < 1:
        raise _UsageError(f"n must be >= 1, got {args.n}")
    if args.count < 1:
        raise _UsageError(f"--count must be >= 1, got {args.count}")
    seed = args.seed & _SEED_MASK
    tables = random_cp_many(args.n, _modulus(args.m), seed, args.count)
    if args.json:
        _emit(
            {
                "n": args.n,
                "m": args.m,
                "seed": seed,
                "count": args.count,
                "tables": [list(f.values) for f in tables],
            }
        )
    else:
        for f in tables:
            print(_csv(f.values))
    return 0


def _cmd_generators(args) -> int:
    if args.n < 1:
        raise _UsageError(f"n must be >= 1, got {args.n}")
    family = generator_family(args.n, _modulus(args.m))
    if args.json:
        _emit(
            {
                "n": args.n,
                "m": args.m,
                "count": len(family),
                "tables": [list(f.values) for f in family],
            }
        )
    else:
        for f in family:
            print(_csv(f.values))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpfn",
        description="Congruence preserving functions Z/nZ -> Z/mZ: "
        "binomial-basis decomposition, CP checks, enumeration and counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.set_defaults(handler=handler)
        return p

    p = add("factor", _cmd_factor, help="prime factorization of m")
    p.add_argument("m", type=int)

    p = add("mu", _cmd_mu, help="largest prime power dividing m")
    p.add_argument("m", type=int)

    p = add("mu-prime", _cmd_mu_prime, help="least k with m dividing k!")
    p.add_argument("m", type=int)

    p = add("lcm-table", _cmd_lcm_table, help="lcm(k) mod m, associate and subgroup order per k")
    p.add_argument("m", type=int)
    p.add_argument("--max", type=int, default=None, help="largest k (default: m)")

    p = add("decompose", _cmd_decompose, help="Newton coefficients of a value table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--values", required=True, help="comma-separated f(0),...,f(n-1)")

    p = add("eval", _cmd_eval, help="evaluate Newton coefficients at a point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coeffs", required=True, help="comma-separated a_0,...,a_(n-1)")
    p.add_argument("--at", type=int, required=True)

    p = add("check", _cmd_check, help="decide congruence preservation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--values", required=True)
    p.add_argument("--method", choices=("direct", "coeff", "both"), default="both")

    p = add("count", _cmd_count, help="count congruence preserving functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("product", "closed", "exhaustive"), default="product")

    p = add("enumerate", _cmd_enumerate, help="list every congruence preserving function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help=f"budget (default {DEFAULT_BUDGET})")

    p = add("random", _cmd_random, help="sample congruence preserving functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)

    p = add("generators", _cmd_generators, help="the lcm(k)*P_k generator family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, dispatch, and return the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"cpfn: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"cpfn: budget exceeded: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
