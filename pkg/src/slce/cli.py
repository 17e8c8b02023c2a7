"""Command-line front end: generation, complexity reports, verification
sweeps, Gauss/Jacobi sum evaluation, and statistics tables.

Exit codes: 0 success, 2 bad input, 3 criterion/ground-truth mismatch or
internal inconsistency. Output is deterministic: canonical constructions,
sorted records, no timestamps.
"""

import argparse
import csv
import json
import math
import sys

from .criteria import (
    ALL_CHECKS,
    multiplicity_profile,
    normalize_checks,
    odd_prime_powers,
    run_verify,
)
from .cyclo import (
    Character,
    gauss_sum_numeric,
    jacobi_sum,
    quadratic_gauss_closed,
    semiprimitive_gauss_closed,
)
from .errors import SlceError
from .ff import DEFAULT_SIZE_CAP, build_field
from .polybin import berlekamp_massey, lc_via_gcd
from .seq import autocorrelation, balance_report, characteristic_poly, generate_slce


def _add_field_args(parser):
    parser.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    parser.add_argument("--m", type=int, default=1, help="extension degree (default 1)")


def _add_cap_arg(parser):
    parser.add_argument(
        "--qmax-hard", type=int, default=None, metavar="Q",
        help=f"override the global size cap q <= {DEFAULT_SIZE_CAP} (warns)",
    )


def _size_cap(args):
    if args.qmax_hard is not None:
        print(
            f"warning: raising the size cap to {args.qmax_hard}; "
            "tables and sums scale linearly with q",
            file=sys.stderr,
        )
        return args.qmax_hard
    return DEFAULT_SIZE_CAP


def _dump(obj):
    return json.dumps(obj, sort_keys=True)


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(args):
    field = build_field(args.p, args.m, _size_cap(args))
    s = generate_slce(field, args.d)
    fmt = args.format or ("bits" if args.d == 2 else "json")
    if fmt == "bits":
        print(s.to_bitstring())
    else:
        print(_dump(s.to_json()))
    return 0


def cmd_complexity(args):
    field = build_field(args.p, args.m, _size_cap(args))
    s = generate_slce(field, 2)
    S = characteristic_poly(s)
    bm = berlekamp_massey(s.terms)
    gc = lc_via_gcd(S, s.T)
    profile = multiplicity_profile(s)
    consistent = (
        bm.L == gc.L == profile.L and bm.minimal_poly == gc.minimal_poly
    )
    report = {
        "q": field.q,
        "p": field.p,
        "m": field.m,
        "T": s.T,
        "L": gc.L,
        "minimal_poly_hex": gc.minimal_poly.to_hex(),
        "methods": {
            "berlekamp_massey": bm.L,
            "gcd_formula": gc.L,
            "multiplicity_profile": profile.L,
        },
        "multiplicity_profile": [
            {"k": k, "e": e, "multiplicity": mult}
            for (k, e), mult in sorted(profile.entries.items())
        ],
        "capped_multiplicity_total": profile.capped_total(),
        "consistent": consistent,
    }
    print(_dump(report))
    if not consistent:
        print("error: linear-complexity methods disagree", file=sys.stderr)
        return 3
    return 0


def cmd_verify(args):
    checks = normalize_checks(args.theorems.split(",")) if args.theorems else ALL_CHECKS
    size_cap = _size_cap(args)
    if args.qmax > size_cap:
        raise SlceError(f"--qmax {args.qmax} exceeds the size cap {size_cap}")
    records, summary = run_verify(
        args.qmax, p_filter=args.p, checks=checks, size_cap=size_cap, jobs=args.jobs
    )
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        if args.format == "csv":
            writer = csv.writer(out)
            writer.writerow(records[0].CSV_FIELDS if records else
                            ("q", "p", "m", "k", "e", "check", "index",
                             "predicted", "ground_truth", "match"))
            for r in records:
                writer.writerow(r.to_row())
        else:
            for r in records:
                out.write(_dump(r.to_json()) + "\n")
    finally:
        if args.output:
            out.close()
    dest = sys.stdout if args.output else sys.stderr
    print(_dump({"summary": summary}), file=dest)
    return 0 if summary["mismatches"] == 0 else 3


def cmd_gauss(args):
    size_cap = _size_cap(args)
    field = build_field(args.p, args.m, size_cap)
    q = field.q
    if args.quadratic:
        closed = quadratic_gauss_closed(args.p, args.m)
        numeric = gauss_sum_numeric(Character.quadratic(field))
        agree = abs(numeric - closed.to_complex()) <= 1e-6 * math.sqrt(q)
        print(_dump({
            "kind": "quadratic",
            "numeric": {"re": numeric.real, "im": numeric.imag},
            "closed": str(closed),
            "agree": agree,
        }))
        return 0
    if args.semiprimitive is not None:
        res = semiprimitive_gauss_closed(args.p, args.m, args.semiprimitive, size_cap)
        print(_dump({
            "kind": "semiprimitive",
            "N": args.semiprimitive,
            "value": res.value,
            "magnitude": res.magnitude,
            "formula_sign": res.formula_sign,
            "numeric_sign": res.numeric_sign,
            "agree": not res.formula_mismatch,
        }))
        return 0
    if args.a is None:
        raise SlceError("choose one of --quadratic, --semiprimitive N, --a A")
    chi = Character(field, args.a)
    numeric = gauss_sum_numeric(chi)
    print(_dump({
        "kind": "generic",
        "a": args.a,
        "order": chi.order,
        "numeric": {"re": numeric.real, "im": numeric.imag},
        "abs_squared": abs(numeric) ** 2,
        "expected_abs_squared": 1.0 if chi.is_trivial else float(q),
    }))
    return 0


def cmd_jacobi(args):
    field = build_field(args.p, args.m, _size_cap(args))
    J = jacobi_sum(Character(field, args.a1), Character(field, args.a2))
    print(_dump(J.to_json()))
    return 0


def cmd_sweep(args):
    size_cap = _size_cap(args)
    if args.qmax > size_cap:
        raise SlceError(f"--qmax {args.qmax} exceeds the size cap {size_cap}")
    rows = []
    for p, m, q in odd_prime_powers(args.qmax):
        if args.p is not None and p != args.p:
            continue
        field = build_field(p, m, size_cap)
        s = generate_slce(field, 2)
        S = characteristic_poly(s)
        bm = berlekamp_massey(s.terms)
        gc = lc_via_gcd(S, s.T)
        ones = balance_report(s)[1]
        offpeak = sorted({autocorrelation(s, tau) for tau in range(1, s.T)})
        rows.append({
            "q": q, "p": p, "m": m, "T": s.T, "u": s.u, "t_odd": s.Tprime,
            "L": gc.L, "lc_methods_agree": bm.L == gc.L,
            "ones": ones, "balanced": ones * 2 == s.T,
            "s_half_zero": s.terms[s.T // 2] == 0,
            "min_poly_hex": gc.minimal_poly.to_hex(),
            "autocorr_offpeak": "|".join(str(v) for v in offpeak),
        })
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        if args.format == "json":
            for row in rows:
                out.write(_dump(row) + "\n")
        else:
            fields = ["q", "p", "m", "T", "u", "t_odd", "L", "lc_methods_agree",
                      "ones", "balanced", "s_half_zero", "min_poly_hex",
                      "autocorr_offpeak"]
            writer = csv.DictWriter(out, fieldnames=fields)
            writer.writeheader()
            for row in rows:
                writer.writerow(row)
    finally:
        if args.output:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser():
    parser = argparse.ArgumentParser(
        prog="slce",
        description="Binary SLCE sequences: generation, linear complexity, "
                    "and exact character-sum divisibility criteria.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit one period of the sequence")
    _add_field_args(g)
    g.add_argument("--d", type=int, default=2, help="alphabet size (prime, d | q-1)")
    g.add_argument("--format", choices=("bits", "json"), default=None)
    _add_cap_arg(g)
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("complexity", help="linear complexity via all methods")
    _add_field_args(c)
    _add_cap_arg(c)
    c.set_defaults(func=cmd_complexity)

    v = sub.add_parser("verify", help="run the criterion/ground-truth sweep")
    v.add_argument("--qmax", type=int, required=True)
    v.add_argument("--p", type=int, default=None, help="restrict to one characteristic")
    v.add_argument("--theorems", default=None,
                   help="comma list: 1,2,3,prop1..prop4,necessary (default all)")
    v.add_argument("--output", default=None, help="write records here (default stdout)")
    v.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    v.add_argument("--jobs", type=int, default=1, help="parallel workers")
    _add_cap_arg(v)
    v.set_defaults(func=cmd_verify)

    ga = sub.add_parser("gauss", help="Gauss sums: numeric and closed forms")
    _add_field_args(ga)
    ga.add_argument("--quadratic", action="store_true")
    ga.add_argument("--semiprimitive", type=int, default=None, metavar="N")
    ga.add_argument("--a", type=int, default=None, help="character index")
    _add_cap_arg(ga)
    ga.set_defaults(func=cmd_gauss)

    j = sub.add_parser("jacobi", help="exact Jacobi sum J(eta_a1, eta_a2)")
    _add_field_args(j)
    j.add_argument("--a1", type=int, required=True)
    j.add_argument("--a2", type=int, required=True)
    _add_cap_arg(j)
    j.set_defaults(func=cmd_jacobi)

    s = sub.add_parser("sweep", help="per-field statistics table")
    s.add_argument("--qmax", type=int, required=True)
    s.add_argument("--p", type=int, default=None)
    s.add_argument("--output", default=None)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_cap_arg(s)
    s.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SlceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
