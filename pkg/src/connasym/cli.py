"""
Command-line front end.

Usage:
    connasym counts  --seq i --max 10 --format csv
    connasym expand  --kind graph --n 10 --r 2
    connasym compare --kind tournament --r 3 --n 10..30
    connasym oracle  --kind tournament --n 5
    connasym mc      --kind graph --n 12 --p 1/2 --trials 1000000 --seed 42

Data goes to stdout (or --output), diagnostics to stderr.
Exit codes: 0 success, 2 usage or domain error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import asymptotics as asy
from . import oracle as orc
from . import sequences as seq
from .errors import ConnasymError, ResourceLimitError
from .output import DEFAULT_DIGITS, decimal_str, exact_str, make_record, render

MAX_COUNT_ORDER = 1000
MAX_POLY_ORDER = 24
MAX_COMPARE_N = 400
MAX_EXACT_N = 2000

SEQUENCES = ("g", "t", "c", "i", "i_m", "c_m", "P")

COUNTS_COLUMNS = ["n", "value"]
EXPAND_COLUMNS = ["kind", "n", "r", "p", "exact", "decimal"]
COMPARE_COLUMNS = ["kind", "n", "r", "exact", "approx", "abs_error", "scaled_error",
                   "exact_decimal", "approx_decimal", "abs_error_decimal", "scaled_error_decimal"]
ORACLE_COLUMNS = ["kind", "n", "count", "total", "histogram"]
MC_COLUMNS = ["kind", "n", "p", "trials", "seed", "successes", "estimate", "stderr",
              "exact", "exact_decimal", "z"]


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def parse_fraction(text: str) -> Fraction:
    """Accept only ``a/b`` so that p stays exact; decimals are rejected."""
    m = re.fullmatch(r"\s*(\d+)\s*/\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"p must be written as a/b, got {text!r}")
    if int(m.group(2)) == 0:
        raise argparse.ArgumentTypeError("zero denominator")
    return Fraction(int(m.group(1)), int(m.group(2)))


def parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


# -- commands -------------------------------------------------------------------


def cmd_counts(args) -> tuple[list[dict], list[str]]:
    N, name = args.max, args.seq
    cap = MAX_POLY_ORDER if name == "P" else MAX_COUNT_ORDER
    if N > cap:
        raise CliError(f"--max {N} exceeds the cap {cap} for sequence {name}", 3)
    if N < 0:
        raise CliError("--max must be non-negative")
    if name in ("i_m", "c_m") and args.m is None:
        raise CliError(f"sequence {name} needs --m")
    params = {"seq": name, "max": N}
    if name == "g":
        rows = seq.graph_counts(N).entries
    elif name == "t":
        rows = seq.tournament_counts(N).entries
    elif name == "c":
        rows = seq.connected_counts(N).entries[1:]
    elif name == "i":
        rows = seq.irreducible_counts(N).entries[1:]
    elif name in ("i_m", "c_m"):
        kind = seq.TOURNAMENT if name == "i_m" else seq.GRAPH
        params["m"] = args.m
        rows = seq.components_counts(kind, args.m, N).entries[1:]
    else:
        if N < 1:
            raise CliError("--max must be >= 1 for sequence P")
        rows = list(seq.rho_polynomials(N))
    records = [make_record("counts", params, {"n": n, "value": exact_str(v)}) for n, v in rows]
    return records, COUNTS_COLUMNS


def _need_n(n: int, cap: int = MAX_EXACT_N) -> None:
    if n > cap:
        raise CliError(f"n={n} exceeds the cap {cap}", 3)


def cmd_expand(args) -> tuple[list[dict], list[str]]:
    _need_n(args.n)
    if args.kind == "graph":
        value = asy.expansion_prob_connected(args.n, args.r)
    elif args.kind == "tournament":
        value = asy.expansion_prob_irreducible(args.n, args.r)
    else:
        if args.p is None:
            raise CliError("--kind graph-p needs --p a/b")
        if args.r - 1 > MAX_POLY_ORDER:
            raise CliError(f"--r exceeds the cap {MAX_POLY_ORDER + 1} for graph-p", 3)
        value = asy.expansion_prob_connected_p(args.n, args.r, args.p)
    p = exact_str(args.p) if args.p is not None else ""
    params = {"kind": args.kind, "n": args.n, "r": args.r, "p": p or None, "digits": args.digits}
    row = {"kind": args.kind, "n": args.n, "r": args.r, "p": p,
           "exact": exact_str(value), "decimal": decimal_str(value, args.digits)}
    return [make_record("expand", params, row)], EXPAND_COLUMNS


def cmd_compare(args) -> tuple[list[dict], list[str]]:
    if args.n.stop - 1 > MAX_COMPARE_N:
        raise CliError(f"range reaches n={args.n.stop - 1}, cap is {MAX_COMPARE_N}", 3)
    if args.n.start < 1:
        raise CliError("range must start at n >= 1")
    reports = asy.error_report(args.kind, args.r, args.n, p=args.p)
    params = {"kind": args.kind, "r": args.r, "n": f"{args.n.start}..{args.n.stop - 1}",
              "p": exact_str(args.p) if args.p is not None else None, "digits": args.digits}
    records = []
    for rep in reports:
        row = {"kind": rep.kind, "n": rep.n, "r": rep.r}
        for field in ("exact", "approx", "abs_error", "scaled_error"):
            v = getattr(rep, field)
            row[field] = exact_str(v)
            row[field + "_decimal"] = decimal_str(v, args.digits)
        records.append(make_record("compare", params, row))
    return records, COMPARE_COLUMNS


def cmd_oracle(args) -> tuple[list[dict], list[str]]:
    hist = orc.component_histogram_exhaustive(args.kind, args.n, allow_n7=args.allow_n7,
                                              workers=args.workers)
    full = {str(m): hist.get(m, 0) for m in range(1, args.n + 1)} if args.n else {"0": 1}
    row = {"kind": args.kind, "n": args.n, "count": hist.get(1, 0),
           "total": sum(hist.values()), "histogram": full}
    params = {"kind": args.kind, "n": args.n, "allow_n7": args.allow_n7}
    return [make_record("oracle", params, row)], ORACLE_COLUMNS


def cmd_mc(args) -> tuple[list[dict], list[str]]:
    if args.p is None:
        args.p = Fraction(1, 2)
    res = orc.mc_estimate(args.kind, args.n, args.p, args.trials, args.seed)
    row = {"kind": res.kind, "n": res.n, "p": exact_str(res.p), "trials": res.trials,
           "seed": res.seed, "successes": res.successes,
           "estimate": repr(res.estimate), "stderr": repr(res.stderr)}
    if args.n <= MAX_COMPARE_N:
        exact = (asy.exact_prob_connected_p(args.n, res.p) if args.kind == "graph"
                 else asy.exact_prob_irreducible(args.n))
        row["exact"] = exact_str(exact)
        row["exact_decimal"] = decimal_str(exact, args.digits)
        row["z"] = repr((res.estimate - float(exact)) / res.stderr) if res.stderr else ""
    params = {"kind": args.kind, "n": args.n, "p": exact_str(res.p), "trials": args.trials,
              "seed": args.seed, "chunk": orc.MC_CHUNK, "generator": "PCG64/SeedSequence.spawn"}
    return [make_record("mc", params, row)], MC_COLUMNS


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="connasym",
        description="Exact counts and asymptotic expansions for connected graphs "
                    "and irreducible tournaments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="human"):
        p.add_argument("--format", choices=("human", "csv", "json"), default=default_format)
        p.add_argument("--digits", type=int, default=DEFAULT_DIGITS,
                       help="significant digits of decimal renderings (display only)")
        p.add_argument("--output", "-o", help="write data to this path instead of stdout")

    p = sub.add_parser("counts", help="print a counting sequence")
    p.add_argument("--seq", required=True, choices=SEQUENCES)
    p.add_argument("--max", type=int, required=True, help="largest index N")
    p.add_argument("--m", type=int, help="component count for i_m / c_m")
    common(p)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("expand", help="evaluate a truncated expansion exactly")
    p.add_argument("--kind", required=True, choices=asy.REPORT_KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=parse_fraction)
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("compare", help="exact probability against the expansion over a range")
    p.add_argument("--kind", required=True, choices=asy.REPORT_KINDS)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=parse_range, required=True, help="A..B")
    p.add_argument("--p", type=parse_fraction)
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", help="exhaustive enumeration for small n")
    p.add_argument("--kind", required=True, choices=("graph", "tournament"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-n7", action="store_true", help="lift the default cap n <= 6 to 7")
    p.add_argument("--workers", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("mc", help="seeded Monte Carlo estimate")
    p.add_argument("--kind", required=True, choices=("graph", "tournament"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=parse_fraction)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_mc)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records, columns = args.func(args)
    except CliError as exc:
        print(f"connasym: error: {exc}", file=sys.stderr)
        return exc.code
    except ResourceLimitError as exc:
        print(f"connasym: error: {exc}", file=sys.stderr)
        return 3
    except (ConnasymError, ValueError) as exc:
        print(f"connasym: error: {exc}", file=sys.stderr)
        return 2
    text = render(records, columns, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
