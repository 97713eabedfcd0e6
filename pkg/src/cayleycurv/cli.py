"""Command-line front end: ``cayleycurv eval | census | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource budget.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import sys
from fractions import Fraction

from .census import census_rows
from .core import GroupError, ParseError
from .curvature import UndefinedAtIdentity, avg_conj_length, ball_comparison, fmt, kappa_r, sign, spherical_comparison
from .descriptors import load_group
from .metric import DEFAULT_MEMORY_BUDGET, MemoryBudgetExceeded, OutOfTable, WordMetric, cached_build
from .transport import SolverBudgetExceeded, kappa_transport, transport_distance

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
VARIANTS = ("sphere", "ball", "transport")


class UsageError(Exception):
    pass


def _metric(group, desc, radius, mem_limit):
    table = cached_build(group, radius, desc, mem_limit)
    return WordMetric(group, table=table)


def _locate(group, desc, g, mem_limit):
    """Smallest table radius that contains g, grown by doubling."""
    r = 2
    while True:
        table = cached_build(group, r, desc, mem_limit)
        n = table.lengths.get(g)
        if n is not None:
            return n
        if group.is_finite and not table.sphere(r):
            raise UsageError("element not reached by the generators")
        r *= 2


def _value(metric, g, variant, r):
    """(comparison average, κ) for one element under the chosen variant."""
    n = metric.length(g)
    e = metric.group.identity()
    if variant == "transport":
        avg = transport_distance(metric, e, g, r)
        return avg, (n - avg) / n
    if variant == "ball":
        avg = ball_comparison(metric, e, g, r)
    elif r == 1:
        avg = avg_conj_length(metric, g)
    else:
        avg = spherical_comparison(metric, e, g, r)
    return avg, (n - avg) / n


def _element(group, args):
    if args.word is not None:
        return [group.parse_word(w) for w in args.word]
    if args.coords is not None:
        out = []
        for c in args.coords:
            try:
                coords = [int(x) for x in c.replace(" ", "").split(",") if x]
            except ValueError as exc:
                raise ParseError(f"bad coordinates {c!r}") from exc
            out.append(group.from_coords(coords))
        return out
    raise UsageError("eval needs --word or --coords")


def cmd_eval(args) -> tuple[list[dict], int]:
    group, desc = load_group(args.group, args.graph_file)
    elements = _element(group, args)
    r = args.r
    need = 0
    for g in elements:
        n = group.closed_length(g) if group.has_closed_length else _locate(group, desc, g, args.mem_limit)
        if n == 0:
            raise UsageError("curvature is undefined at the identity")
        need = max(need, n + 2 * r)
    radius = max(r, args.radius or 0) if group.has_closed_length else need
    metric = _metric(group, desc, radius, args.mem_limit)
    rows = []
    for g in elements:
        avg, k = _value(metric, g, args.variant, r)
        row = {
            "element": group.format(g),
            "length": metric.length(g),
            "variant": args.variant,
            "r": r,
            "av": fmt(avg),
            "kappa": fmt(k),
            "kappa_approx": f"{float(k):.6f}",
            "sign": sign(k),
        }
        if args.transport and args.variant != "transport":
            kt = kappa_transport(metric, g, r)
            row["kappa_transport"] = fmt(kt)
        rows.append(row)
    return rows, EXIT_OK


def cmd_census(args) -> tuple[list[dict], int]:
    group, desc = load_group(args.group, args.graph_file)
    n = args.radius if args.radius is not None else 6
    r = args.r
    radius = n + r if group.has_closed_length else n + 2 * r
    metric = _metric(group, desc, max(radius, r), args.mem_limit)
    kappas = {}
    for s in range(1, n + 1):
        for g in metric.sphere(s):
            kappas[g] = _value(metric, g, args.variant, r)[1]
    rows = []
    for row in census_rows(metric, n, kappas):
        b = row.ball_size
        rows.append({
            "n": row.n,
            "ball_size": b,
            "positive": row.positive,
            "zero": row.zero,
            "negative": row.negative,
            "p_positive": fmt(Fraction(row.positive, b)),
            "p_zero": fmt(Fraction(row.zero, b)),
            "p_negative": fmt(Fraction(row.negative, b)),
            "average_kappa": fmt(row.average_kappa),
            "average_kappa_approx": f"{float(row.average_kappa):.6f}",
        })
    return rows, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    from . import verify

    names = args.suite or ["all"]
    if names == ["all"]:
        names = list(verify.SUITES)
    unknown = [s for s in names if s not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; choose from {', '.join(verify.SUITES)} or all")
    suites = {}
    ok = True
    first_failure = None
    for name in names:
        fn = verify.SUITES[name]
        kwargs = {"seed": args.seed} if "seed" in inspect.signature(fn).parameters else {}
        reports = fn(**kwargs)
        passed = all(rep.passed for rep in reports)
        ok &= passed
        suites[name] = {"status": "pass" if passed else "fail", "checks": [rep.to_json() for rep in reports]}
        if not passed and first_failure is None:
            bad = next(rep for rep in reports if not rep.passed)
            first_failure = f"{name}: {bad.check}: {bad.witnesses[0] if bad.witnesses else '(no witness)'}"
    report = {"status": "pass" if ok else "fail", "suites": suites}
    if first_failure:
        print(f"first failure: {first_failure}", file=sys.stderr)
    return report, EXIT_OK if ok else EXIT_FAIL


def _render(data, fmt_name: str) -> str:
    if fmt_name == "json" or isinstance(data, dict):
        return json.dumps(data, indent=2) + "\n"
    if not data:
        return ""
    cols = list(data[0].keys())
    for row in data[1:]:
        cols += [c for c in row if c not in cols]
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(data)
        return buf.getvalue()
    widths = {c: max(len(c), *(len(str(row.get(c, ""))) for row in data)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols).rstrip()]
    for row in data:
        lines.append("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in cols).rstrip())
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="short name (f2, z3, heis, dinf, z2z6, f2xz, sym5-pos, raag), JSON file or inline JSON")
    common.add_argument("--graph-file", help="RAAG defining graph, one 'u v' edge per line")
    common.add_argument("--radius", type=int, help="census radius / minimum table radius")
    common.add_argument("--variant", choices=VARIANTS, default="sphere")
    common.add_argument("--r", type=int, default=1, help="comparison radius")
    common.add_argument("--format", choices=("csv", "json", "table"), default="table")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="worker cap; output does not depend on it")
    common.add_argument("--mem-limit", type=int, default=DEFAULT_MEMORY_BUDGET,
                        help="maximum number of ball elements held in memory")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="cayleycurv", description="Medium-scale curvature on Cayley graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("eval", parents=[common], help="curvature of individual elements")
    ev.add_argument("--word", action="append", help="word such as 'a b a^-1' (repeatable)")
    ev.add_argument("--coords", action="append", help="comma-separated coordinates (repeatable)")
    ev.add_argument("--transport", action="store_true", help="also report the transport curvature")
    sub.add_parser("census", parents=[common], help="sign counts and average curvature by radius")
    ve = sub.add_parser("verify", parents=[common], help="run verification suites")
    ve.add_argument("suite", nargs="*", help="suite names or 'all'")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.threads < 1 or args.r < 1 or (args.radius is not None and args.radius < 0):
            raise UsageError("--threads and --r must be positive, --radius non-negative")
        if args.command != "verify" and not args.group:
            raise UsageError(f"{args.command} needs --group")
        if args.command == "eval":
            data, code = cmd_eval(args)
        elif args.command == "census":
            data, code = cmd_census(args)
        else:
            data, code = cmd_verify(args)
            args.format = "json"
    except (MemoryBudgetExceeded, SolverBudgetExceeded) as exc:
        print(f"resource budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ParseError, UndefinedAtIdentity, OutOfTable, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(data, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
