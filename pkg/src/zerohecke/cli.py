"""Command line front end: ``zerohecke verify | char | stats``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import _kernels
from .chars import component_char, nc_char_quotient
from .combinat import Composition, WeakComposition, parse_composition
from .nsqsym import bz_substitution, lnt_substitution, qt_substitution, specialize
from .poly import Poly
from .verify import DEFAULT_BUDGET, SUITES, ConfigError, SuiteConfig, run_suite

STATISTICS = ("inv", "maj", "des", "imaj", "ides")
STATS_MAX_N = 7


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zerohecke", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help=f"one of: {', '.join(SUITES)}")
    v.add_argument("--n", type=int, default=4)
    v.add_argument("--kmax", type=_nonneg, default=4, help="chain-length / u-degree cap")
    v.add_argument("--degmax", type=_nonneg, default=6, help="polynomial degree cap")
    v.add_argument("--lmax", type=_nonneg, default=3, help="cap on l and k (Garsia-Gessel), lambda_1 (ABR)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest enumeration allowed")
    v.add_argument("--format", choices=("json", "csv", "text"), default="json")
    v.add_argument("--no-timing", action="store_true", help="report millis as 0 for byte-stable output")

    c = sub.add_parser("char", help="print a characteristic")
    c.add_argument("--alpha", required=True)
    c.add_argument("--kind", choices=("nc", "qs"), default="nc")
    c.add_argument("--n", type=int, help="size check for --alpha")
    c.add_argument("--spec", choices=("t-power", "qt", "lnt", "none"), default="none")
    c.add_argument("--format", choices=("json", "csv", "text"), default="text")

    s = sub.add_parser("stats", help="permutation statistics table over S_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--stats", default=",".join(STATISTICS))
    s.add_argument("--max-n", type=int, default=STATS_MAX_N)
    s.add_argument("--format", choices=("json", "csv", "text"), default="csv")
    return p


# -- verify ------------------------------------------------------------------------


def _report_csv(reports: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity", "params", "status", "monomial", "lhs", "rhs", "millis"])
    for r in reports:
        wit = r.get("witness") or {}
        w.writerow([r["identity"], json.dumps(r["params"], sort_keys=True), r["status"],
                    wit.get("monomial", ""), wit.get("lhs", ""), wit.get("rhs", ""), r["millis"]])
    return buf.getvalue()


def _report_text(reports: list[dict]) -> str:
    lines = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r["params"].items())
        line = f"{r['status'].upper():4} {r['identity']} {params}".rstrip() + f" ({r['millis']} ms)"
        if "witness" in r:
            wit = r["witness"]
            line += f"\n     first difference at {wit['monomial']}: {wit['lhs']} != {wit['rhs']}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    cfg = SuiteConfig(args.suite, n=args.n, kmax=args.kmax, degmax=args.degmax, lmax=args.lmax,
                      workers=args.workers, seed=args.seed, budget=args.budget)
    try:
        reports = run_suite(cfg, timing=not args.no_timing)
    except ConfigError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        out = "".join(json.dumps(r) + "\n" for r in reports)
    elif args.format == "csv":
        out = _report_csv(reports)
    else:
        out = _report_text(reports)
    sys.stdout.write(out)
    return 0 if all(r["status"] == "pass" for r in reports) else 1


# -- char --------------------------------------------------------------------------


def _parse_weak(text: str) -> WeakComposition:
    try:
        parts = tuple(int(p) for p in text.strip().strip("[]()").replace(" ", "").split(","))
        return WeakComposition(parts)
    except ValueError as exc:
        raise UsageError(f"malformed composition {text!r}") from exc


def characteristic(alpha_text: str, kind: str, spec: str, n: int | None = None):
    if kind == "qs":
        alpha = _parse_weak(alpha_text)
        if n is not None and n != alpha.n:
            raise UsageError(f"--n {n} does not match |alpha| = {alpha.n}")
        if spec in ("qt", "lnt"):
            raise UsageError(f"--spec {spec} applies to --kind nc only")
        x = component_char(alpha)
        if spec == "t-power":
            t = Poly.var("t")
            x = specialize(x, {f"t{i}": t ** i for i in range(alpha.n + 1)})
        return x
    try:
        alpha = parse_composition(alpha_text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not alpha.parts:
        raise UsageError("alpha must be a nonempty composition")
    if n is not None and n != alpha.n:
        raise UsageError(f"--n {n} does not match |alpha| = {alpha.n}")
    if spec == "none":
        return nc_char_quotient(alpha)
    if spec == "t-power":
        return specialize(nc_char_quotient(alpha), bz_substitution(alpha.n))
    regular = nc_char_quotient(Composition((1,) * alpha.n))
    subst = qt_substitution(alpha) if spec == "qt" else lnt_substitution(alpha)
    return specialize(regular, subst)


def cmd_char(args) -> int:
    x = characteristic(args.alpha, args.kind, args.spec, args.n)
    if args.format == "json":
        print(x.to_json())
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["basis", "composition", "coeff"])
        for a, c in x.items():
            w.writerow([x.basis, ",".join(map(str, a.parts)), str(c)])
        sys.stdout.write(buf.getvalue())
    else:
        print(x.to_text())
    return 0


# -- stats -------------------------------------------------------------------------


def statistics_table(n: int, names: Sequence[str]) -> np.ndarray:
    """One row per permutation of S_n (lexicographic), one column per statistic."""
    perms = _kernels.perm_array(n)
    inv_rows = _kernels.inverse_rows(perms)
    cols = {}

    def maj_des(rows):
        masks = _kernels.descent_masks(rows)
        weights = np.arange(1, max(n, 1), dtype=np.int64)
        bits = (masks[:, None] >> (weights - 1)) & 1
        return (bits * weights).sum(axis=1), bits.sum(axis=1)

    for name in names:
        if name == "inv":
            cols[name] = _kernels.inversions(perms)
        elif name in ("maj", "des"):
            cols["maj"], cols["des"] = maj_des(perms)
        elif name in ("imaj", "ides"):
            cols["imaj"], cols["ides"] = maj_des(inv_rows)
    return np.stack([np.asarray(cols[name], dtype=np.int64) for name in names], axis=1)


def cmd_stats(args) -> int:
    names = [s.strip() for s in args.stats.split(",") if s.strip()]
    unknown = [s for s in names if s not in STATISTICS]
    if unknown or not names:
        raise UsageError(f"unknown statistic {', '.join(unknown) or '(none)'}; choose from {', '.join(STATISTICS)}")
    if not 1 <= args.n <= args.max_n:
        raise UsageError(f"n out of range: {args.n} (need 1 <= n <= {args.max_n})")
    table = statistics_table(args.n, names)
    if args.format == "json":
        print(json.dumps([dict(zip(names, map(int, row))) for row in table]))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(names)
        w.writerows(table.tolist())
        sys.stdout.write(buf.getvalue())
    else:
        width = max(len(s) for s in names) + 1
        print("".join(s.rjust(width) for s in names))
        for row in table.tolist():
            print("".join(str(v).rjust(width) for v in row))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"verify": cmd_verify, "char": cmd_char, "stats": cmd_stats}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
