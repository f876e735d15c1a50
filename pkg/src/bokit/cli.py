"""Command-line interface: ``bokit compute | verify | certify | roots | table``.

Exit codes: 0 everything confirmed, 1 counterexample or discrepancy,
2 usage error, internal error or undecided sign.
Settings come from flags, then ``BOKIT_*`` environment variables, then defaults.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from fractions import Fraction

from . import reference
from .certify.pipeline import certify_family, exit_code
from .certify.sweeps import THEOREMS, theorem_sweep
from .darcais import PolyCache, bo_poly, write_polys
from .exactnum import DomainError, UndecidedSign, as_fraction, set_max_bits
from .parallel import default_workers
from .partitions import colored_partition_numbers, partition_numbers, sigma_table
from .report import certify_markdown, md_table, theorem_markdown, to_json
from .roots import DEFAULT_WIDTH, compare_cell, table3, table3_csv, table3_markdown

ENV_PREFIX = "BOKIT_"
FORMATS = ("md", "json", "csv")


class UsageError(Exception):
    pass


def _env(name: str):
    return os.environ.get(ENV_PREFIX + name.upper())


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _common(parser: argparse.ArgumentParser, default) -> None:
    g = parser.add_argument_group("output and execution")
    g.add_argument("--json", action="store_const", const="json", dest="format", default=default, help="JSON output")
    g.add_argument("--csv", action="store_const", const="csv", dest="format", default=default, help="CSV output")
    g.add_argument("--format", choices=FORMATS, default=default, help="output format (default md)")
    g.add_argument("--workers", type=_positive_int, default=default, help="worker processes (default: all cores)")
    g.add_argument("--cache", default=default, help="polynomial cache file (JSON lines)")
    g.add_argument("--output", "-o", default=default, help="write the report here instead of stdout")
    g.add_argument("--precision", type=_positive_int, default=default, help="precision cap in bits for certified signs")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bokit", description="Exact checks of Bessenrodt-Ono type inequalities.")
    _common(p, None)
    sub = p.add_subparsers(dest="command", required=True, metavar="command")
    S = argparse.SUPPRESS

    c = sub.add_parser("compute", help="print exact sequence values or polynomials")
    c.add_argument("seq", choices=("p", "sigma", "colored", "darcais"))
    c.add_argument("--to", type=_nonneg_int, default=10, help="last index (default 10)")
    c.add_argument("--from", dest="start", type=_nonneg_int, default=None, help="first index (default 0; sigma 1)")
    c.add_argument("--k", type=_positive_int, help="number of colors (colored)")
    c.add_argument("--n", type=_nonneg_int, help="index of P_n (darcais)")
    c.add_argument("--export", help="write the polynomials to this file in cache format (darcais)")
    _common(c, S)

    v = sub.add_parser("verify", help="sweep a stated inequality over a finite range")
    v.add_argument("which", choices=THEOREMS)
    v.add_argument("--kmax", type=_positive_int, default=5)
    v.add_argument("--nmax", type=_positive_int, default=100)
    v.add_argument("--nmin", type=_positive_int, default=4)
    v.add_argument("--x", type=_rational, action="append", help="sample point (repeatable)")
    v.add_argument("--amax", type=_positive_int, default=50)
    _common(v, S)

    f = sub.add_parser("certify", help="replay one induction proof")
    f.add_argument("family", choices=("bo", "x3", "x2", "x18"), type=str.lower)
    f.add_argument("--amax", type=_positive_int, help="threshold scan bound (default 10000 for bo, else 1000)")
    f.add_argument("--tail", action="store_true", help="also certify the final expression for all larger a")
    _common(f, S)

    r = sub.add_parser("roots", help="largest real zeros of P_ab(x)")
    r.add_argument("--amax", type=_positive_int, default=14)
    r.add_argument("--width", type=_rational, default=DEFAULT_WIDTH, help="isolation width (default 1/10000)")
    _common(r, S)

    t = sub.add_parser("table", help="reproduce a published table and compare")
    t.add_argument("number", type=int, choices=(1, 2, 3))
    _common(t, S)
    return p


def _settings(args) -> dict:
    fmt = args.format or _env("format") or "md"
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r} (from {ENV_PREFIX}FORMAT)")
    workers = args.workers or _env("workers") or default_workers()
    precision = args.precision or _env("precision")
    try:
        workers = int(workers)
        precision = int(precision) if precision else None
    except ValueError as e:
        raise UsageError(f"bad environment setting: {e}") from None
    if workers < 1:
        raise UsageError("workers must be >= 1")
    return {
        "format": fmt,
        "workers": workers,
        "precision": precision,
        "cache": args.cache or _env("cache"),
        "output": args.output or _env("output"),
    }


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- subcommands --------------------------------------------------------------


def cmd_compute(args, cfg) -> tuple[str, int]:
    if args.seq == "darcais":
        if args.n is None:
            raise UsageError("compute darcais needs --n")
        if args.k is not None:
            raise UsageError("--k only applies to compute colored")
        start = args.start if args.start is not None else args.n
        if start > args.n:
            raise UsageError("--from must not exceed --n")
        cache = PolyCache(cfg["cache"])
        polys = {n: cache.get(n) for n in range(start, args.n + 1)}
        cache.save()
        if args.export:
            write_polys(args.export, polys)
        if cfg["format"] == "json":
            return to_json({"sequence": "darcais", "polys": {str(n): [str(c) for c in p.coeffs] for n, p in polys.items()}}), 0
        if cfg["format"] == "csv":
            rows = [(n, i, str(c)) for n, p in polys.items() for i, c in enumerate(p.coeffs)]
            return _csv(["n", "degree", "coeff"], rows), 0
        if len(polys) == 1:
            return f"{polys[args.n]}\n", 0
        return "".join(f"P_{n}(x) = {p}\n" for n, p in polys.items()), 0

    if args.n is not None or args.export:
        raise UsageError("--n and --export only apply to compute darcais")
    if args.seq == "colored":
        if args.k is None:
            raise UsageError("compute colored needs --k")
    elif args.k is not None:
        raise UsageError("--k only applies to compute colored")
    start = args.start if args.start is not None else (1 if args.seq == "sigma" else 0)
    if start > args.to:
        raise UsageError("--from must not exceed --to")
    if args.seq == "sigma":
        if start < 1:
            raise UsageError("sigma starts at n = 1")
        values = sigma_table(args.to)
    elif args.seq == "p":
        values = partition_numbers(args.to).values
    else:
        values = colored_partition_numbers(args.k, args.to).values
    idx = range(start, args.to + 1)
    if cfg["format"] == "json":
        d = {"sequence": args.seq, "from": start, "to": args.to, "values": [values[n] for n in idx]}
        if args.k is not None:
            d["k"] = args.k
        return to_json(d), 0
    if cfg["format"] == "csv":
        return _csv(["n", "value"], [(n, values[n]) for n in idx]), 0
    return ",".join(str(values[n]) for n in idx) + "\n", 0


def cmd_verify(args, cfg) -> tuple[str, int]:
    xs = args.x or [Fraction(2)]
    if args.which == "t1.6" and not args.x:
        xs = [Fraction(181, 100), Fraction(19, 10), Fraction(2), Fraction(3)]
    if args.which == "t1.3" and not args.x:
        xs = [Fraction(2), Fraction(201, 100), Fraction(5, 2), Fraction(3), Fraction(10)]
    rep = theorem_sweep(
        args.which,
        kmax=args.kmax,
        nmax=args.nmax,
        nmin=args.nmin,
        xs=xs,
        amax=args.amax,
        workers=cfg["workers"],
    )
    d = rep.as_dict()
    code = 0 if rep.matches else 1
    if cfg["format"] == "json":
        return to_json(d), code
    if cfg["format"] == "csv":
        return _csv(["exception"], [[" ".join(e)] for e in d["exceptions"]]), code
    return theorem_markdown(d), code


def cmd_certify(args, cfg) -> tuple[str, int]:
    result = certify_family(args.family, amax=args.amax, tail=args.tail, workers=cfg["workers"])
    code = exit_code(result)
    if cfg["format"] == "json":
        return to_json(result), code
    if cfg["format"] == "csv":
        rows = [(c["id"], c["status"], c["expected"], c["observed"]) for c in result["claims"]]
        return _csv(["id", "status", "expected", "observed"], rows), code
    return certify_markdown(result), code


def _roots_output(tab, published, fmt) -> tuple[str, int]:
    statuses = {}
    n = len(tab)
    for a in range(1, min(n, len(published)) + 1):
        for b in range(1, min(n, len(published)) + 1):
            statuses[(a, b)] = compare_cell(tab[a - 1][b - 1], published[a - 1][b - 1])
    code = 1 if "mismatch" in statuses.values() else 0
    if fmt == "csv":
        return table3_csv(tab, published), code
    if fmt == "json":
        cells = []
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                r = tab[a - 1][b - 1]
                cell = {"a": a, "b": b, "lo": r.lo, "hi": r.hi, "rounded": [f"{float(v):.1f}" for v in r.rounded(1)]}
                if r.exact is not None:
                    cell["exact"] = r.exact
                if (a, b) in statuses:
                    cell["published"] = published[a - 1][b - 1]
                    cell["status"] = statuses[(a, b)]
                cells.append(cell)
        return to_json({"maxdim": n, "cells": cells}), code
    out = table3_markdown(tab)
    flagged = sorted(k for k, s in statuses.items() if s != "match")
    if statuses:
        out += f"\ncompared with the printed table: {len(statuses) - len(flagged)}/{len(statuses)} match"
        out += "".join(f"\n  ({a},{b}): {statuses[(a, b)]}" for a, b in flagged) + "\n"
    return out, code


def cmd_roots(args, cfg) -> tuple[str, int]:
    if args.width <= 0:
        raise UsageError("--width must be positive")
    tab = table3(args.amax, args.width, cfg["workers"])
    return _roots_output(tab, reference.TABLE3, cfg["format"])


def cmd_table(args, cfg) -> tuple[str, int]:
    fmt = cfg["format"]
    if args.number == 3:
        return _roots_output(table3(14, DEFAULT_WIDTH, cfg["workers"]), reference.TABLE3, fmt)
    if args.number == 1:
        vals = partition_numbers(10).values
        ok = tuple(vals) == reference.TABLE1
        if fmt == "json":
            return to_json({"table": 1, "values": list(vals), "matches": ok}), 0 if ok else 1
        if fmt == "csv":
            return _csv(["n", "p(n)"], list(enumerate(vals))), 0 if ok else 1
        body = md_table(["n"] + list(range(11)), [["p(n)"] + list(vals)])
        return body + f"\nmatches the printed table: {'yes' if ok else 'no'}\n", 0 if ok else 1
    grid = [[bo_poly(a, b)(2) for b in range(1, 5)] for a in range(1, 5)]
    ok = grid == [list(r) for r in reference.TABLE2]
    if fmt == "json":
        return to_json({"table": 2, "values": grid, "matches": ok}), 0 if ok else 1
    if fmt == "csv":
        return _csv(["a", "b", "P_ab(2)"], [(a + 1, b + 1, grid[a][b]) for a in range(4) for b in range(4)]), 0 if ok else 1
    body = md_table(["a\\b", 1, 2, 3, 4], [[a + 1] + grid[a] for a in range(4)])
    return body + f"\nmatches the printed table: {'yes' if ok else 'no'}\n", 0 if ok else 1


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "certify": cmd_certify, "roots": cmd_roots, "table": cmd_table}


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _settings(args)
        if cfg["precision"]:
            set_max_bits(cfg["precision"])
        text, code = COMMANDS[args.command](args, cfg)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"bokit: error: {e}", file=sys.stderr)
        return 2
    except UndecidedSign as e:
        print(f"bokit: undecided sign: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"bokit: error: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 2
    _emit(text, cfg["output"])
    return code


if __name__ == "__main__":
    sys.exit(main())
