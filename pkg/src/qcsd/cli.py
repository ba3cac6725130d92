"""Command-line entry point: ``qcsd analyze|search|verify-table|bound``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time

from .analysis import REPORT_KEYS, analyze, check_entry, table_canonical_forms, table_entries
from .data import is_novel
from .errors import CapacityError, InputError
from .search import DivisorMode, SearchConfig, run_search
from .weights import extremal_bound

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_SELF_DUAL = 2


def format_value(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def format_report(report: dict) -> str:
    width = max(len(k) for k in REPORT_KEYS)
    lines = [f"{key:<{width}}  {format_value(report[key])}" for key in REPORT_KEYS if key != "distribution"]
    nonzero = " ".join(f"{w}:{c}" for w, c in enumerate(report["distribution"]) if c)
    lines.append(f"{'weights':<{width}}  {nonzero}")
    return "\n".join(lines)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_analyze(args) -> int:
    try:
        report = analyze(args.poly, args.k, args.threads)
    except (InputError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(report) if args.json else format_report(report))
    return EXIT_OK if report["self_dual"] else EXIT_NOT_SELF_DUAL


_HIT_COLUMNS = ("beta", "poly", "K", "ones", "gamma", "family", "novel", "in_table", "d")


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(
            k=args.k,
            K_min=args.kmin,
            K_max=args.kmax,
            weights=tuple(args.weights),
            divisor_mode=DivisorMode(args.divisor_mode),
            target_d=args.target_d,
            prescreen_info_weight=args.prescreen_weight,
            isd_iterations=args.isd_iterations,
            seed=args.seed,
            workers=args.threads,
        )
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    progress = None if args.quiet else (lambda msg: print(msg, file=sys.stderr, flush=True))
    start = time.perf_counter()
    hits = run_search(cfg, progress)
    elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
    published = table_canonical_forms()
    rows = [
        {
            "beta": h.report.beta,
            "poly": h.poly,
            "K": h.K,
            "ones": h.weight,
            "gamma": h.report.gamma,
            "family": h.report.family.value,
            "novel": is_novel(h.report.family, h.report.gamma, h.report.beta),
            "in_table": h.poly in published,
            "d": h.report.d,
        }
        for h in hits
    ]
    if args.format == "json":
        print(json.dumps({"hits": rows, "elapsed_ms": elapsed_ms}))
    elif args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=_HIT_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: format_value(v) for k, v in row.items()})
    else:
        print("  ".join(f"{c:>6}" if c != "poly" else f"{c:<16}" for c in _HIT_COLUMNS))
        for row in rows:
            print("  ".join(
                f"{format_value(row[c]):>6}" if c != "poly" else f"{row[c]:<16}" for c in _HIT_COLUMNS
            ))
        print(f"{len(rows)} hit(s) in {elapsed_ms / 1000:.1f} s")
    return EXIT_OK


def cmd_verify_table(args) -> int:
    K_filter = set(args.k) if args.k else None
    passed = failed = suspect = 0
    for entry in table_entries(K_filter):
        check = check_entry(entry, args.threads, args.force)
        line = f"{check.outcome:<12} beta={entry.beta:<4} K={entry.K:<3} ones={entry.ones} {entry.poly}"
        if check.report is not None:
            r = check.report
            line += f"  -> d={r['d']} beta={r['beta']} gamma={r['gamma']} {r['family']} ({r['elapsed_ms'] / 1000:.1f} s)"
        print(line, flush=True)
        for problem in check.problems:
            print(f"    {problem}", flush=True)
        if check.outcome == "PASS":
            passed += 1
        elif check.outcome == "FAIL":
            failed += 1
        else:
            suspect += 1
    print(f"{passed} passed, {failed} failed, {suspect} data-suspect")
    return EXIT_OK if failed == 0 else EXIT_INPUT


def cmd_bound(args) -> int:
    try:
        print(extremal_bound(args.n))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcsd", description="Quasi-cyclic self-dual codes from circulant pairs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze the code of one tap polynomial")
    p.add_argument("--poly", required=True, help="'0'/'1' string, x^0 coefficient first")
    p.add_argument("--k", type=int, default=35, help="circulant size")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="exhaustive tap-polynomial search")
    p.add_argument("--kmin", type=int, default=11)
    p.add_argument("--kmax", type=int, default=16)
    p.add_argument("--weights", type=_int_list, default=[7, 9])
    p.add_argument("--k", type=int, default=35)
    p.add_argument("--divisor-mode", choices=[m.value for m in DivisorMode], default="nontrivial")
    p.add_argument("--target-d", type=int, default=12)
    p.add_argument("--prescreen-weight", type=int, default=4)
    p.add_argument("--isd-iterations", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-table", help="re-check every published polynomial")
    p.add_argument("--k", type=_int_list, default=None, help="only these K values, e.g. 11,12,13")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force", action="store_true", help="also analyze data-suspect entries")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("bound", help="extremal minimum-distance bound for length n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
