"""Command line front end.

Exit codes: 0 on success (and on a passing verification or a witness-free
scan), 1 when a verification fails or a scan finds a separation witness,
2 on usage errors and malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import t36
from .io import InvariantError, ParseError, export_dot, parse_tournament, read_tournament
from .search import ScanConfig, scan_separation
from .solutions import (
    banks_set,
    banks_witness,
    bipartisan_set,
    copeland_set,
    top_cycle,
    uncovered_set,
)

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tournsol",
        description="Tournament solutions with exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a tournament file")
    gen_sub = gen.add_subparsers(dest="target", required=True)
    gen36 = gen_sub.add_parser("paper36", help="the bundled order-36 construction")
    gen36.add_argument("--variant-seed", type=int, default=None, metavar="S",
                       help="reorient the nine outer triangles at random")
    gen36.add_argument("-o", "--output", default="-", metavar="FILE")
    genr = gen_sub.add_parser("random", help="uniformly random tournament")
    genr.add_argument("--n", type=int, required=True, metavar="N")
    genr.add_argument("--seed", type=int, required=True, metavar="S")
    genr.add_argument("-o", "--output", default="-", metavar="FILE")

    solve = sub.add_parser("solve", help="apply a solution concept")
    solve.add_argument("file", nargs="?", default="-",
                       help="tournament file, '-' or omitted for stdin")
    solve.add_argument("--rule", required=True,
                       choices=["copeland", "tc", "uc", "banks", "bp"])
    solve.add_argument("--witness", action="store_true",
                       help="with --rule banks: print a chain witness per member")

    verify = sub.add_parser("verify-paper",
                            help="check the order-36 construction claims")
    verify.add_argument("file", nargs="?", default=None,
                        help="tournament file to verify; default: fresh build")
    verify.add_argument("--report", default=None, metavar="OUT",
                        help="write a JSON report")

    scan = sub.add_parser("scan", help="search for rule-separating tournaments")
    scan.add_argument("--rules", required=True, metavar="A,B")
    scan.add_argument("--max-order", type=int, required=True)
    scan.add_argument("--mode", required=True, choices=["exhaustive", "random"])
    scan.add_argument("--samples", type=int, default=None, metavar="K")
    scan.add_argument("--seed", type=int, default=None, metavar="S")

    dot = sub.add_parser("export-dot", help="write a DOT digraph")
    dot.add_argument("file")
    dot.add_argument("-o", "--output", default="-", metavar="OUT")

    orb = sub.add_parser("orbits",
                         help="symmetry orbits of the bundled construction")
    orb.add_argument("file")
    return parser


def _read(path: str):
    if path == "-":
        return parse_tournament(sys.stdin.read())
    return read_tournament(path)


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def _render(v: int, labeled: bool) -> str:
    return f"{t36.vertex_label(v)} {v}" if labeled else str(v)


def _cmd_gen(args) -> int:
    from .io import format_tournament
    from .search import random_tournament

    if args.target == "paper36":
        if args.variant_seed is None:
            t = t36.build_t36()
        else:
            t = t36.build_t36_variant(t36.random_orientations(args.variant_seed))
    else:
        t = random_tournament(args.n, args.seed)
    _write(args.output, format_tournament(t))
    return 0


def _cmd_solve(args) -> int:
    if args.witness and args.rule != "banks":
        print("error: --witness applies only to --rule banks", file=sys.stderr)
        return 2
    t = _read(args.file)
    labeled = t36.classify(t) is not None
    if args.rule == "bp":
        support, lottery = bipartisan_set(t)
        for v in sorted(support):
            print(f"{_render(v, labeled)} p={lottery[v]}")
        return 0
    if args.rule == "banks":
        for v in range(t.order):
            chain = banks_witness(t, v)
            if chain is None:
                continue
            if args.witness:
                shown = ",".join(_render(c, labeled) for c in chain) if chain else "(empty)"
                print(f"{_render(v, labeled)} witness={shown}")
            else:
                print(_render(v, labeled))
        return 0
    rule = {"copeland": copeland_set, "tc": top_cycle, "uc": uncovered_set}[args.rule]
    for v in sorted(rule(t)):
        print(_render(v, labeled))
    return 0


def _cmd_verify(args) -> int:
    t = _read(args.file) if args.file is not None else t36.build_t36()
    try:
        report = t36.verify_t36(t)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for check in report.checks:
        if check.status == "skipped":
            print(f"SKIP {check.name} ({check.details.get('reason', '')})")
        else:
            print(f"{check.status.upper():4s} {check.name}")
    passed = sum(c.status == "pass" for c in report.checks)
    failed = sum(c.status == "fail" for c in report.checks)
    skipped = sum(c.status == "skipped" for c in report.checks)
    print(f"result: {'PASS' if report.passed else 'FAIL'} "
          f"({passed} passed, {failed} failed, {skipped} skipped, mode={report.mode})")
    if args.report is not None:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, indent=2)
            fh.write("\n")
    return 0 if report.passed else 1


def _cmd_scan(args) -> int:
    rules = tuple(part.strip() for part in args.rules.split(","))
    if len(rules) != 2 or not all(rules):
        print("error: --rules expects two comma-separated rule names", file=sys.stderr)
        return 2
    if args.mode == "exhaustive" and (args.samples is not None or args.seed is not None):
        print("error: --samples/--seed apply only to --mode random", file=sys.stderr)
        return 2
    config = ScanConfig(
        rules=rules,  # type: ignore[arg-type]
        max_order=args.max_order,
        mode=args.mode,
        sample_count=args.samples if args.samples is not None else 1000,
        seed=args.seed if args.seed is not None else 0,
    )
    outcome = scan_separation(config)
    for order in outcome.orders:
        if outcome.labeled_counts is not None:
            print(f"order {order}: {outcome.examined[order]} classes covering "
                  f"{outcome.labeled_counts[order]} labelled tournaments")
        else:
            print(f"order {order}: {outcome.examined[order]} samples")
    for w in outcome.witnesses:
        a, b = w.rules
        sa, sb = w.choice_sets
        print(f"witness (order {w.order}): {a}={list(sa)} disjoint from {b}={list(sb)}")
        sys.stdout.write(w.text)
    print(f"witnesses: {len(outcome.witnesses)}")
    return 1 if outcome.witnesses else 0


def _cmd_export_dot(args) -> int:
    t = _read(args.file)
    if t36.classify(t) is not None:
        labels = {v: t36.vertex_label(v) for v in range(36)}
        clusters = t36.dot_clusters()
    else:
        labels = None
        clusters = None
    _write(args.output, export_dot(t, labels=labels, clusters=clusters))
    return 0


def _cmd_orbits(args) -> int:
    t = _read(args.file)
    if t36.classify(t) != "canonical":
        print("error: orbits requires the bundled order-36 tournament "
              "(gen paper36 without --variant-seed)", file=sys.stderr)
        return 2
    parts = t36.orbits(t, t36.symmetry_generators())
    for idx, part in enumerate(parts, start=1):
        members = " ".join(str(v) for v in sorted(part))
        print(f"orbit {idx} (size {len(part)}): {members}")
    return 0


_DISPATCH = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "verify-paper": _cmd_verify,
    "scan": _cmd_scan,
    "export-dot": _cmd_export_dot,
    "orbits": _cmd_orbits,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (ParseError, InvariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
