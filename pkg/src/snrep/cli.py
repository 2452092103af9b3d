"""Command-line interface: ``snrep {gen,verify,characters,bench}``.

Exit codes: 0 success, 1 a verification identity failed, 2 usage or
capacity error. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import pathlib
import sys
import time
from math import factorial

from . import tables
from .errors import CapacityError, DegreeError
from .exactmat import block_extract
from .oracle import MAX_EXHAUSTIVE_DEGREE, conjugate_direct, run_suite
from .perm import MAX_ENUM_DEGREE, elements
from .standard import MAX_NORM_DEGREE, RepKind, character, conjugacy_classes, standard_matrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_GEN_DEGREE = 10
MAX_BENCH_DEGREE = MAX_EXHAUSTIVE_DEGREE


class UsageError(Exception):
    pass


def _parse_k(spec: str, n: int) -> range:
    """``K`` or ``A:B`` (inclusive), 1-based ranks."""
    try:
        if ":" in spec:
            a, b = spec.split(":", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(spec)
    except ValueError:
        raise UsageError(f"bad --k value {spec!r}; expected K or A:B") from None
    if not 1 <= lo <= hi <= factorial(n):
        raise UsageError(f"--k range {spec} outside [1, {factorial(n)}]")
    return range(lo, hi + 1)


def cmd_gen(args: argparse.Namespace) -> int:
    n = args.n
    kind = RepKind(args.rep)
    if n < kind.min_degree:
        raise UsageError(f"{kind.value} representation needs --n >= {kind.min_degree}")
    if args.k is None and n > MAX_GEN_DEGREE:
        raise CapacityError(f"full table needs n <= {MAX_GEN_DEGREE}; use --k")
    if n > MAX_ENUM_DEGREE:
        raise CapacityError(f"n = {n} exceeds limit {MAX_ENUM_DEGREE}")
    ks = _parse_k(args.k, n) if args.k is not None else None
    rows = tables.generate(n, kind, ks)
    if args.format == "json":
        sys.stdout.write(tables.to_json(n, kind, rows))
    else:
        sys.stdout.write(tables.to_csv(rows))
    return EXIT_OK


def _format_report(report) -> str:
    lines = [f"n = {report.n}  mode = {report.mode}"]
    for name in sorted(report.checks):
        c = report.checks[name]
        lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {name:<42} {c.elements_tested:>8}")
    for c in report.failures():
        ce = c.counterexample
        lines.append(f"first counterexample for {c.name}: k={ce.rank} {list(ce.one_line)}")
        if ce.partner_one_line is not None:
            lines.append(f"  with k={ce.partner_rank} {list(ce.partner_one_line)}")
        if ce.expected is not None:
            lines.append(f"  expected {ce.expected}")
            lines.append(f"  actual   {ce.actual}")
    lines.append("ALL CHECKS PASSED" if report.passed else "VERIFICATION FAILED")
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    if args.sample is not None:
        if args.seed is None:
            raise UsageError("--sample requires --seed")
        report = run_suite(args.n, "sampled", count=args.sample, seed=args.seed,
                           workers=args.workers)
    else:
        report = run_suite(args.n, "exhaustive", seed=args.seed, workers=args.workers)
    sys.stdout.write(_format_report(report))
    if args.json is not None:
        text = json.dumps(report.to_dict(), indent=2) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            pathlib.Path(args.json).write_text(text)
    return EXIT_OK if report.passed else EXIT_FAIL


CHAR_KINDS = [RepKind.PERMUTATION, RepKind.TRIVIAL, RepKind.SIGN,
              RepKind.STANDARD, RepKind.STANDARD_SIGN]


def cmd_characters(args: argparse.Namespace) -> int:
    n = args.n
    if n > MAX_NORM_DEGREE:
        raise CapacityError(f"character table needs n <= {MAX_NORM_DEGREE}")
    if n < 2:
        raise UsageError("character table needs --n >= 2")
    header = ["cycle_type", "size"] + [k.value for k in CHAR_KINDS] + ["trivial+standard"]
    labels, values, out = [], [], []
    # identity class first
    for shape, size, rep in reversed(conjugacy_classes(n)):
        chi = [character(k, rep) for k in CHAR_KINDS]
        label = "[" + ",".join(map(str, shape)) + "]"
        labels.append(label)
        values.append(chi)
        out.append([label, size] + chi + [chi[1] + chi[3]])
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(out)
    else:
        sys.stdout.write("\t".join(header) + "\n")
        for row in out:
            sys.stdout.write("\t".join(map(str, row)) + "\n")
    if args.plot:
        from .plotting import character_figure

        character_figure(n, labels, [k.value for k in CHAR_KINDS], values,
                         pathlib.Path(args.plot))
    return EXIT_OK


def _dense_block(p):
    n = p.n
    return block_extract(conjugate_direct(p), 2, 2, n - 1, n - 1)


def cmd_bench(args: argparse.Namespace) -> int:
    n = args.n
    if n > MAX_BENCH_DEGREE:
        raise CapacityError(f"bench needs n <= {MAX_BENCH_DEGREE}")
    if n < 2:
        raise UsageError("bench needs --n >= 2")
    if args.reps < 1:
        raise UsageError("--reps must be positive")
    group = elements(n)
    for p in group:
        if standard_matrix(p) != _dense_block(p):
            print(f"closed form and dense conjugate disagree at {p}", file=sys.stderr)
            return EXIT_FAIL
    print(f"# outputs identical for all {len(group)} elements; "
          "timings are wall-clock and vary between runs", file=sys.stderr)
    paths = [("closed_form", standard_matrix), ("dense_conjugate", _dense_block)]
    rows = []
    for rep in range(1, args.reps + 1):
        for name, fn in paths:
            t0 = time.perf_counter()
            for p in group:
                fn(p)
            dt = time.perf_counter() - t0
            rows.append({"n": n, "path": name, "rep": rep, "elements": len(group),
                         "total_s": dt, "per_element_us": 1e6 * dt / len(group)})
    sys.stdout.write("path,rep,elements,total_s,per_element_us\n")
    for r in rows:
        sys.stdout.write(f"{r['path']},{r['rep']},{r['elements']},"
                         f"{r['total_s']:.6f},{r['per_element_us']:.3f}\n")
    if args.plot:
        from .plotting import bench_figure

        bench_figure(rows, pathlib.Path(args.plot))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snrep",
        description="Exact permutation and standard representations of S_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit representation matrices for S_n")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--rep", choices=[k.value for k in RepKind], default="standard")
    g.add_argument("--format", choices=["json", "csv"], default="json")
    g.add_argument("--k", help="rank K or inclusive range A:B (1-based, lexicographic)")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check every identity over S_n")
    v.add_argument("--n", type=int, required=True)
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true",
                      help=f"walk all of S_n (default; n <= {MAX_EXHAUSTIVE_DEGREE})")
    mode.add_argument("--sample", type=int, metavar="COUNT",
                      help="check COUNT seeded random elements and pairs")
    v.add_argument("--seed", type=int)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--json", metavar="PATH", help="also write the JSON report ('-' for stdout)")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("characters", help="character table by conjugacy class")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=["text", "csv"], default="text")
    c.add_argument("--plot", metavar="PATH", help="write a heatmap figure")
    c.set_defaults(func=cmd_characters)

    b = sub.add_parser("bench", help="time closed form against dense conjugation")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--plot", metavar="PATH", help="write a timing figure")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        return args.func(args)
    except (UsageError, CapacityError, DegreeError) as exc:
        print(f"snrep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
