"""Command-line interface.

Exit codes: 0 success, 2 invalid knot parameters (or bad usage), 3 unreadable
or inadmissible matrix file, 4 a sweep found a mismatch.
"""
from __future__ import annotations

import argparse
import math
import sys
from typing import List, Optional, Sequence, TextIO

from .errors import BadMatrixFile, InvalidKnot, NearSingular, NotAdmissible
from .knots import (
    Knot,
    alexander,
    circle_samples,
    connected_sum,
    knot_from_pretzel,
    load_knot,
    tristram_levine,
)
from .pretzel import classify
from .report import dumps, knot_report, pretzel_report, tlsig_table
from .sweep import CHECKS, DEFAULT_GRIDS, Grid, grid_knots, parse_range, run_sweep

EXIT_OK = 0
EXIT_INVALID_KNOT = 2
EXIT_BAD_MATRIX = 3
EXIT_MISMATCH = 4

# options whose values may start with "-" (e.g. --odd-range -9..9)
_RANGE_OPTIONS = ("--odd-range", "--even-range")


class UsageError(Exception):
    pass


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad twist list {text!r}") from None


def parse_spec(spec: str) -> Knot:
    """``pretzel:a,b,c`` or ``file:PATH``."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise UsageError(f"knot spec must be pretzel:a,b,... or file:PATH, got {spec!r}")
    if kind == "pretzel":
        return knot_from_pretzel(_ints(rest))
    if kind == "file":
        return load_knot(rest)
    raise UsageError(f"unknown knot spec kind {kind!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittknots",
        description="Rational Witt classes and classical invariants of knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pretzel", help="invariants of a pretzel knot")
    p.add_argument("twists", nargs="+", type=int, metavar="p")
    p.add_argument("--json", action="store_true")
    p.add_argument("--alexander", action="store_true", help="include the Alexander polynomial")

    s = sub.add_parser("seifert", help="invariants of a knot from a Seifert matrix file")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--alexander", action="store_true")

    c = sub.add_parser("sum", help="connected sum of knots given as specs")
    c.add_argument("specs", nargs="+", metavar="SPEC", help="pretzel:a,b,c or file:PATH")
    c.add_argument("--json", action="store_true")
    c.add_argument("--alexander", action="store_true")

    w = sub.add_parser("sweep", help="check a grid of pretzel knots")
    w.add_argument("--category", choices=("I", "II", "III"))
    w.add_argument("--n", type=int)
    w.add_argument("--odd-range", default="-9..9")
    w.add_argument("--even-range", default="-8..8")
    w.add_argument("--check", choices=CHECKS, default=CHECKS[0])
    w.add_argument("--seed", type=int, default=0, help="seed for random stabilizations")

    t = sub.add_parser("tlsig", help="sampled Tristram-Levine signatures")
    t.add_argument("spec", metavar="SPEC")
    t.add_argument("--samples", type=int, default=16)
    t.add_argument("--plot", metavar="FILE", help="also write a figure to FILE")
    return parser


def _join_range_values(argv: Sequence[str]) -> List[str]:
    out: List[str] = []
    it = iter(argv)
    for arg in it:
        if arg in _RANGE_OPTIONS:
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def _emit_report(report, as_json: bool, out: TextIO) -> None:
    out.write((dumps(report) if as_json else report.to_text()) + "\n")


def _cmd_pretzel(args, out):
    K = classify(args.twists)
    _emit_report(pretzel_report(K, with_alexander=args.alexander), args.json, out)
    return EXIT_OK


def _cmd_seifert(args, out):
    K = load_knot(args.file)
    _emit_report(knot_report(K, with_alexander=args.alexander), args.json, out)
    return EXIT_OK


def _cmd_sum(args, out):
    knots = [parse_spec(s) for s in args.specs]
    total = knots[0]
    for K in knots[1:]:
        total = connected_sum(total, K)
    _emit_report(knot_report(total, with_alexander=args.alexander), args.json, out)
    return EXIT_OK


def _selected_grids(args) -> List[Grid]:
    odd = parse_range(args.odd_range)
    even = parse_range(args.even_range)
    if args.category is None and args.n is None:
        return [Grid(g.category, g.n, odd, even) for g in DEFAULT_GRIDS]
    if args.category is None or args.n is None:
        chosen = [
            g for g in DEFAULT_GRIDS
            if (args.category is None or g.category == args.category)
            and (args.n is None or g.n == args.n)
        ]
        if not chosen:
            raise UsageError("no default grid matches the given --category/--n")
        return [Grid(g.category, g.n, odd, even) for g in chosen]
    return [Grid(args.category, args.n, odd, even)]


def _cmd_sweep(args, out):
    try:
        grids = _selected_grids(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = EXIT_OK
    for g in grids:
        result = run_sweep(grid_knots(g), args.check, seed=args.seed)
        line = f"{args.check}\tcategory {g.category}\tn={g.n}\tchecked {result.checked}"
        if result.skipped:
            line += f"\tno rule {result.skipped}"
        line += f"\tmismatches {len(result.mismatches)}"
        out.write(line + "\n")
        for m in result.mismatches:
            out.write(f"MISMATCH\t{m}\n")
        if result.mismatches:
            status = EXIT_MISMATCH
    return status


def _cmd_tlsig(args, out):
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    K = parse_spec(args.spec)
    samples = []
    for k, w in enumerate(circle_samples(args.samples), start=1):
        theta = 2 * math.pi * k / (args.samples + 1)
        try:
            samples.append((theta, tristram_levine(K, w)))
        except NearSingular:
            samples.append((theta, None))
    out.write(f"# {K.name}\n")
    out.write("\n".join(tlsig_table(samples)) + "\n")
    if args.plot:
        from .plots import plot_tristram_levine

        plot_tristram_levine(samples, alexander(K), args.plot, title=K.name)
        out.write(f"# figure written to {args.plot}\n")
    return EXIT_OK


_COMMANDS = {
    "pretzel": _cmd_pretzel,
    "seifert": _cmd_seifert,
    "sum": _cmd_sum,
    "sweep": _cmd_sweep,
    "tlsig": _cmd_tlsig,
}


def execute(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_range_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except InvalidKnot as exc:
        err.write(f"invalid knot: {exc}\n")
        return EXIT_INVALID_KNOT
    except (BadMatrixFile, NotAdmissible) as exc:
        err.write(f"bad matrix file: {exc}\n")
        return EXIT_BAD_MATRIX
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_INVALID_KNOT


def main() -> None:
    sys.exit(execute())


if __name__ == "__main__":
    main()
