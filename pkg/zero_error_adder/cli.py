"""
Command-line interface.

Subcommands:
  bound     theorem1 | curve | sumsw | rsigma | weldon
  verify    pair files (two codebooks, or one file split by '---') or --system files
  analyze   vcdim | sps | shift on a codebook file
  search    best zero-error pairs of length n
  validate  lemma-sw | shattering randomized checks
  construct zero-error system from a pair and a coordinate set

Exit codes: 0 success or verified, 1 verified false, 2 usage or input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

from .bounds import r_sigma, sumsw_bound, theorem1_bound, bound_curve, shannon_sum_bound
from .codebook import format_quadruple, is_zero_error_pair, is_zero_error_system, max_k_shattered, sum_rate
from .errors import AdderBoundsError, LengthMismatchError
from .formats import (
    format_construction_report, format_family, format_lemma_report, format_shattering_report,
    format_search_result, format_system_verdict, parse_codebook, parse_family,
    parse_pair, parse_systems, write_curve_csv,
)
from .pipeline import build_system, exhaustive_max_pair, proposition1_bound, weldon_bound
from .schema import Codebook, CoordSet, SoftSpsParams
from .sps import shift_to_monotone, soft_sps_bound
from .validator import check_shattering_trend, validate_lemma_sw

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_pair(files: List[str]) -> Tuple[Codebook, Codebook]:
    if len(files) == 1:
        return parse_pair(_read(files[0]))
    if len(files) == 2:
        return parse_codebook(_read(files[0])), parse_codebook(_read(files[1]))
    raise AdderBoundsError(f"expected one or two codebook files, got {len(files)}")


def _parse_floats(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise AdderBoundsError(f"invalid number list '{text}'")


def _parse_ints(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise AdderBoundsError(f"invalid integer list '{text}'")


# ============================================================
# SUBCOMMANDS
# ============================================================

def cmd_bound(args) -> int:
    if args.which == "theorem1":
        result = theorem1_bound(args.r1)
        print(f"R1: {args.r1:.6f}")
        print(f"R2 <: {result.value:.6f}")
        print(f"shannon: {shannon_sum_bound(args.r1):.6f}")
        print(f"alpha*: {result.arg_alpha:.6f}")
        print(f"eta*: {result.arg_eta:.6f}")
    elif args.which == "curve":
        rows = bound_curve(args.r1_min, args.r1_max, args.steps)
        if args.out:
            with open(args.out, "w", newline="") as handle:
                write_curve_csv(rows, handle)
            print(f"wrote {len(rows)} rows to {args.out}")
        else:
            write_curve_csv(rows, sys.stdout)
    elif args.which == "sumsw":
        result = sumsw_bound(args.r0)
        print(f"sumsw: {result.value:.6f}")
        print(f"eta*: {result.arg_eta:.6f}")
    elif args.which == "rsigma":
        result = r_sigma(args.r0, args.r1)
        print(f"rsigma: {result.value:.6f}")
        print(f"eta*: {result.arg_eta:.6f}")
    elif args.which == "weldon":
        print(f"weldon (systematic C1): {weldon_bound(args.r1):.6f}")
        print(f"proposition1: {proposition1_bound(args.r1):.6f}")
        print(f"shannon: {shannon_sum_bound(args.r1):.6f}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.system:
        status = EXIT_OK
        index = 0
        for path in args.files:
            for v in parse_systems(_read(path)):
                index += 1
                verdict = is_zero_error_system(v)
                print(f"system {index}: {format_system_verdict(verdict, v.n)}")
                if not verdict.is_zero_error_system:
                    status = EXIT_FALSE
        return status

    c1, c2 = _load_pair(args.files)
    if c1.n != c2.n:
        raise LengthMismatchError(f"codebooks have lengths {c1.n} and {c2.n}")
    verdict = is_zero_error_pair(c1, c2)
    if verdict.is_zero_error:
        print("ZERO-ERROR")
    else:
        print(f"COLLISION {format_quadruple(verdict.witness, c1.n)}")
    if c1.n > 0:
        print(f"sum-rate = {sum_rate(c1, c2):.5f}")
    return EXIT_OK if verdict.is_zero_error else EXIT_FALSE


def cmd_analyze(args) -> int:
    text = _read(args.file)
    if args.which == "vcdim":
        c = parse_codebook(text)
        result = max_k_shattered(c, args.k)
        print(f"k: {args.k}")
        print(f"max shattered size: {result.size}")
        print(f"witness: {result.witness.label() if result.witness else 'none'}")
        return EXIT_OK

    if args.which == "sps":
        c = parse_codebook(text)
        params = SoftSpsParams(n=c.n, d=args.d, k=args.k)
        result = soft_sps_bound(params)
        shattered = max_k_shattered(c, args.k)
        applies = shattered.size < args.d
        # The bound's first sum starts at t = 1, so the empty set is allowed on top
        holds = c.size <= result.bound + 1
        print(f"t*: {result.t_star}")
        print(f"bound: {result.bound} ({float(result.bound):.6f})")
        print(f"size: {c.size}")
        print(f"max {args.k}-shattered size: {shattered.size}")
        print(f"applies: {'yes' if applies else 'no'}")
        print("PASS" if holds else "FAIL")
        return EXIT_OK if holds or not applies else EXIT_FALSE

    family = shift_to_monotone(parse_family(text))
    out = format_family(family)
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_search(args) -> int:
    result = exhaustive_max_pair(args.n, time_budget=args.time_budget, canonical=not args.all)
    sys.stdout.write(format_search_result(result))
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.which == "shattering":
        ns = _parse_ints(args.n)
        report = check_shattering_trend(ns, args.rate, args.epsilon, seed=args.seed)
        sys.stdout.write(format_shattering_report(report))
        return EXIT_OK if report.is_valid else EXIT_FALSE
    report = validate_lemma_sw(args.trials, _parse_floats(args.r0), seed=args.seed)
    sys.stdout.write(format_lemma_report(report))
    return EXIT_OK if report.is_valid else EXIT_FALSE


def cmd_construct(args) -> int:
    c1, c2 = _load_pair(args.files)
    s = CoordSet.parse(args.s, c1.n)
    report = build_system(c1, c2, s)
    sys.stdout.write(format_construction_report(report))
    return EXIT_OK if report.verdict.is_zero_error_system else EXIT_FALSE


# ============================================================
# PARSER
# ============================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zero_error_adder",
        description="Zero-error binary adder channel: outer bounds and codebook tools",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py bound theorem1 --r1 1.0
  python main.py bound curve --r1-min 0.9 --r1-max 1.0 --steps 100 --out curve.csv
  python main.py verify c1.txt c2.txt
  python main.py analyze vcdim ball.txt --k 1
  python main.py search --n 2
  python main.py validate lemma-sw --trials 10000 --seed 7
  python main.py validate shattering --n 12,16,20 --rate 0.3
  python main.py construct --s 1 c1.txt c2.txt
        """,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="Evaluate outer bounds")
    bound_sub = bound.add_subparsers(dest="which", required=True)
    p = bound_sub.add_parser("theorem1", help="Outer bound on R2 for a given R1")
    p.add_argument("--r1", type=float, required=True)
    p = bound_sub.add_parser("curve", help="CSV of the bound against 3/2 - R1")
    p.add_argument("--r1-min", type=float, default=0.9)
    p.add_argument("--r1-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--out", type=str, help="CSV path (stdout if omitted)")
    p = bound_sub.add_parser("sumsw", help="Common-message sum capacity")
    p.add_argument("--r0", type=float, required=True)
    p = bound_sub.add_parser("rsigma", help="Common-message sum-rate bound")
    p.add_argument("--r0", type=float, required=True)
    p.add_argument("--r1", type=float, required=True)
    p = bound_sub.add_parser("weldon", help="Weldon and shattering-based bounds on R2")
    p.add_argument("--r1", type=float, required=True)
    bound.set_defaults(func=cmd_bound)

    verify = sub.add_parser("verify", help="Check zero-error pairs or systems")
    verify.add_argument("files", nargs="+")
    verify.add_argument("--system", action="store_true", help="Files are system files")
    verify.set_defaults(func=cmd_verify)

    analyze = sub.add_parser("analyze", help="Shattering analysis of a codebook")
    analyze_sub = analyze.add_subparsers(dest="which", required=True)
    p = analyze_sub.add_parser("vcdim", help="Largest k-shattered coordinate set")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=1)
    p = analyze_sub.add_parser("sps", help="Soft Sauer-Perles-Shelah bound")
    p.add_argument("file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p = analyze_sub.add_parser("shift", help="Shift to a monotone family")
    p.add_argument("file")
    p.add_argument("--out", type=str, help="Output path (stdout if omitted)")
    analyze.set_defaults(func=cmd_analyze)

    search = sub.add_parser("search", help="Best zero-error pairs of length n")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--time-budget", type=float, help="Seconds; required for n > 4")
    search.add_argument("--all", action="store_true", help="Keep symmetric duplicates among witnesses")
    search.set_defaults(func=cmd_search)

    validate = sub.add_parser("validate", help="Randomized checks")
    validate_sub = validate.add_subparsers(dest="which", required=True)
    p = validate_sub.add_parser("lemma-sw", help="Sum-rate bound against sampled distributions")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--r0", type=str, default="0,0.1,0.5", help="Comma-separated r0 values")
    p = validate_sub.add_parser("shattering", help="VC-dimension of random codebooks above a rate")
    p.add_argument("--n", type=str, default="12,14,16,18,20", help="Comma-separated lengths")
    p.add_argument("--rate", type=float, default=0.3)
    p.add_argument("--epsilon", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    validate.set_defaults(func=cmd_validate)

    construct = sub.add_parser("construct", help="Zero-error system from a pair")
    construct.add_argument("files", nargs="+")
    construct.add_argument("--s", type=str, required=True, help="Coordinate set, e.g. 1,3")
    construct.set_defaults(func=cmd_construct)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logger.debug("command: %s", " ".join(argv if argv is not None else sys.argv[1:]))

    try:
        return args.func(args)
    except ValidationError as e:
        print("error: " + "; ".join(err["msg"] for err in e.errors()), file=sys.stderr)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_ERROR
