"""Batch command-line surface: walk counts, Hilbert functions, checks.

Four subcommands, all non-interactive:

    paths     one walk count, or a whole table as CSV or JSON
    hilbert   Hilbert function of a chosen quotient, as a JSON record
    verify    one named invariant suite, as JSON lines, exit 1 on failure
    question  the power-quotient comparison report, always exit 0

Exit codes: 0 success, 1 verification failure, 2 usage error. The
environment variables HILBPATHS_PRIMES (comma-separated) and
HILBPATHS_THREADS supply defaults for the matching flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional, Sequence

from .hilbert import (
    canonical_ideal,
    check_bounds,
    exterior_power_pair,
    hilbert_function,
    question_report,
    random_exterior_pair,
    squarefree_power_squares,
    squarefree_two_squares_ideal,
)
from .linalg import DEFAULT_PRIMES, PrimeField
from .paths import count_paths
from .verify import SUITE_NAMES, run_suite

__all__ = ["main"]


def _parse_primes(arg: Optional[str]) -> tuple[int, ...]:
    """Primes from the flag, else the environment, else the defaults."""
    raw = arg if arg is not None else os.environ.get("HILBPATHS_PRIMES", "").strip()
    if not raw:
        return DEFAULT_PRIMES
    out = []
    for piece in raw.split(","):
        piece = piece.strip()
        if piece:
            out.append(int(piece))
    if not out:
        return DEFAULT_PRIMES
    for p in out:
        PrimeField(p)  # validates primality and size
    return tuple(out)


def _parse_int_list(raw: str, what: str, expect: Optional[int] = None) -> tuple[int, ...]:
    try:
        values = tuple(int(piece.strip()) for piece in raw.split(",") if piece.strip())
    except ValueError as exc:
        raise ValueError(f"{what} must be a comma-separated integer list") from exc
    if expect is not None and len(values) != expect:
        raise ValueError(f"{what} needs exactly {expect} values, got {len(values)}")
    return values


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


# ---------------------------------------------------------------------------
# paths


def _table_rows(table: str, max_n: int) -> tuple[list[int], list[int]]:
    start = 3 if table == "odd" else 4
    ns = list(range(start, max_n + 1, 2))
    s_max = (max_n + 1) // 2
    return ns, list(range(s_max + 1))


def cmd_paths(args: argparse.Namespace) -> int:
    if args.table is not None:
        if args.n is not None or args.s is not None:
            raise ValueError("give either positional n s or --table, not both")
        max_n = args.max_n if args.max_n is not None else (19 if args.table == "odd" else 20)
        if max_n < 0:
            raise ValueError("--max-n must be nonnegative")
        ns, cols = _table_rows(args.table, max_n)
        if args.format == "json":
            _emit(
                {
                    "table": args.table,
                    "max_n": max_n,
                    "columns": cols,
                    "rows": [
                        {"n": n, "values": [count_paths(n, s) for s in cols]} for n in ns
                    ],
                }
            )
        else:
            print("n," + ",".join(str(s) for s in cols))
            for n in ns:
                print(f"{n}," + ",".join(str(count_paths(n, s)) for s in cols))
        return 0
    if args.n is None or args.s is None:
        raise ValueError("need both n and s, or --table odd|even")
    value = count_paths(args.n, args.s)
    if args.format == "json":
        _emit({"n": args.n, "s": args.s, "value": value})
    else:
        print(value)
    return 0


# ---------------------------------------------------------------------------
# hilbert


def _build_spec(args: argparse.Namespace):
    algebra = args.algebra
    gens = args.gens
    if gens is None:
        gens = "canonical" if algebra == "ext" else "random"
    powers = _parse_int_list(args.powers, "--powers", expect=2) if args.powers else None
    if powers and (powers[0] < 1 or powers[1] < 1):
        raise ValueError("--powers values must be >= 1")
    alphas = _parse_int_list(args.alphas, "--alphas") if args.alphas else None

    if algebra == "sqfree":
        if gens == "canonical":
            raise ValueError("the squarefree quotient has no canonical generator mode")
        if alphas is not None:
            raise ValueError("--alphas only applies to the even canonical exterior pair")
        if powers:
            return squarefree_power_squares(args.n, powers[0], powers[1], seed=args.seed)
        return squarefree_two_squares_ideal(args.n, seed=args.seed)

    if gens == "canonical":
        if powers:
            raise ValueError("--powers requires --gens random")
        if alphas is not None and args.n % 2 == 1:
            raise ValueError("--alphas only applies to the even canonical pair")
        return canonical_ideal(args.n, alphas=alphas)
    if alphas is not None:
        raise ValueError("--alphas only applies to the even canonical pair")
    if powers:
        return exterior_power_pair(args.n, powers[0], powers[1], seed=args.seed)
    return random_exterior_pair(args.n, seed=args.seed)


def cmd_hilbert(args: argparse.Namespace) -> int:
    primes = _parse_primes(args.prime)
    spec = _build_spec(args)
    started = time.perf_counter()
    hf = hilbert_function(
        spec, primes=primes, allow_large=args.allow_large, threads=args.threads
    )
    elapsed = time.perf_counter() - started
    record = hf.as_dict()
    record["command"] = ["hilbert"] + (args.raw_argv or [])
    record["series"] = record.pop("dims")
    if hf.gen_degrees == (2, 2):
        bounds = check_bounds(hf)
        record["bounds"] = {
            "lower": list(bounds.lower),
            "upper": list(bounds.upper),
            "ok_by_degree": [s not in bounds.failures for s in range(hf.n + 1)],
        }
        record["bounds_ok"] = bounds.ok
    else:
        record["bounds"] = None
        record["bounds_ok"] = None
    record["wall_time_s"] = round(elapsed, 3)
    _emit(record)
    if args.strict and not hf.agreed:
        print(
            f"strict mode: primes disagree in degrees {list(hf.disagreement_degrees)}",
            file=sys.stderr,
        )
        return 1
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace) -> int:
    primes = _parse_primes(args.prime)
    total = 0
    failed = 0
    for record in run_suite(
        args.suite,
        max_n=args.max_n,
        primes=primes,
        seed=args.seed,
        allow_large=args.allow_large,
    ):
        total += 1
        if not record.passed:
            failed += 1
        print(json.dumps(record.as_dict()), flush=True)
    print(json.dumps({"suite": args.suite, "checks": total, "failed": failed}))
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# question


def cmd_question(args: argparse.Namespace) -> int:
    primes = _parse_primes(args.prime)
    report = question_report(
        args.n,
        args.d1,
        args.d2,
        seed=args.seed,
        primes=primes,
        allow_large=args.allow_large,
        threads=args.threads,
    )
    record = report.as_dict()
    record["command"] = ["question"] + (args.raw_argv or [])
    _emit(record)
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbpaths",
        description="Exact walk counts and Hilbert functions of quadratic quotients.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_paths = sub.add_parser("paths", help="confined walk counts a(n, s)")
    p_paths.add_argument("n", nargs="?", type=int, default=None)
    p_paths.add_argument("s", nargs="?", type=int, default=None)
    p_paths.add_argument("--table", choices=("odd", "even"), default=None)
    p_paths.add_argument("--max-n", dest="max_n", type=int, default=None)
    p_paths.add_argument("--format", choices=("csv", "json"), default="csv")
    p_paths.set_defaults(func=cmd_paths)

    p_hilb = sub.add_parser("hilbert", help="Hilbert function of a quotient")
    p_hilb.add_argument("--algebra", choices=("ext", "sqfree"), required=True)
    p_hilb.add_argument("--n", type=int, required=True)
    p_hilb.add_argument("--gens", choices=("canonical", "random"), default=None)
    p_hilb.add_argument("--alphas", default=None, help="comma list for the even canonical pair")
    p_hilb.add_argument("--powers", default=None, help="d1,d2 exponents (random gens only)")
    p_hilb.add_argument("--prime", default=None, help="comma list of primes")
    p_hilb.add_argument("--seed", type=int, default=0)
    p_hilb.add_argument("--strict", action="store_true")
    p_hilb.add_argument("--allow-large", dest="allow_large", action="store_true")
    p_hilb.add_argument("--threads", type=int, default=None)
    p_hilb.set_defaults(func=cmd_hilbert)

    p_ver = sub.add_parser("verify", help="run an invariant suite")
    p_ver.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p_ver.add_argument("--max-n", dest="max_n", type=int, default=None)
    p_ver.add_argument("--prime", default=None)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--allow-large", dest="allow_large", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_q = sub.add_parser("question", help="compare the two power-quotient families")
    p_q.add_argument("--n", type=int, required=True)
    p_q.add_argument("--d1", type=int, required=True)
    p_q.add_argument("--d2", type=int, required=True)
    p_q.add_argument("--seed", type=int, default=0)
    p_q.add_argument("--prime", default=None)
    p_q.add_argument("--allow-large", dest="allow_large", action="store_true")
    p_q.add_argument("--threads", type=int, default=None)
    p_q.set_defaults(func=cmd_question)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit code instead of raising."""
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    args.raw_argv = argv[1:] if argv else []
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
