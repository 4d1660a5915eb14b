"""Command-line front end.

Exit codes: 0 success, 1 not conjugate or not periodic, 2 usage error,
3 a conjugator failed its independent recheck.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import ALGORITHMS, BenchConfig, bench_run, records_csv
from .periodic import classify, parse_class
from .solver import SolverError, algorithm_d, solve, verify_certificate
from .uss import delta_patterns, enumerate_uss, epsilon_patterns, pattern_braid, uss_count
from .words import parse_word, render_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def read_config(path: str) -> dict[str, str]:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are skipped."""
    out = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _word(text: str, n: int):
    try:
        return parse_word(text, n)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_classify(args) -> int:
    print(classify(_word(args.word, args.n)))
    return EXIT_OK


def cmd_solve(args) -> int:
    w = _word(args.word, args.n)
    try:
        target = parse_class(args.target)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not target.periodic:
        raise UsageError("target must be delta^k or epsilon^k")
    found = classify(w)
    if found != target:
        print(f"FAIL: braid is {found}, not {target}")
        return EXIT_FAIL
    cert = solve(w, target)
    print(render_word(cert.conjugator))
    if not verify_certificate(w, cert):
        print("NOT VERIFIED")
        return EXIT_VERIFY
    print("VERIFIED")
    return EXIT_OK


def cmd_conjugate(args) -> int:
    wx, wy = _word(args.wx, args.n), _word(args.wy, args.n)
    res = algorithm_d(wx, wy)
    if not res:
        print(f"FAIL: {res.reason}")
        return EXIT_FAIL
    print(render_word(res.conjugator))
    return EXIT_OK


def cmd_uss_count(args) -> int:
    try:
        count = len(enumerate_uss(args.n, args.family)) if args.n <= 12 else uss_count(args.n, args.family)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(count)
    if args.list:
        pats = delta_patterns(args.n) if args.family == "delta" else epsilon_patterns(args.n)
        for p in pats:
            print(pattern_braid(p))
    return EXIT_OK


BENCH_KEYS = {"n": int, "k": int, "c": int, "samples": int, "seed": int,
              "time_budget_ms": int, "uss_cap": int, "algorithms": str}


def cmd_bench(args) -> int:
    settings: dict[str, object] = {}
    if args.config:
        for key, value in read_config(args.config).items():
            if key not in BENCH_KEYS:
                raise UsageError(f"unknown config key {key!r}")
            settings[key] = value
    for key in BENCH_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            settings[key] = v
    try:
        conv = {k: BENCH_KEYS[k](v) for k, v in settings.items()}
        if "algorithms" in conv:
            conv["algorithms"] = tuple(a.strip() for a in str(conv["algorithms"]).split(",") if a.strip())
        if "n" not in conv:
            raise UsageError("bench needs n (flag or config)")
        cfg = BenchConfig(**conv)
    except (TypeError, ValueError) as e:
        raise UsageError(str(e)) from None
    try:
        records = bench_run(cfg)
    except SolverError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFY
    text = records_csv(records, with_times=not args.no_times)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="periodic-braids", description="Conjugacy of periodic braids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="print non-periodic, delta^k or epsilon^k")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("word", help='letters such as "1 -2 3"')
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("solve", help="conjugator to a delta or epsilon power")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--target", required=True, help="delta^k or epsilon^k")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("conjugate", help="conjugator between two periodic braids")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("wx")
    s.add_argument("wy")
    s.set_defaults(func=cmd_conjugate)

    s = sub.add_parser("uss-count", help="size of the ultra summit set of delta or epsilon")
    s.add_argument("n", type=int)
    s.add_argument("family", choices=["delta", "epsilon"])
    s.add_argument("--list", action="store_true", help="also print every member")
    s.set_defaults(func=cmd_uss_count)

    s = sub.add_parser("bench", help="timing harness, CSV on stdout")
    s.add_argument("--config", help="key=value file; flags override it")
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--c", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--time-budget-ms", dest="time_budget_ms", type=int)
    s.add_argument("--uss-cap", dest="uss_cap", type=int)
    s.add_argument("--algorithms", help=f"comma-separated subset of {','.join(ALGORITHMS)}")
    s.add_argument("--no-times", action="store_true", help="print '-' instead of times (byte-stable output)")
    s.add_argument("--output", help="write CSV here instead of stdout")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except OSError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
