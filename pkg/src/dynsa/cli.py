"""Command-line driver.

Exit codes: 0 success, 1 usage error, 2 data error (bad script, bad file,
out-of-range argument), 3 internal guard tripped or self-check failure.
"""

from __future__ import annotations

import argparse
import sys

from .bench import BenchConfig, run_bench, write_csv
from .errors import DynSAError, InvariantViolation
from .index import DynamicSuffixArray
from .lce import BACKENDS, DEFAULT_SEED
from .script import ScriptError, execute, parse_script
from .selfcheck import self_check

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str, strip: bool) -> bytes:
    with open(path, "rb") as fh:
        data = fh.read()
    if strip:
        data = data.rstrip(b"\r\n")
    if not data:
        raise DynSAError(f"{path}: text is empty")
    return data


def _int_list(value: str) -> list[int]:
    try:
        return [int(v) for v in value.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dynsa", description="Dynamic suffix array driver")
    p.add_argument("--backend", choices=sorted(BACKENDS), default=None, help="fingerprint kernel")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="replay an operation script against a text file")
    run.add_argument("text", help="raw byte file")
    run.add_argument("script", help="operation script ('-' for stdin)")
    run.add_argument("--k", type=int, default=None, help="trade-off parameter (default ceil(sqrt(n)))")
    run.add_argument("--seed", type=int, default=DEFAULT_SEED)
    run.add_argument("--strip-trailing-newline", action="store_true")

    bench = sub.add_parser("bench", help="run a benchmark grid and write CSV")
    bench.add_argument("--n", type=_int_list, default=[1024], help="text length(s), comma-separated")
    bench.add_argument("--k", type=_int_list, default=None, help="k value(s), comma-separated")
    bench.add_argument("--queries", type=int, default=200)
    bench.add_argument("--updates", type=int, default=200)
    bench.add_argument("--alphabet", type=int, default=4)
    bench.add_argument("--seed", type=int, default=DEFAULT_SEED)
    bench.add_argument("--csv", default="-", help="output path ('-' for stdout)")

    check = sub.add_parser("selfcheck", help="compare against the brute-force oracle")
    check.add_argument("text", help="raw byte file")
    check.add_argument("--k", type=int, default=None)
    check.add_argument("--trials", type=int, default=100)
    check.add_argument("--seed", type=int, default=DEFAULT_SEED)
    check.add_argument("--strip-trailing-newline", action="store_true")
    check.add_argument("--debug-flip-sentinel", action="store_true", help=argparse.SUPPRESS)
    return p


def _cmd_run(args, out) -> int:
    data = _read_text(args.text, args.strip_trailing_newline)
    if args.script == "-":
        commands = parse_script(sys.stdin)
    else:
        with open(args.script, encoding="latin-1") as fh:
            commands = parse_script(fh)
    dsa = DynamicSuffixArray(data, k=args.k, seed=args.seed, backend=args.backend)
    for line in execute(dsa, commands):
        print(line, file=out)
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    rows = []
    for n in args.n:
        for k in args.k or [None]:
            if k is not None and k > n:
                continue
            cfg = BenchConfig(
                n=n,
                k=k,
                query_count=args.queries,
                update_count=args.updates,
                alphabet_size=args.alphabet,
                seed=args.seed,
                output_path=args.csv,
                backend=args.backend,
            )
            try:
                cfg.validate()
            except ValueError as exc:
                raise DynSAError(str(exc)) from exc
            rows.extend(run_bench(cfg))
    if args.csv == "-":
        write_csv(rows, out)
    else:
        with open(args.csv, "w", newline="") as fh:
            write_csv(rows, fh)
    return EXIT_OK


def _cmd_selfcheck(args, out) -> int:
    data = _read_text(args.text, args.strip_trailing_newline)
    bad = self_check(
        data,
        k=args.k,
        trials=args.trials,
        seed=args.seed,
        flip_sentinel=args.debug_flip_sentinel,
        backend=args.backend,
    )
    if bad is None:
        print(f"PASS selfcheck: n={len(data)} trials={args.trials}", file=out)
        return EXIT_OK
    print(f"FAIL selfcheck: {bad}", file=out)
    return EXIT_INTERNAL


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handler = {"run": _cmd_run, "bench": _cmd_bench, "selfcheck": _cmd_selfcheck}[args.command]
    try:
        return handler(args, out)
    except InvariantViolation as exc:
        print(f"dynsa: internal guard tripped: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DynSAError, OSError, ValueError) as exc:
        print(f"dynsa: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
