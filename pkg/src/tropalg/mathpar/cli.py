"""Command-line front end.

Three ways to feed it a script: `mathpar run file`, `mathpar eval "code"`,
or a bare `mathpar` that reads stdin to end of file. Results stream to
stdout one line per printed statement. Script errors go to stderr with a
line:column prefix and exit status 1; unreadable files exit 2.
"""

from __future__ import annotations

import argparse
import sys

from ..semiring import count_ops
from .errors import MathparError
from .interp import RenderOptions, Session, evaluate
from .parser import parse

__all__ = ["run_cli", "main"]


def build_arg_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mathpar",
        description="Run calculator scripts over tropical and classical algebras.",
    )
    p.add_argument(
        "mode",
        nargs="?",
        choices=["run", "eval"],
        help="run a script file or evaluate inline code; omit to read stdin",
    )
    p.add_argument("target", nargs="?", help="script path (run) or code (eval)")
    p.add_argument(
        "--format",
        choices=["plain", "latex"],
        default="plain",
        help="matrix output style",
    )
    p.add_argument(
        "--show-objective",
        action="store_true",
        help="print the objective value after a linear-programming result",
    )
    p.add_argument(
        "--trace-ops",
        action="store_true",
        help="report semiring operation counts on stderr",
    )
    return p


def run_cli(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    if args.mode == "run":
        if args.target is None:
            print("error: run needs a script path", file=sys.stderr)
            return 2
        try:
            with open(args.target, encoding="utf-8") as fh:
                source = fh.read()
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    elif args.mode == "eval":
        if args.target is None:
            print("error: eval needs code to run", file=sys.stderr)
            return 2
        source = args.target
    else:
        if args.target is not None:
            print("error: unexpected argument without a mode", file=sys.stderr)
            return 2
        source = sys.stdin.read()

    options = RenderOptions(fmt=args.format, show_objective=args.show_objective)
    session = Session()

    def emit(line: str):
        print(line, flush=True)

    try:
        with count_ops() as counts:
            stmts = parse(source)
            evaluate(stmts, session, options, emit)
    except MathparError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.trace_ops:
        print(
            f"semiring ops: adds={counts.adds} muls={counts.muls}", file=sys.stderr
        )
    return 0


def main():
    raise SystemExit(run_cli())
