"""Command-line entry point.

Exit status: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
import time

from .commands import DOCUMENT_COMMANDS, FLAG_COMMANDS
from .document import ParseError, parse_input


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eghkit", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    doc_help = {
        "hilbert": "Hilbert function table of the ideal",
        "lpp": "lex-plus-powers ideal with the same Hilbert function",
        "egh": "per-degree growth check against the lex-plus-powers bound",
        "liaison": "link a monomial ideal through the pure-power complete intersection",
        "slice": "rebuild the ideal slice by slice along the last variable",
    }
    for name, text in doc_help.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input", help="input document, or - for stdin")
        p.add_argument("--max-degree", type=int)
        p.add_argument("--order", choices=("lex", "degrevlex"), default="degrevlex")
        p.add_argument("--budget", type=int, help="largest degree slice to enumerate")

    p = sub.add_parser("growth", parents=[common], help="growth bounds for H(S/I, d+1) given H(S/I, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", default="")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="randomized growth-bound campaign")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", required=True)
    p.add_argument("--p", type=int, default=101)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--order", choices=("lex", "degrevlex"), default="degrevlex")

    p = sub.add_parser("search", parents=[common], help="exhaustive shadow-minimality search")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--a-max", type=int, default=3)
    p.add_argument("--d-max", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if opts.command in DOCUMENT_COMMANDS:
            doc = parse_input(_read(opts.input))
            report = DOCUMENT_COMMANDS[opts.command](doc, opts)
        else:
            report = FLAG_COMMANDS[opts.command](opts)
    except ParseError as exc:
        print(f"{getattr(opts, 'input', '<input>')}:{exc.line}:{exc.column}: {exc.message}"
              + (f" (expected {' or '.join(exc.expected)})" if exc.expected else ""), file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.render(opts.format))
    if opts.timing:
        print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return 1 if report.violations else 0


if __name__ == "__main__":
    sys.exit(main())
