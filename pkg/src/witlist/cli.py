"""Command-line front end: validate, reformat, and summarize JSON documents.

Exit codes: 0 on success, 1 when the input is not a valid document, 2 for
usage or I/O errors.  Results go to stdout, errors to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, TextIO

from .jsondoc import JTy, count_nodes, jty_counts, max_depth
from .jsontext import ParseError, parse, serialize


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="witjson",
        description="Validate, format, and inspect JSON documents whose root must be an object.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("validate", "check that a file parses as a complete document"),
        ("fmt", "parse and re-serialize a document"),
        ("stats", "print node count, depth, and per-kind counts"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", help="input path, or - for stdin")
        cmd.add_argument("--pretty", action="store_true", help="indented output (fmt)")
        cmd.add_argument("--output", metavar="PATH", help="write results here instead of stdout")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def run(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    try:
        text = _read_input(args.file)
    except OSError as exc:
        print("error: cannot read %s: %s" % (args.file, exc), file=sys.stderr)
        return 2

    try:
        doc = parse(text)
    except ParseError as exc:
        print(
            "error: %s at %d:%d: %s" % (exc.kind.value, exc.line, exc.column, exc.message),
            file=sys.stderr,
        )
        return 1

    lines: List[str] = []
    if args.command == "validate":
        lines.append("valid")
    elif args.command == "fmt":
        lines.append(serialize(doc, pretty=args.pretty))
    else:  # stats
        counts = jty_counts(doc)
        lines.append("nodes: %d" % count_nodes(doc))
        lines.append("depth: %d" % max_depth(doc))
        for ty in JTy:
            lines.append("%s: %d" % (ty.value, counts[ty]))

    body = "\n".join(lines) + "\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(body)
        except OSError as exc:
            print("error: cannot write %s: %s" % (args.output, exc), file=sys.stderr)
            return 2
    else:
        sys.stdout.write(body)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
