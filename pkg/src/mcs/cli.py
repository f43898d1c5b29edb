"""Command line front end: ``mcs reduce``, ``mcs enum``, ``mcs verify``.

Exit codes: 0 success, 1 "not minimal" from verify, 2 usage or
precondition errors.
"""
from __future__ import annotations

import argparse
import itertools
import sys

from .core import is_subsequence
from .enumgraph import EnumGraph, build_st_subgraph, export_dot
from .enumpaths import count_mcs, enumerate_mcs, split_common_prefix
from .minimality import first_inessential_index
from .reduce2 import NotCommonSupersequenceError, reduce_two
from .reducek import reduce_k


def _fail(msg: str) -> int:
    print("mcs: error: " + msg, file=sys.stderr)
    return 2


def cmd_reduce(args) -> int:
    inputs = args.strings
    s = args.super if args.super is not None else "".join(inputs)
    try:
        if len(inputs) == 2:
            out = reduce_two(s, inputs[0], inputs[1])
        else:
            out = reduce_k(s, inputs)
    except NotCommonSupersequenceError as e:
        return _fail("input %d (%r) is not a subsequence of %r"
                     % (e.which, inputs[e.which - 1], s))
    print(out)
    return 0


def cmd_enum(args) -> int:
    a, b = args.a, args.b
    if args.dot is not None:
        _, x, y, fixed = split_common_prefix(a, b)
        text = export_dot(build_st_subgraph(x, y) if fixed is None else EnumGraph.empty())
        try:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as e:
            return _fail("cannot write %s: %s" % (args.dot, e.strerror))
    if args.count:
        print(count_mcs(a, b))
        return 0
    out = sys.stdout
    for s in itertools.islice(enumerate_mcs(a, b), args.limit):
        out.write(s + "\n")
    return 0


def cmd_verify(args) -> int:
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as e:
            return _fail("cannot read %s: %s" % (args.file, e.strerror))
        if not lines:
            return _fail("%s is empty" % args.file)
        s, inputs = lines[0], lines[1:]
    else:
        if not args.strings:
            return _fail("verify needs a supersequence S")
        s, inputs = args.strings[0], args.strings[1:]
    for k, x in enumerate(inputs, 1):
        if not is_subsequence(x, s):
            print("not a common supersequence: input %d (%r) is missing" % (k, x))
            return 1
    i = first_inessential_index(s, inputs)
    if i is not None:
        print("not minimal: index %d (%r) can be deleted" % (i, s[i - 1]))
        return 1
    print("minimal")
    return 0


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcs", description="Minimal common supersequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="print one minimal common supersequence")
    p.add_argument("--super", metavar="S", help="starting supersequence (default: concatenation)")
    p.add_argument("strings", nargs="+", metavar="STR")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("enum", help="list every minimal common supersequence of two strings")
    p.add_argument("--limit", type=_nonnegative, default=None, metavar="N")
    p.add_argument("--count", action="store_true", help="print only the number of MCS's")
    p.add_argument("--dot", metavar="FILE", help="write the enumeration graph as DOT")
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("verify", help="exit 0 iff S is a minimal common supersequence")
    p.add_argument("--file", metavar="PATH", help="first line S, then one input per line")
    p.add_argument("strings", nargs="*", metavar="STR")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
