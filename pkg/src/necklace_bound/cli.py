"""Command line interface.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import InputError, InvariantError, content_of, format_word, parse_content, parse_word
from .counting import bound_rhs, count_lyndon, count_necklaces, decrement, lyndon_binary, necklaces_binary
from .generation import GenKind, classify, generate
from .mapping import apply_f, decompose, in_equality_set
from .oracle import DEFAULT_CAP
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

MAX_ENUM_N = 64
MAX_VERIFY_N = {"bound": 2000, "injectivity": 16, "equality": 2000, "witnesses": 12, "oracle": DEFAULT_CAP}
MAX_TABLE_N = 2000


def _content(args) -> tuple[int, ...]:
    if args.content is not None:
        if args.n is not None or args.d is not None:
            raise InputError("use either --content or -n/-d, not both")
        return parse_content(args.content)
    if args.n is None or args.d is None:
        raise InputError("give --content or both -n and -d")
    if not 0 <= args.d <= args.n:
        raise InputError(f"need 0 <= d <= n, got n={args.n} d={args.d}")
    return (args.n - args.d, args.d)


def _add_content_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--content", help="comma-separated symbol counts, e.g. 3,2,1")
    p.add_argument("-n", type=int, help="binary shorthand: word length")
    p.add_argument("-d", type=int, help="binary shorthand: number of 1s")


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record))
    else:
        print("\t".join(f"{k}={v}" for k, v in record.items()))


def cmd_count(args) -> int:
    c = _content(args)
    rec = {"content": ",".join(map(str, c)), "N": str(count_necklaces(c)), "L": str(count_lyndon(c))}
    if min(c) >= 1:
        rhs = bound_rhs(c)
        terms = [count_lyndon(decrement(c, i)) for i in range(len(c))]
        rec["rhs"] = str(rhs)
        rec["rhs_terms"] = "+".join(map(str, terms))
        rec["gap"] = str(rhs - int(rec["N"]))
    _emit(rec, args.format)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    c = _content(args)
    n, k = sum(c), len(c)
    if n > args.max_n:
        raise InputError(f"n = {n} exceeds --max-n {args.max_n}")
    kind = GenKind.parse(args.kind)
    out = sys.stdout
    for w in generate(c, kind):
        text = format_word(w, k)
        if args.format == "json":
            rec = {"word": text}
            if kind is GenKind.NECKLACE and n >= 2:
                rec["stable"] = classify(w).value == "stable"
            out.write(json.dumps(rec) + "\n")
        else:
            out.write(text + "\n")
    return EXIT_OK


def cmd_map(args) -> int:
    w = parse_word(args.word, args.k)
    k = args.k or max(max(w) + 1, 2)
    dec = decompose(w, k)
    image = apply_f(w, k)
    rec = {
        "word": format_word(w, k),
        "p": dec.p,
        "j": dec.j,
        "i": dec.i,
        "z": dec.z,
        "x": dec.x,
        "branch": dec.branch,
        "image": format_word(image, k),
        "image_content": ",".join(map(str, content_of(image, k))),
    }
    _emit(rec, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    cap = MAX_VERIFY_N[args.suite]
    if args.max_n is not None and args.max_n > cap:
        raise InputError(f"--max-n {args.max_n} exceeds the cap {cap} for suite {args.suite}")
    report = run_suite(args.suite, args.max_n, args.k)
    if args.format == "json":
        print(json.dumps(report.to_record()))
    else:
        print(report.summary())
        for inst, exp, act in report.failures[:50]:
            print(f"  failure {inst!r}: expected {exp!r}, got {act!r}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_table(args) -> int:
    if args.max_n > MAX_TABLE_N:
        raise InputError(f"--max-n exceeds the cap {MAX_TABLE_N}")
    cols = ["n", "d", "N", "L(n-1,d)", "L(n-1,d-1)", "gap", "equality"]
    if args.format == "tsv":
        print("\t".join(cols))
    for n in range(2, args.max_n + 1):
        for d in range(1, n):
            big_n = necklaces_binary(n, d)
            l1, l0 = lyndon_binary(n - 1, d), lyndon_binary(n - 1, d - 1)
            gap = l1 + l0 - big_n
            row = [n, d, str(big_n), str(l1), str(l0), str(gap), gap == 0]
            if args.format == "json":
                rec = dict(zip(cols, row))
                rec["classified_equality"] = in_equality_set(n, d)
                print(json.dumps(rec))
            else:
                print("\t".join(str(v).lower() if isinstance(v, bool) else str(v) for v in row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="necklace-bound",
        description="Count, enumerate and classify fixed-content necklaces and Lyndon words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="necklace/Lyndon counts and the Pascal-like bound")
    _add_content_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list words in lexicographic order")
    _add_content_args(p)
    p.add_argument("--kind", choices=[g.name.lower() for g in GenKind], default="necklace")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-n", type=int, default=MAX_ENUM_N, help="refuse longer words")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="decompose an unstable necklace and apply f")
    p.add_argument("word")
    p.add_argument("--k", type=int, default=None, help="alphabet size (default: max symbol + 1)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="N, L(n-1,d), L(n-1,d-1) and the gap for every (n, d)")
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
