"""Command-line front end: ``schurkit <command> [options]``.

Exit codes: 0 success, 1 invalid mathematical input, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .shapes import (
    Composition,
    SkewShape,
    edge_sequence,
    format_composition,
    parse_composition,
    parse_partition,
    parse_skew,
    partitions,
    ribbon_check,
)
from .symfunc import basis_element, kostka
from .tableaux import (
    NatMatrix,
    SemistandardTableau,
    StripError,
    binary_encoding,
    count_matrices,
    count_ssyt,
    decode_binary,
    decode_integral,
    enumerate_matrices,
    enumerate_ssyt,
    integral_encoding,
    render_tableau,
)
from .verify import SUITES, run_suite

DEFAULT_MAX_DEGREE = 12

# Options whose value may legitimately start with '-'.
_VALUE_FLAGS = {"--window", "--index", "--weight", "--shape", "--mu", "--lambda", "--inner", "--matrix"}


class DomainError(Exception):
    """Well-formed input that is mathematically invalid (exit code 1)."""


def _arg(parse):
    def convert(text):
        try:
            return parse(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    convert.__name__ = parse.__name__
    return convert


def _window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"window must look like 'lo:hi', got {text!r}")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise ValueError(f"empty window {text!r}")
    return lo_i, hi_i


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise ValueError(f"expected a positive integer, got {text!r}")
    return v


def _natural(text: str) -> int:
    v = int(text)
    if v < 0:
        raise ValueError(f"expected a natural number, got {text!r}")
    return v


def _env_max_degree() -> int:
    raw = os.environ.get("SCHURKIT_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_DEGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default text)")
    common.add_argument("--max-degree", type=_arg(_natural), default=argparse.SUPPRESS,
                        help="refuse requests above this degree (default 12, env SCHURKIT_MAX_DEGREE)")

    parser = argparse.ArgumentParser(prog="schurkit", parents=[common],
                                     description="Exact computations with partitions, tableaux and Schur functions.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("expand", parents=[common], help="Schur expansion of m, e, h, p or s indexed by a composition")
    p.add_argument("--kind", choices=("m", "e", "h", "p", "s"), required=True)
    p.add_argument("--index", type=_arg(parse_composition), required=True)

    p = sub.add_parser("kostka", parents=[common], help="Kostka number of a (skew) shape and weight")
    p.add_argument("--shape", type=_arg(parse_skew), required=True, help="e.g. 3,2 or 3,2/1")
    p.add_argument("--weight", type=_arg(parse_composition))
    p.add_argument("--primed", action="store_true", help="use e_alpha instead of h_alpha")
    p.add_argument("--table", action="store_true", help="all partition weights of the shape's size")

    p = sub.add_parser("ssyt", parents=[common], help="list semistandard tableaux of a shape and weight")
    p.add_argument("--shape", type=_arg(parse_skew), required=True)
    p.add_argument("--weight", type=_arg(parse_composition), required=True)
    p.add_argument("--count", action="store_true", help="print only the number")

    p = sub.add_parser("matrices", parents=[common], help="list matrices with given row and column sums")
    p.add_argument("--rows", type=_arg(parse_composition), required=True)
    p.add_argument("--cols", type=_arg(parse_composition), required=True)
    p.add_argument("--binary", action="store_true")
    p.add_argument("--count", action="store_true", help="print only the number")

    p = sub.add_parser("encode", parents=[common], help="matrix encoding of a tableau given as JSON")
    p.add_argument("--tableau", required=True, help="path to tableau JSON, or - for stdin")
    p.add_argument("--mode", choices=("integral", "binary"), default="integral")

    p = sub.add_parser("decode", parents=[common], help="tableau from a matrix encoding and its inner shape")
    p.add_argument("--matrix", required=True, help="rows ';'-separated, entries ','-separated")
    p.add_argument("--inner", type=_arg(parse_partition), required=True)
    p.add_argument("--mode", choices=("integral", "binary"), default="integral")

    p = sub.add_parser("ribbon", parents=[common], help="test whether lambda/mu is a k-ribbon")
    p.add_argument("--mu", type=_arg(parse_partition), required=True)
    p.add_argument("--lambda", dest="lam", type=_arg(parse_partition), required=True)
    p.add_argument("--k", type=_arg(_positive), required=True)

    p = sub.add_parser("edgeseq", parents=[common], help="edge sequence of a partition")
    p.add_argument("--lambda", dest="lam", type=_arg(parse_partition), required=True)
    p.add_argument("--window", type=_arg(_window), help="inclusive coordinates lo:hi")

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-size", type=_arg(_natural))
    p.add_argument("--max-vars", type=_arg(_natural), default=4)
    p.add_argument("--max-deg", type=_arg(_natural), default=5)
    return parser


def _join_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "--window -9:9" as two options; glue such pairs.
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1] != "-":
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def _guard(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise DomainError(f"{what} {size} exceeds --max-degree {limit}")


def _emit(args, text: str, data) -> None:
    if args.out == "json":
        print(json.dumps(data))
    else:
        print(text)


def cmd_expand(args) -> None:
    alpha: Composition = args.index
    if args.kind == "p" and 0 in alpha:
        raise argparse.ArgumentTypeError("power sums take positive parts only")
    _guard(alpha.size, args.max_degree, "degree")
    f = basis_element(args.kind, alpha)
    _emit(args, str(f), f.to_json())


def cmd_kostka(args) -> None:
    shape: SkewShape = args.shape
    _guard(shape.outer.size, args.max_degree, "shape size")
    kind = "e" if args.primed else "h"
    if args.table:
        rows = [(w, kostka(shape.outer, shape.inner, w, primed=args.primed)) for w in partitions(shape.size)]
        text = "\n".join(f"{kind}[{format_composition(w)}] {v}" for w, v in rows)
        _emit(args, text, [{"weight": list(w), "value": v} for w, v in rows])
        return
    if args.weight is None:
        raise argparse.ArgumentTypeError("--weight is required unless --table is given")
    value = kostka(shape.outer, shape.inner, args.weight, primed=args.primed)
    _emit(args, str(value), value)


def cmd_ssyt(args) -> None:
    _guard(args.shape.outer.size, args.max_degree, "shape size")
    if args.count:
        n = count_ssyt(args.shape, args.weight)
        _emit(args, str(n), n)
        return
    tabs = list(enumerate_ssyt(args.shape, args.weight))
    _emit(args, "\n\n".join(render_tableau(t) for t in tabs), [t.to_json() for t in tabs])


def cmd_matrices(args) -> None:
    _guard(args.rows.size, args.max_degree, "total")
    if args.count:
        n = count_matrices(args.rows, args.cols, args.binary)
        _emit(args, str(n), n)
        return
    mats = list(enumerate_matrices(args.rows, args.cols, args.binary))
    texts = [m.to_text() for m in mats]
    _emit(args, "\n".join(texts), texts)


def _load_tableau(path: str) -> SemistandardTableau:
    try:
        raw = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise argparse.ArgumentTypeError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(raw)
        chain, mode = data["chain"], data.get("mode", "col")
    except (ValueError, KeyError, TypeError, AttributeError):
        raise argparse.ArgumentTypeError("tableau JSON must look like {\"chain\": [[...], ...], \"mode\": \"col\"}") from None
    try:
        return SemistandardTableau.from_json({"chain": chain, "mode": mode})
    except StripError:
        raise
    except (ValueError, TypeError) as exc:
        raise DomainError(str(exc)) from None


def cmd_encode(args) -> None:
    t = _load_tableau(args.tableau)
    if args.mode == "binary" and t.mode != "col":
        raise DomainError("the binary encoding needs a column-strict tableau")
    m = integral_encoding(t) if args.mode == "integral" else binary_encoding(t)
    _emit(args, m.to_text(), {"matrix": m.to_text(), "mode": args.mode})


def cmd_decode(args) -> None:
    try:
        m = NatMatrix.parse(args.matrix)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if args.mode == "binary":
        if any(v > 1 for v in m.entries.values()):
            raise DomainError("a binary encoding has entries 0 and 1 only")
        t = decode_binary(m, args.inner)
    else:
        t = decode_integral(m, args.inner)
    print(json.dumps(t.to_json()))


def cmd_ribbon(args) -> None:
    h = ribbon_check(args.mu, args.lam, args.k)
    text = "not a k-ribbon" if h is None else f"height={h}"
    _emit(args, text, {"ribbon": h is not None, "height": h})


def cmd_edgeseq(args) -> None:
    lo, hi = args.window if args.window else (None, None)
    try:
        e = edge_sequence(args.lam, lo, hi)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit(args, e.to_text(), {"offset": e.offset, "bits": e.bits})


def cmd_verify(args) -> None:
    for bound in (args.max_size, args.max_deg):
        if bound is not None:
            _guard(bound, args.max_degree, "bound")
    results = run_suite(args.suite, args.max_size, args.max_vars, args.max_deg)
    if args.out == "json":
        print(json.dumps([
            {"name": r.name, "passed": r.passed, "checked": r.checked, "counterexample": r.counterexample}
            for r in results
        ]))
    else:
        for r in results:
            print(r.line())
    if not all(r.passed for r in results):
        raise SystemExit(1)


COMMANDS = {
    "expand": cmd_expand,
    "kostka": cmd_kostka,
    "ssyt": cmd_ssyt,
    "matrices": cmd_matrices,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "ribbon": cmd_ribbon,
    "edgeseq": cmd_edgeseq,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    args.out = getattr(args, "out", "text")
    args.max_degree = getattr(args, "max_degree", _env_max_degree())
    try:
        COMMANDS[args.command](args)
    except argparse.ArgumentTypeError as exc:
        print(f"schurkit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except StripError as exc:
        print(f"schurkit {args.command}: invalid chain at index {exc.index}: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"schurkit {args.command}: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
