"""
Command line front end.

    simpleslice invariants   --knot NAME --d D
    simpleslice decide-simple --manifold CP2 --class 3 --knot "T(-2,5)"
    simpleslice decide-stable --manifold CP2 --class 9 --knot "T(-2,5)" [--genus G]
    simpleslice sn           --manifold CP2 --class 11 --knot "T(-2,5)"
    simpleslice genus-bound  --manifold CP2 --class 11 --knot "T(-2,5)"
    simpleslice batch        --knots FILE --manifold CP2 --class 1 --class 2

Exit codes: 0 success (Yes for the decide commands), 1 No, 2 Inconclusive,
3 any error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import form as _form
from .corpus import BadRecord, load_knot_table
from .errors import SliceEngineError
from .knot import DEFAULT_MAX_BITS, SeifertMatrix
from .report import dumps, invariants_report, query_report, render_table

EXIT_YES, EXIT_NO, EXIT_INCONCLUSIVE, EXIT_ERROR = 0, 1, 2, 3
_ANSWER_EXIT = {"Yes": EXIT_YES, "No": EXIT_NO, "Inconclusive": EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as Inconclusive
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _default_max_bits() -> int:
    env = os.environ.get("SLICE_ENGINE_MAX_BITS")
    if env is None:
        return DEFAULT_MAX_BITS
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"SLICE_ENGINE_MAX_BITS must be an integer, got {env!r}") from None


def parse_class(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
    except ValueError:
        raise UsageError(f"class must be comma-separated integers, got {text!r}") from None


def parse_manifold(text: str):
    """Return ``(form, echo)`` from a preset name or a JSON descriptor."""
    text = text.strip()
    if text.startswith("{"):
        try:
            desc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed manifold JSON: {exc}") from None
    else:
        desc = text
    return _form.from_descriptor(desc), desc


def resolve_knot(spec: str, knots_file: str | None) -> tuple[str, SeifertMatrix]:
    spec = spec.strip()
    if spec.startswith("["):
        try:
            rows = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed inline Seifert matrix: {exc}") from None
        return "inline", SeifertMatrix([[int(v) for v in r] for r in rows])
    for rec in load_knot_table(knots_file, strict=False):
        if rec.name == spec:
            if isinstance(rec, BadRecord):
                raise UsageError(f"knot {spec!r} is invalid: {rec.error}")
            return rec.name, rec.seifert_matrix
    raise UsageError(f"no knot named {spec!r} in {'the bundled corpus' if knots_file is None else knots_file}")


def _emit(report: dict, fmt: str, compact: bool = False) -> None:
    print(render_table(report) if fmt == "table" else dumps(report, compact))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--knots", metavar="FILE", help="knot table (JSON array); defaults to the bundled corpus")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--max-bits", type=int, default=None, metavar="N",
                        help=f"precision cap for certified signatures (default {DEFAULT_MAX_BITS}, "
                             "or $SLICE_ENGINE_MAX_BITS)")

    query = argparse.ArgumentParser(add_help=False)
    query.add_argument("--manifold", required=True, help="preset name or JSON descriptor")
    query.add_argument("--class", dest="cls", required=True, metavar="a,b,...")
    query.add_argument("--knot", required=True, help="knot name in the table, or an inline JSON matrix")
    query.add_argument("--d", dest="forbidden_d", default=None, help=argparse.SUPPRESS)

    parser = _Parser(prog="simpleslice", description="Simple Z_d-slice disc decisions from Seifert matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="knot invariants at the d-th roots of unity")
    p.add_argument("--knot", required=True)
    p.add_argument("--d", type=int, default=2)

    sub.add_parser("decide-simple", parents=[common, query], help="simple disc in N representing x")
    p = sub.add_parser("decide-stable", parents=[common, query], help="disc after stabilization")
    p.add_argument("--genus", type=int, default=0, metavar="G")
    sub.add_parser("sn", parents=[common, query], help="stabilizing number")
    sub.add_parser("genus-bound", parents=[common, query], help="signature lower bound on the genus")

    p = sub.add_parser("batch", parents=[common], help="sweep a knot table over classes")
    p.add_argument("--manifold", required=True)
    p.add_argument("--class", dest="classes", action="append", required=True, metavar="a,b,...",
                   help="may be given several times")
    p.add_argument("--jobs", type=int, default=4)
    return parser


def _batch(args, max_bits: int) -> int:
    Q, echo = parse_manifold(args.manifold)
    classes = [parse_class(c) for c in args.classes]
    records = load_knot_table(args.knots, strict=False)

    def run(item):
        rec, x = item
        if isinstance(rec, BadRecord):
            return {"knot": rec.name, "error": rec.error}
        try:
            return query_report("batch", Q, x, rec.seifert_matrix,
                                manifold_echo=echo, knot_name=rec.name, max_bits=max_bits)
        except (SliceEngineError, ValueError, ArithmeticError) as exc:
            return {"knot": rec.name, "class": list(x), "error": f"{type(exc).__name__}: {exc}"}

    items = []
    for rec in records:
        if isinstance(rec, BadRecord):
            items.append((rec, None))
        else:
            items.extend((rec, x) for x in classes)
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        # map yields in submission order whatever the completion order
        for out in pool.map(run, items):
            if args.format == "table" and "error" not in out:
                print(render_table(out))
                print()
            else:
                print(dumps(out, compact=True))
    return EXIT_YES


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        max_bits = args.max_bits if args.max_bits is not None else _default_max_bits()
        if args.command == "invariants":
            if args.d < 1:
                raise UsageError("--d must be a positive integer")
            name, V = resolve_knot(args.knot, args.knots)
            _emit(invariants_report(name, V, args.d, max_bits), args.format)
            return EXIT_YES
        if args.command == "batch":
            return _batch(args, max_bits)
        if args.forbidden_d is not None:
            raise UsageError("d is derived from the class via divisibility and may not be supplied")
        Q, echo = parse_manifold(args.manifold)
        x = parse_class(args.cls)
        name, V = resolve_knot(args.knot, args.knots)
        genus = getattr(args, "genus", None)
        if genus is not None and genus < 0:
            raise UsageError("--genus must be nonnegative")
        report = query_report(args.command, Q, x, V, manifold_echo=echo, knot_name=name,
                              genus=genus, max_bits=max_bits)
        _emit(report, args.format)
        if args.command == "decide-simple":
            return _ANSWER_EXIT[report["result"]["simple"]["answer"]]
        if args.command == "decide-stable":
            return _ANSWER_EXIT[report["result"]["stable"]["answer"]]
        return EXIT_YES
    except (UsageError, SliceEngineError, ValueError, KeyError, OSError, ArithmeticError) as exc:
        print(f"simpleslice: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
