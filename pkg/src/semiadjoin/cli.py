"""Command-line interface: build, check, verify, compare, export.

Exit status is 0 when a command passes, 1 when a check ran and found a
violation, 2 for usage, parse and resource errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from . import formats
from .iterated import build_T1, build_Tn, build_V1, build_Vn, verify_lex_correspondence
from .order import TotalOrder, check_B_axioms, check_total_order, max_semigroup, min_semigroup, order_from_semigroup
from .report import SemigroupError
from .semigroup import (
    DEFAULT_MAX_ELEMENTS,
    check_abelian,
    check_associative,
    find_identity,
    find_zero,
    trivial_semigroup,
)
from .tuples import lex_compare, parse_tuple

PASS, FAIL, ERROR = "pass", "fail", "error"
EXIT_CODES = {PASS: 0, FAIL: 1, ERROR: 2}

BUILD_KINDS = ("trivial", "T1", "Tn", "V1", "Vn", "min-chain", "max-chain")
CHECKS = ("assoc", "abelian", "identity", "zero", "A-axioms", "B-axioms")
EXPORT_FORMATS = ("json", "csv", "dot")


@dataclass
class CommandResult:
    status: str
    detail: str = ""
    payload: Optional[str] = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def _usage(msg: str) -> CommandResult:
    return CommandResult(ERROR, msg)


def _need(args, *names) -> Optional[str]:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    return f"{args.kind} requires {', '.join(missing)}" if missing else None


def cmd_build(args) -> CommandResult:
    kind, limit = args.kind, args.max_elements
    required = {"T1": ("k",), "Tn": ("n", "bound"), "V1": ("neg", "pos"), "Vn": ("n", "bound"),
                "min-chain": ("k",), "max-chain": ("k",)}.get(kind, ())
    problem = _need(args, *required)
    if problem:
        return _usage(problem)
    if kind == "trivial":
        S = trivial_semigroup(args.label)
        return CommandResult(PASS, "1 element", formats.semigroup_to_json(S))
    if kind in ("min-chain", "max-chain"):
        if args.k < 0 or args.k + 1 > limit:
            return _usage(f"--k must be in [0, {limit - 1}]")
        order = TotalOrder.from_chain([f"s{i}" for i in range(args.k + 1)])
        S = (min_semigroup if kind == "min-chain" else max_semigroup)(order)
        return CommandResult(PASS, f"{len(S)} elements", formats.semigroup_to_json(S))
    if kind == "T1":
        built = build_T1(args.k, max_elements=limit)
    elif kind == "Tn":
        built = build_Tn(args.n, args.bound, max_elements=limit)
    elif kind == "V1":
        built = build_V1(args.neg, args.pos, max_elements=limit)
    else:
        built = build_Vn(args.n, args.bound, max_elements=limit)
    return CommandResult(PASS, f"{len(built)} elements", formats.indexed_to_json(built))


def cmd_check(args, text: str) -> CommandResult:
    doc = formats.load(text)
    if args.what == "A-axioms":
        elements, pairs = formats.relation_from_doc(doc)
        rep = check_total_order(elements, pairs)
        return CommandResult(PASS if rep else FAIL, str(rep))
    S = formats.semigroup_from_doc(doc, args.max_elements)
    if args.what in ("identity", "zero"):
        found = (find_identity if args.what == "identity" else find_zero)(S)
        if found is None:
            return CommandResult(FAIL, f"no {args.what}")
        return CommandResult(PASS, f"{args.what}: {found.label}")
    check = {"assoc": check_associative, "abelian": check_abelian, "B-axioms": check_B_axioms}[args.what]
    rep = check(S)
    return CommandResult(PASS if rep else FAIL, str(rep))


def cmd_verify(args, text: str) -> CommandResult:
    S = formats.indexed_from_json(text, args.max_elements)
    rep = verify_lex_correspondence(S)
    if rep:
        return CommandResult(PASS, f"pass: {rep.checked} pairs checked")
    return CommandResult(FAIL, f"{rep} ({rep.checked} pairs checked)")


def cmd_compare(args) -> CommandResult:
    a, b = parse_tuple(args.a), parse_tuple(args.b)
    return CommandResult(PASS, str(lex_compare(a, b)))


def cmd_export(args, text: str) -> CommandResult:
    if text.lstrip().startswith("{"):
        doc = formats.load(text)
        if "table" not in doc:
            order = TotalOrder.from_chain(doc["elements"])
            if args.format == "dot":
                return CommandResult(PASS, "", formats.order_to_dot(order))
            if args.format == "json":
                return CommandResult(PASS, "", formats.order_to_json(order))
            return _usage("csv export needs a semigroup table")
        if args.format == "json" and "arity" in doc:
            return CommandResult(PASS, "", formats.indexed_to_json(formats.indexed_from_doc(doc, args.max_elements)))
        S = formats.semigroup_from_doc(doc, args.max_elements)
    else:
        S = formats.semigroup_from_csv(text, args.max_elements)
    if args.format == "json":
        return CommandResult(PASS, "", formats.semigroup_to_json(S))
    if args.format == "csv":
        return CommandResult(PASS, "", formats.semigroup_to_csv(S))
    return CommandResult(PASS, "", formats.order_to_dot(order_from_semigroup(S)))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semiadjoin", description=__doc__.splitlines()[0])
    p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS,
                   help="carrier size limit (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a semigroup and print its JSON")
    b.add_argument("kind", choices=BUILD_KINDS)
    b.add_argument("--label", default="s0", help="element label for 'trivial'")
    b.add_argument("--k", type=int, help="top index for T1 and the chains (elements s0..sk)")
    b.add_argument("--n", type=int, help="arity for Tn and Vn")
    b.add_argument("--bound", type=int, help="box size: [0, bound) for Tn, [-bound, bound] for Vn")
    b.add_argument("--neg", type=int, help="number of zeros adjoined for V1")
    b.add_argument("--pos", type=int, help="top index for V1")
    b.add_argument("--out", help="write JSON here instead of standard output")

    c = sub.add_parser("check", help="run a structural check on a JSON document")
    c.add_argument("what", choices=CHECKS)
    c.add_argument("input", nargs="?", default="-")

    v = sub.add_parser("verify", help="check an indexed semigroup against lex-min products")
    v.add_argument("input", nargs="?", default="-")

    cmp_ = sub.add_parser("compare", help="compare two tuples lexicographically")
    cmp_.add_argument("a")
    cmp_.add_argument("b")

    e = sub.add_parser("export", help="re-emit a document as canonical JSON, CSV or DOT")
    e.add_argument("input", nargs="?", default="-")
    e.add_argument("--format", choices=EXPORT_FORMATS, default="json")
    e.add_argument("--out")

    # --max-elements is accepted after the subcommand too
    for sp in (b, c, v, e):
        sp.add_argument("--max-elements", type=int, default=argparse.SUPPRESS)
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def dispatch(args) -> CommandResult:
    try:
        if args.command == "build":
            return cmd_build(args)
        if args.command == "compare":
            return cmd_compare(args)
        text = _read(args.input)
        if args.command == "check":
            return cmd_check(args, text)
        if args.command == "verify":
            return cmd_verify(args, text)
        return cmd_export(args, text)
    except (SemigroupError, OSError) as exc:
        return CommandResult(ERROR, f"error: {exc}")


def run(argv=None) -> CommandResult:
    return dispatch(build_parser().parse_args(argv))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    result = dispatch(args)
    out = result.payload
    if out is not None:
        target = getattr(args, "out", None)
        if target:
            with open(target, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
        if result.detail:
            print(result.detail, file=sys.stderr)
    elif result.status == ERROR:
        print(result.detail, file=sys.stderr)
    else:
        print(result.detail)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
