"""Command-line front end.

Exit codes: 0 success, 1 verification failures, 2 usage errors, 3 I/O
problems.  All output is deterministic for fixed seed and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import atlas as atlas_mod
from . import carter, exact, families, nilpotent, verify
from .algebra import (FourVector, GradedElement, bracket11, format_fourvector,
                      jordan_decompose, parse_fourvector)
from .report import CheckResult, all_passed


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourvectors",
        description="Exact SL(8)-orbit toolkit for four-vectors of an "
                    "8-dimensional space")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=verify.SUITES)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("sl2", help="print the (h, e, f) triple of an orbit")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--orbit", type=int)
    group.add_argument("--marks", type=str)

    p = sub.add_parser("classify", help="classify a four-vector read from a file")
    p.add_argument("--input", required=True)

    p = sub.add_parser("carter", help="diagram of an orbit's normal form")
    p.add_argument("--orbit", type=int, required=True)
    p.add_argument("--dot", type=str)
    p.add_argument("--contract", action="store_true")
    p.add_argument("--labels", choices=("indices", "letters"), default="indices")

    p = sub.add_parser("hasse", help="write the orbit-closure diagram as DOT")
    p.add_argument("--dot", required=True)

    p = sub.add_parser("bracket", help="bracket of two four-vector files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("export", help="dump the atlas")
    p.add_argument("--json", required=True)
    return parser


def _print_results(results: List[CheckResult], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([{"name": r.name, "status": r.status,
                           "detail": r.detail} for r in results], indent=1))
    else:
        for r in results:
            print(r.line())
        total = len(results)
        failed = sum(1 for r in results if not r.passed)
        print(f"{total - failed}/{total} checks passed")


def _cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, seed=args.seed, jobs=args.jobs)
    _print_results(results, args.format)
    return 0 if all_passed(results) else 1


def _triple_for_marks(marks) -> nilpotent.Sl2Triple:
    atl = atlas_mod.get_atlas()
    h = nilpotent.characteristic_to_h(marks)
    number = atl.orbit_by_marks(tuple(marks.marks))
    if number is not None:
        e = atl.orbit_record(number).normal_form
        f = nilpotent.solve_f(h, e)
        if f is not None:
            return nilpotent.Sl2Triple(h, e, f)
    e = nilpotent.search_normal_form(h, max_support=7, cap=200_000)
    if e is None:
        raise ValueError(f"no nilpotent with characteristic {marks} found")
    return nilpotent.Sl2Triple(h, e, nilpotent.solve_f(h, e))


def _cmd_sl2(args) -> int:
    atl = atlas_mod.get_atlas()
    if args.orbit is not None:
        rec = atl.orbit_record(args.orbit)
        marks = nilpotent.Characteristic(rec.marks)
        h = nilpotent.characteristic_to_h(marks)
        f = nilpotent.solve_f(h, rec.normal_form)
        if f is None:
            raise AssertionError(f"orbit {args.orbit} has no f; atlas corrupt")
        triple = nilpotent.Sl2Triple(h, rec.normal_form, f)
        print(f"orbit {args.orbit} (marks {marks})")
    else:
        marks = nilpotent.Characteristic.parse(args.marks)
        triple = _triple_for_marks(marks)
        print(f"marks {marks}")
    triple.validate()
    diag = ", ".join(exact.format_rational(x) for x in triple.h.diagonal_entries())
    print(f"h = diag({diag})")
    print("e:")
    print(format_fourvector(triple.e))
    print("f:")
    print(format_fourvector(triple.f))
    return 0


def _cmd_classify(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        t = parse_fourvector(fh.read())
    if t.is_zero():
        print("zero")
        return 0
    s, n = jordan_decompose(GradedElement.odd(t))
    if n.is_zero():
        print("semisimple")
    elif s.is_zero():
        number, triple = nilpotent.classify_nilpotent(t)
        marks = nilpotent.h_to_characteristic(triple.h)
        print(f"nilpotent, orbit {number}, marks {marks}")
    else:
        number, triple = nilpotent.classify_nilpotent(n.part1)
        marks = nilpotent.h_to_characteristic(triple.h)
        print(f"mixed; nilpotent part matches orbit {number}, marks {marks}")
    return 0


def _cmd_carter(args) -> int:
    rec = atlas_mod.get_atlas().orbit_record(args.orbit)
    diagram = carter.build_diagram(rec.normal_form)
    if args.contract:
        diagram = carter.contract_all_dashed(diagram)
    print(f"orbit {args.orbit}: {len(diagram.nodes)} nodes")
    for k, node in enumerate(diagram.nodes):
        print(f"  node {k}: {node.label}")
    for i, j, kind in diagram.edges:
        print(f"  edge {diagram.nodes[i].label} -- {diagram.nodes[j].label} ({kind})")
    print("gram matrix:")
    for row in diagram.gram:
        print("  " + " ".join(f"{x:3d}" for x in row))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(carter.to_dot(diagram, labels=args.labels) + "\n")
        print(f"wrote {args.dot}")
    return 0


def _cmd_hasse(args) -> int:
    dot = atlas_mod.get_atlas().export_dot_hasse()
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(dot + "\n")
    print(f"wrote {args.dot}")
    return 0


def _cmd_bracket(args) -> int:
    with open(args.a, "r", encoding="utf-8") as fh:
        a = parse_fourvector(fh.read())
    with open(args.b, "r", encoding="utf-8") as fh:
        b = parse_fourvector(fh.read())
    print(bracket11(a, b).to_text())
    return 0


def _cmd_export(args) -> int:
    with open(args.json, "w", encoding="utf-8") as fh:
        fh.write(atlas_mod.get_atlas().export_json() + "\n")
    print(f"wrote {args.json}")
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "sl2": _cmd_sl2,
    "classify": _cmd_classify,
    "carter": _cmd_carter,
    "hasse": _cmd_hasse,
    "bracket": _cmd_bracket,
    "export": _cmd_export,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
