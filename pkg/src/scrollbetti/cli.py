"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 case outside the known formulas
(reason on stderr), 4 a failed check under ``--strict`` or in ``selftest``.
"""
from __future__ import annotations

import argparse
import json
import sys

from .checks import (
    Verdict,
    check_decomposition,
    check_fixture,
    check_module_e,
    k_polynomial_sweep,
    oracle_sweep,
)
from .decomposition import Decomposition, decompose
from .errors import InvalidInput, OutsideKnownFormulas
from .golden import fixture_dir, load_all
from .module_e import ModuleESpec, betti_e, betti_scroll_surface
from .scroll import ScrollDivisor, decomposition_route
from .table import BettiTable, render

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_CHECK = 0, 2, 3, 4
FORMATS = ("ascii", "json", "csv")


def _emit(out, table: BettiTable, fmt: str, notes: list[str], extra: dict) -> None:
    """Write a table plus optional commentary without breaking the format."""
    if fmt == "json":
        out.write(json.dumps({**table.to_dict(), **extra}) + "\n")
    elif fmt == "csv":
        for line in notes:
            out.write(f"# {line}\n")
        out.write(render(table, "csv"))
    else:
        out.write(render(table, "ascii"))
        if notes:
            out.write("\n" + "\n".join(notes) + "\n")


def _verdict_notes(verdicts: list[Verdict]) -> list[str]:
    return [str(v) for v in verdicts]


def _verdict_json(verdicts: list[Verdict]) -> list[dict]:
    return [{"name": v.name, "passed": v.passed, "detail": v.detail} for v in verdicts]


def _explain(dec: Decomposition, fmt: str) -> tuple[list[str], dict]:
    inv = dec.invariants
    head = (
        f"{dec.divisor}: route {dec.route.route.value} ({dec.route.reason}); "
        f"δ={inv.delta}, ε={inv.epsilon}, reg={inv.reg_x}"
    )
    # "E(6,2,13) = E(6,2,3)[5]" contributes its shifted form to the sum line
    notes = [head, "β(X) = " + " + ".join(s.label.split(" = ")[-1] for s in dec.summands)]
    for s in dec.summands:
        notes.append(f"{s.label}  [{s.provenance}]")
        if fmt == "ascii":
            notes.extend("    " + line for line in render(s.table, "ascii").splitlines())
    extra = {
        "divisor": {"a1": dec.divisor.a1, "a2": dec.divisor.a2, "a": dec.divisor.a, "b": dec.divisor.b},
        "route": dec.route.route.value,
        "summands": [
            {"label": s.label, "provenance": s.provenance, "table": s.table.to_dict()}
            for s in dec.summands
        ],
    }
    return notes, extra


def cmd_divisor(args, out) -> int:
    dec = decompose(ScrollDivisor(args.a1, args.a2, args.a, args.b))
    notes, extra = [], {}
    if args.explain:
        notes, extra = _explain(dec, args.format)
    status = EXIT_OK
    if args.check or args.strict:
        verdicts = check_decomposition(dec)
        notes += _verdict_notes(verdicts)
        extra["checks"] = _verdict_json(verdicts)
        if args.strict and not all(v.passed for v in verdicts):
            status = EXIT_CHECK
    _emit(out, dec.total, args.format, notes, extra)
    return status


def cmd_module_e(args, out) -> int:
    spec = ModuleESpec(args.r, args.s, args.t)
    table = betti_e(spec)
    notes, extra = [], {}
    status = EXIT_OK
    if args.check or args.strict:
        verdicts = check_module_e(spec, table)
        notes, extra = _verdict_notes(verdicts), {"checks": _verdict_json(verdicts)}
        if args.strict and not all(v.passed for v in verdicts):
            status = EXIT_CHECK
    _emit(out, table, args.format, notes, extra)
    return status


def cmd_surface(args, out) -> int:
    _emit(out, betti_scroll_surface(args.r), args.format, [], {})
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    """One json record per valid divisor, ordered by (a, b)."""
    status = EXIT_OK
    for a in range(args.a_max + 1):
        for b in range(2, args.b_max + 1):
            try:
                x = ScrollDivisor(args.a1, args.a2, a, b)
            except InvalidInput:
                continue
            if not x.in_problem_scope:
                continue
            verdict = decomposition_route(x)
            rec = {"a1": x.a1, "a2": x.a2, "a": a, "b": b, "route": verdict.route.value}
            if verdict.supported:
                dec = decompose(x)
                rec["table"] = dec.total.to_dict()
                if args.check or args.strict:
                    verdicts = check_decomposition(dec)
                    rec["checks"] = _verdict_json(verdicts)
                    if args.strict and not all(v.passed for v in verdicts):
                        status = EXIT_CHECK
            else:
                rec["reason"] = verdict.reason
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
    return status


def cmd_selftest(args, out) -> int:
    store = load_all()
    out.write(f"fixtures from {fixture_dir()}\n")
    verdicts = [check_fixture(fx, store) for fx in store.values()]
    if not store:
        verdicts.append(Verdict("fixture store", False, "no fixtures found"))
    verdicts += oracle_sweep(args.r_max) + k_polynomial_sweep()
    for v in verdicts:
        out.write(f"{v}\n")
    failed = sum(not v.passed for v in verdicts)
    out.write(f"{len(verdicts) - failed} passed, {failed} failed\n")
    return EXIT_CHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrollbetti",
        description="Betti tables of divisors on smooth rational normal surface scrolls.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p, checks=True):
        p.add_argument("--format", choices=FORMATS, default="ascii")
        if checks:
            p.add_argument("--check", action="store_true", help="run the independent oracles")
            p.add_argument("--strict", action="store_true", help="exit 4 if any check fails (implies --check)")

    p = sub.add_parser("divisor", help="β(X) for X = aH + bF on S(a1, a2)")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--explain", action="store_true", help="print the summands")
    output_flags(p)
    p.set_defaults(func=cmd_divisor)

    p = sub.add_parser("module-e", help="β(E(r, s, t))")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    output_flags(p)
    p.set_defaults(func=cmd_module_e)

    p = sub.add_parser("surface", help="β of a surface of minimal degree in P^r")
    p.add_argument("-r", type=int, required=True)
    output_flags(p, checks=False)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("sweep", help="json lines over a grid of (a, b)")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="golden fixtures and oracle sweeps")
    p.add_argument("--r-max", type=int, default=10, help="largest r for the Koszul oracle sweep")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidInput as exc:
        err.write(f"scrollbetti: invalid input: {exc}\n")
        return EXIT_INVALID
    except OutsideKnownFormulas as exc:
        err.write(f"scrollbetti: unsupported: {exc}\n")
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
