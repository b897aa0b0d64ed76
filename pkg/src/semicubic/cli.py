"""Command-line interface.

Exit statuses: 0 success / Accept, 1 Reject or a failed verify check,
2 input error, 3 Degenerate, 4 precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .decide import Outcome, decide_semicubic_pdc, tail_summary
from .detcoef import build_table, table_csv
from .errors import SemicubicError
from .exactnum import format_rational, parse_rational
from .scan import FamilyTemplate, scan_2d, sweep_1d
from .shift import load_spec, make_tail, parity_model, sequence_triple

EXIT_OK, EXIT_REJECT, EXIT_INPUT, EXIT_DEGENERATE, EXIT_PRECONDITION = 0, 1, 2, 3, 4

_OUTCOME_EXIT = {
    Outcome.ACCEPT: EXIT_OK,
    Outcome.REJECT: EXIT_REJECT,
    Outcome.DEGENERATE: EXIT_DEGENERATE,
    Outcome.PRECONDITION_FAILED: EXIT_PRECONDITION,
}


class InputError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parities(choice: str) -> list[int]:
    return [1, 2] if choice == "both" else [int(choice)]


def cmd_tail(args) -> int:
    tail = make_tail(*(parse_rational(x) for x in (args.u, args.v, args.w)))
    for name, exact, approx in tail_summary(tail):
        print(f"{name} = {exact}  (~ {approx})")
    return EXIT_OK


def cmd_weights(args) -> int:
    spec = load_spec(args.spec)
    print("n,alpha2,u_n,v_n,w_n")
    for n in range(args.n + 1):
        t = sequence_triple(spec, n)
        row = [spec.weight_squared(n), t.u, t.v, t.w]
        print(",".join([str(n)] + [format_rational(x) for x in row]))
    return EXIT_OK


def cmd_coeffs(args) -> int:
    spec = load_spec(args.spec)
    parts = []
    for j in _parities(args.j):
        text = table_csv(build_table(parity_model(spec, j, args.n)))
        if args.j == "both":
            lines = text.splitlines()
            text = "\n".join([f"j,{lines[0]}"] + [f"{j},{line}" for line in lines[1:]]) + "\n"
            if parts:
                text = text.split("\n", 1)[1]
        parts.append(text)
    _emit("".join(parts), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    spec = load_spec(args.spec)
    decision = decide_semicubic_pdc(spec)
    if args.json:
        _emit(decision.to_json() + "\n", args.out)
    else:
        text = decision.report() + "\n"
        if decision.first_failure:
            text += f"first failing condition: {decision.first_failure.ident}\n"
        _emit(text, args.out)
    return _OUTCOME_EXIT[decision.outcome]


def _tol(text: str):
    try:
        tol = parse_rational(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if tol <= 0:
        raise InputError("--tol must be positive")
    return tol


def cmd_sweep(args) -> int:
    template = FamilyTemplate.load(args.spec)
    if len(template.free) != 1:
        raise InputError("sweep needs a template with exactly one free variable")
    result = sweep_1d(template, _tol(args.tol), samples=args.samples)
    _emit(result.to_csv(), args.out)
    for x in result.degenerate:
        print(f"degenerate point: {format_rational(x)}", file=sys.stderr)
    return EXIT_OK


def cmd_region(args) -> int:
    template = FamilyTemplate.load(args.spec)
    if len(template.free) != 2:
        raise InputError("region needs a template with exactly two free variables")
    if args.nx < 2 or args.ny < 2:
        raise InputError("--nx and --ny must be at least 2")
    result = scan_2d(template, args.nx, args.ny, workers=args.workers)
    _emit(result.to_csv(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_all

    failed = 0
    for r in run_all(grid=args.grid):
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
        failed += not r.passed
    return EXIT_REJECT if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semicubic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tail", help="invariants of the Stampfli tail (sqrt u, sqrt v, sqrt w)^")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("w")
    p.set_defaults(func=cmd_tail)

    p = sub.add_parser("weights", help="squared weights and u_n, v_n, w_n")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, default=20)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("coeffs", help="coefficient table CSV for parity j")
    p.add_argument("--spec", required=True)
    p.add_argument("--j", choices=["1", "2", "both"], default="1")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("check", help="decide semi-cubic hyponormality with p.d.c.")
    p.add_argument("--spec", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="feasibility intervals of a one-parameter family")
    p.add_argument("--spec", required=True)
    p.add_argument("--tol", default="1e-9")
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("region", help="grid scan of a two-parameter family")
    p.add_argument("--spec", required=True)
    p.add_argument("--nx", type=int, default=60)
    p.add_argument("--ny", type=int, default=60)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("verify", help="run the built-in identity and equivalence checks")
    p.add_argument("--grid", type=int, default=20, help="fixture grid size")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SemicubicError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
