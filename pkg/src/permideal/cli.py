"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error,
3 a Groebner computation ran out of budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .algebra import AlgebraError, FieldSpec, Ring, TermOrder
from .groebner import (
    Budget,
    BudgetExceeded,
    Ideal,
    ideal_intersection,
    ideal_member,
    normal_form,
    radical_member,
)
from .permanental import (
    UndefinedPartError,
    component_count,
    embedded_Q,
    gap_length_formula,
    gb_count_formula,
    minimal_primes,
    permanental_ideal,
    radical_generators,
    unmixed_part,
)
from .polytext import ParseError, parse_poly, parse_poly_list
from .verify import CHECKS, run_suite

__all__ = ["main", "parse_poly", "parse_poly_list", "ParseError"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
FAMILIES = ("perm2", "radical", "q-component", "I1", "I2", "I3")


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--m", type=int, default=3, help="number of rows (default 3)")
    p.add_argument("--n", type=int, default=3, help="number of columns (default 3)")
    p.add_argument("--field", default="q", help="q or fp:<p> (default q)")
    p.add_argument("--order", default="diag-lex", choices=["diag-lex", "diag-lex-T"])
    p.add_argument("--budget-ms", type=int, default=60_000,
                   help="time budget per Groebner computation; 0 disables it")
    p.add_argument("--out", help="write output to this file instead of stdout")
    return p


def _ideal_args(p: argparse.ArgumentParser, flag: str = "--ideal", dest: str = "ideal"):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument(flag, dest=dest, choices=FAMILIES, help="named ideal")
    g.add_argument(f"{flag}-file", dest=f"{dest}_file", help="file with one generator per line")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="permideal", description="2x2 permanental ideals of generic matrices")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of an ideal")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--file", help="file with one generator per line")
    p.add_argument("--stats", action="store_true", help="append pair and reduction counts")

    for name, text in (("nf", "normal form modulo the ideal's reduced basis"),
                       ("member", "ideal membership"),
                       ("radical-member", "membership in the radical")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--poly", required=True, help="polynomial, e.g. \"x[1,1]*x[2,2]\"")
        _ideal_args(p)

    p = sub.add_parser("intersect", parents=[common], help="reduced basis of an intersection")
    _ideal_args(p, "--a", "a")
    _ideal_args(p, "--b", "b")

    sub.add_parser("count", parents=[common], help="counting formulas")
    sub.add_parser("primes", parents=[common], help="list minimal primes with heights")
    sub.add_parser("decompose", parents=[common], help="Q, I1, I2, I3 and the minimal primes")

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--checks", help="comma-separated check ids (default: all)")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--timings", action="store_true", help="include elapsed_ms (breaks byte-determinism)")
    inter = p.add_mutually_exclusive_group()
    inter.add_argument("--intersections", dest="intersections", action="store_const", const=True,
                       help="force the intersection-based checks on")
    inter.add_argument("--no-intersections", dest="intersections", action="store_const", const=False)
    p.add_argument("--list", action="store_true", help="print check ids and exit")
    return ap


def _ring(args) -> Ring:
    try:
        fs = FieldSpec.parse(args.field)
        return Ring.of(args.m, args.n, fs.characteristic)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _budget(args) -> Optional[Budget]:
    if args.budget_ms < 0:
        raise UsageError("--budget-ms must be >= 0")
    return Budget(time_ms=args.budget_ms) if args.budget_ms else None


def named_ideal(ring: Ring, name: str) -> Ideal:
    if name == "perm2":
        return permanental_ideal(ring, 2)
    if name == "radical":
        return radical_generators(ring)
    if name == "q-component":
        return embedded_Q(ring)
    try:
        return unmixed_part(ring, int(name[1:]))
    except UndefinedPartError as exc:
        raise UsageError(str(exc)) from None


def _read_ideal(ring: Ring, name: Optional[str], path: Optional[str]) -> Ideal:
    if name:
        return named_ideal(ring, name)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        gens = parse_poly_list(text, ring)
    except ParseError as exc:
        raise ParseError(f"{path}: {str(exc).split(': ', 1)[1]}", exc.line, exc.col) from None
    return Ideal(ring, gens, name=Path(path).name)


def _basis_text(polys, order: TermOrder) -> List[str]:
    return [f.to_text(order) for f in polys]


def _cmd_gb(args, ring, order, budget) -> tuple:
    I = _read_ideal(ring, args.family, args.file)
    rep = I.groebner(order, budget)
    lines = _basis_text(rep.basis, order)
    if args.stats:
        lines.append(f"# size={len(rep.basis)} s-pairs={rep.s_pairs_processed} "
                     f"zero-reductions={rep.reductions_to_zero}")
    return lines, EXIT_OK


def _cmd_poly(args, ring, order, budget) -> tuple:
    f = parse_poly(args.poly, ring)
    I = _read_ideal(ring, args.ideal, args.ideal_file)
    if args.command == "nf":
        return [normal_form(f, I.basis(order, budget), order).to_text(order)], EXIT_OK
    if args.command == "member":
        flag = ideal_member(f, I, order, budget)
    else:
        if not f:
            return ["true"], EXIT_OK
        flag = radical_member(f, I, order, budget)
    return ["true" if flag else "false"], EXIT_OK


def _cmd_intersect(args, ring, order, budget) -> tuple:
    A = _read_ideal(ring, args.a, args.a_file)
    B = _read_ideal(ring, args.b, args.b_file)
    C = ideal_intersection(A, B, order, budget)
    return _basis_text(C.basis(order, budget), order), EXIT_OK


def _cmd_count(args, ring, order, budget) -> tuple:
    s = ring.shape
    return [f"gb={gb_count_formula(s)}", f"components={component_count(s)}",
            f"gap-length={gap_length_formula(s)}"], EXIT_OK


def _cmd_primes(args, ring, order, budget) -> tuple:
    return [f"{P.label}\theight={P.height}" for P in minimal_primes(ring)], EXIT_OK


def _cmd_decompose(args, ring, order, budget) -> tuple:
    lines = []
    for name in ("q-component", "I1", "I2", "I3"):
        label = "Q" if name == "q-component" else name
        try:
            I = named_ideal(ring, name)
        except UsageError as exc:
            lines.append(f"[{label}] undefined: {exc}")
            continue
        basis = I.basis(order, budget)
        lines.append(f"[{label}] {len(basis)} basis elements")
        lines += ["  " + t for t in _basis_text(basis, order)]
    primes = minimal_primes(ring)
    lines.append(f"[components] {len(primes)} minimal primes")
    lines += [f"  {P.label}\theight={P.height}" for P in primes]
    return lines, EXIT_OK


def _cmd_verify(args, ring, order, budget) -> tuple:
    if args.list:
        return list(CHECKS), EXIT_OK
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(unknown)}")
    report = run_suite(ring, order, budget, checks, args.intersections)
    text = report.to_json(args.timings) if args.format == "json" else report.to_text()
    if report.failed:
        code = EXIT_FAIL
    elif report.timed_out:
        code = EXIT_BUDGET
    else:
        code = EXIT_OK
    return text.rstrip("\n").split("\n"), code


COMMANDS = {
    "gb": _cmd_gb,
    "nf": _cmd_poly,
    "member": _cmd_poly,
    "radical-member": _cmd_poly,
    "intersect": _cmd_intersect,
    "count": _cmd_count,
    "primes": _cmd_primes,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        ring = _ring(args)
        order = TermOrder(args.order)
        budget = _budget(args)
        lines, code = COMMANDS[args.command](args, ring, order, budget)
    except (UsageError, ParseError) as exc:
        print(f"permideal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"permideal: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AlgebraError as exc:
        print(f"permideal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
