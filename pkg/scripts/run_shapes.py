"""Run the verification suite over a list of shapes and fields and print a status table.

Usage: python scripts/run_shapes.py [--shapes 2x2,2x3,...] [--fields q,fp:3] [--orders diag-lex,diag-lex-T]
"""

import argparse
import sys
import time

from permideal.algebra import FieldSpec, Ring, TermOrder
from permideal.groebner import Budget
from permideal.verify import run_suite

DEFAULT_SHAPES = "2x2,2x3,3x2,3x3,3x4,4x3,4x4"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--shapes", default=DEFAULT_SHAPES)
    ap.add_argument("--fields", default="q")
    ap.add_argument("--orders", default="diag-lex")
    ap.add_argument("--budget-ms", type=int, default=120_000)
    ap.add_argument("--checks", default=None)
    args = ap.parse_args(argv)
    checks = args.checks.split(",") if args.checks else None
    bad = 0
    for shape in args.shapes.split(","):
        m, n = map(int, shape.split("x"))
        for fname in args.fields.split(","):
            for oname in args.orders.split(","):
                ring = Ring.of(m, n, FieldSpec.parse(fname).characteristic)
                t0 = time.perf_counter()
                rep = run_suite(ring, TermOrder(oname), Budget(time_ms=args.budget_ms), checks)
                secs = time.perf_counter() - t0
                print(f"== {m}x{n} {ring.field.name} {oname}  ({secs:.1f}s)")
                for c in rep.checks:
                    tail = "" if c.status in ("pass", "skipped") else f"  expected={c.expected!r} actual={c.actual!r}"
                    print(f"   {c.id:<26} {c.status:<8} {c.elapsed:7.2f}s{tail}")
                bad += rep.failed
                sys.stdout.flush()
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
