"""Classify the gap monomials between P2 and its radical.

For each gap monomial, report which variable multiples leave in(P2) and land
back in the gap.  Usage: python scripts/gap_socle.py [m n]
"""

import sys

from permideal.algebra import Ring
from permideal.groebner import gap_monomials
from permideal.permanental import permanental_ideal, radical_generators


def main(argv):
    m, n = (int(a) for a in argv[:2]) if len(argv) >= 2 else (4, 4)
    ring = Ring.of(m, n)
    I = permanental_ideal(ring, 2)
    gaps = gap_monomials(I, radical_generators(ring))
    gap_set = {u.exps for u in gaps}
    leads = I.leading_monomials()
    refs = ring.varrefs
    print(f"{m}x{n}: {len(gaps)} gap monomials")
    for u in gaps:
        escapes = []
        for v in range(m * n):
            e = list(u.exps)
            e[v] += 1
            e = tuple(e)
            if not any(all(a <= b for a, b in zip(l, e)) for l in leads):
                escapes.append(f"*{refs[v]}" + (" (gap)" if e in gap_set else " (outside)"))
        print(f"  {u}: {'socle' if not escapes else ', '.join(escapes)}")


if __name__ == "__main__":
    main(sys.argv[1:])
