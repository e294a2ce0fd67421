"""Machine checks of the explicit structure of P2, assembled into a report.

Every check computes its ``actual`` text from the generators alone and its
``expected`` text from the explicit constructions and counting formulas; a check
passes iff the two strings are identical.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__
from .algebra import FieldSpec, Polynomial, Ring, Shape, TermOrder
from .groebner import (
    Budget,
    BudgetExceeded,
    Ideal,
    eliminate,
    gap_monomials,
    graded_member,
    ideal_contained,
    ideal_equal,
    ideal_member,
    ideal_product,
    intersect_all,
    is_groebner_basis,
    radical_member,
)
from .permanental import (
    LinearForm,
    antidiagonal_products,
    block_prime_pairs,
    canonical_set,
    certificate_for,
    claimed_gb,
    claimed_radical_gb,
    component_count,
    embedded_Q,
    expand_certificate,
    gap_length_formula,
    gb_count_formula,
    is_parameter,
    cubic_certificate,
    cubic_patterns,
    quartic_certificate,
    quartic_patterns,
    linear_form_in_prime,
    minimal_primes,
    niermann_sides,
    permanental_ideal,
    prime_family,
    radical_generators,
    squarefree_triples,
    subpermanents,
    unmixed_part,
)

SCHEMA_VERSION = 1
STATUSES = ("pass", "fail", "skipped", "timeout")
BOTH_ORDERS = (TermOrder("diag-lex"), TermOrder("diag-lex-T"))
# intersection-heavy checks run by default only on these shapes
SMALL_SHAPES = {(2, 2), (2, 3), (3, 2), (3, 3)}


class Skip(Exception):
    """Raised inside a check when a precondition of the statement being checked does not hold."""


@dataclass
class CheckResult:
    id: str
    status: str
    expected: str = ""
    actual: str = ""
    elapsed: float = 0.0
    detail: str = ""

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "detail": self.detail,
            "elapsed_ms": round(self.elapsed * 1000) if timings else None,
        }


@dataclass
class Report:
    shape: Shape
    field: FieldSpec
    order: TermOrder
    checks: List[CheckResult]
    tool_version: str = __version__

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    @property
    def timed_out(self) -> bool:
        return any(c.status == "timeout" for c in self.checks)

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "shape": {"m": self.shape.m, "n": self.shape.n},
            "field": self.field.name,
            "order": self.order.name,
            "checks": [c.to_dict(timings) for c in self.checks],
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"shape {self.shape.m}x{self.shape.n}  field {self.field.name}  order {self.order.name}"]
        width = max((len(c.id) for c in self.checks), default=10)
        for c in self.checks:
            line = f"  {c.id:<{width}}  {c.status:<7}"
            if c.status == "skipped":
                line += f"  {c.detail}"
            elif c.status != "pass":
                line += f"  expected: {c.expected}  actual: {c.actual}"
            lines.append(line.rstrip())
        return "\n".join(lines) + "\n"


@dataclass
class SuiteConfig:
    ring: Ring
    order: TermOrder = field(default_factory=TermOrder)
    budget: Optional[Budget] = field(default_factory=lambda: Budget(time_ms=60_000))
    intersections: Optional[bool] = None  # None: on for SMALL_SHAPES only

    @property
    def run_intersections(self) -> bool:
        if self.intersections is not None:
            return self.intersections
        return (self.ring.m, self.ring.n) in SMALL_SHAPES


# -- helpers -----------------------------------------------------------------


def _digest(polys: Sequence[Polynomial], order: TermOrder) -> str:
    text = "\n".join(p.to_text(order) for p in polys)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _basis_summary(polys: Sequence[Polynomial], order: TermOrder) -> str:
    return f"{order.name}: {len(polys)} elements, digest {_digest(polys, order)}"


def _symdiff(computed: Sequence[Polynomial], claimed: Sequence[Polynomial], order: TermOrder) -> str:
    a = {p.to_text(order) for p in computed}
    b = {p.to_text(order) for p in claimed}
    extra = sorted(a - b)
    missing = sorted(b - a)
    parts = []
    if extra:
        parts.append("computed only: " + "; ".join(extra))
    if missing:
        parts.append("claimed only: " + "; ".join(missing))
    return " | ".join(parts)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _require_char_not_2(ring: Ring):
    if ring.field.characteristic == 2:
        raise Skip("characteristic 2: permanents coincide with determinants there")


def _require(cond: bool, reason: str):
    if not cond:
        raise Skip(reason)


# -- checks ------------------------------------------------------------------


def check_gb_equality(cfg: SuiteConfig) -> CheckResult:
    """Reduced basis of P2 equals the six explicit families under both diagonal orders."""
    ring = cfg.ring
    _require_char_not_2(ring)
    P2 = permanental_ideal(ring)
    claimed = [e.polynomial for e in claimed_gb(ring)]
    exp, act, detail = [], [], []
    exp.append(f"formula {gb_count_formula(ring.shape)}")
    act.append(f"formula {len(claimed)}")
    for order in BOTH_ORDERS:
        computed = P2.basis(order, cfg.budget)
        want = canonical_set(claimed, order)
        exp.append(_basis_summary(want, order))
        act.append(_basis_summary(computed, order))
        if computed != want:
            detail.append(f"{order.name}: {_symdiff(computed, want, order)}")
    return CheckResult("gb.equality", "", "; ".join(exp), "; ".join(act), detail=" || ".join(detail))


def check_bare_generators(cfg: SuiteConfig) -> CheckResult:
    """The subpermanents alone form a basis only when no cubic family is realizable."""
    ring = cfg.ring
    _require_char_not_2(ring)
    gens = subpermanents(ring)
    expect = gb_count_formula(ring.shape) == len(gens)
    got = [is_groebner_basis(gens, o) for o in BOTH_ORDERS]
    return CheckResult(
        "gb.bare-generators",
        "",
        ", ".join(f"{o.name}={str(expect).lower()}" for o in BOTH_ORDERS),
        ", ".join(f"{o.name}={str(g).lower()}" for o, g in zip(BOTH_ORDERS, got)),
    )


def check_char2_contrast(cfg: SuiteConfig) -> CheckResult:
    """Over GF(2) the subpermanents are a basis and a squarefree triple is not even in the radical."""
    ring = cfg.ring
    _require(ring.field.characteristic != 2, "suite field already has characteristic 2")
    r2 = ring.with_field(FieldSpec(2))
    gens2 = subpermanents(r2)
    P2_2 = Ideal(r2, gens2)
    P2 = permanental_ideal(ring)
    exp = [f"char2 {o.name} gb=true" for o in BOTH_ORDERS]
    act = [f"char2 {o.name} gb={str(is_groebner_basis(gens2, o)).lower()}" for o in BOTH_ORDERS]
    if ring.m >= 3 and ring.n >= 3:
        t2 = r2.monomial_poly([(1, 1), (2, 2), (3, 3)])
        t0 = ring.monomial_poly([(1, 1), (2, 2), (3, 3)])
        exp += ["char2 triple member=false", "char2 triple radical=false",
                f"char{ring.field.characteristic} gb=false", f"char{ring.field.characteristic} triple radical=true"]
        act += [
            f"char2 triple member={str(ideal_member(t2, P2_2, cfg.order, cfg.budget)).lower()}",
            f"char2 triple radical={str(radical_member(t2, P2_2, cfg.order, cfg.budget)).lower()}",
            f"char{ring.field.characteristic} gb={str(is_groebner_basis(list(P2.generators), cfg.order)).lower()}",
            f"char{ring.field.characteristic} triple radical={str(radical_member(t0, P2, cfg.order, cfg.budget)).lower()}",
        ]
    return CheckResult("char2.contrast", "", "; ".join(exp), "; ".join(act))


def check_radical(cfg: SuiteConfig) -> CheckResult:
    """Basis of the radical candidate, and each added triple is nilpotent but not in P2."""
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    P2 = permanental_ideal(ring)
    rad = radical_generators(ring)
    if ring.m < 3 or ring.n < 3:
        _require(cfg.run_intersections, "intersection of minimal primes not enabled for this shape")
        inter = intersect_all([P.ideal() for P in minimal_primes(ring)], order, budget)
        return CheckResult(
            "radical.basis", "", "primes intersection equals P2=yes",
            f"primes intersection equals P2={_yn(ideal_equal(inter, P2, order, budget))}",
        )
    exp, act = [], []
    for o in BOTH_ORDERS:
        want = canonical_set([e.polynomial for e in claimed_radical_gb(ring)], o)
        exp.append(_basis_summary(want, o))
        act.append(_basis_summary(rad.basis(o, budget), o))
    triples = squarefree_triples(ring)
    not_in = sum(1 for g in triples if not ideal_member(g, P2, order, budget))
    sq_in = sum(1 for g in triples if ideal_member(g * g, P2, order, budget))
    rab = sum(1 for g in triples if radical_member(g, P2, order, budget))
    k = len(triples)
    exp.append(f"triples {k}: not in P2 {k}, square in P2 {k}, radical member {k}")
    act.append(f"triples {k}: not in P2 {not_in}, square in P2 {sq_in}, radical member {rab}")
    return CheckResult("radical.basis", "", "; ".join(exp), "; ".join(act))


def check_radical_is_intersection(cfg: SuiteConfig) -> CheckResult:
    """Intersections of each prime family match the explicit unmixed parts; all together give the radical."""
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    _require(cfg.run_intersections, "intersection of minimal primes not enabled for this shape")
    exp, act = [], []
    parts = []
    for which, kind in ((1, "row"), (2, "col"), (3, "block")):
        fam = [P.ideal() for P in prime_family(ring, kind)]
        if not fam:
            continue
        inter = intersect_all(fam, order, budget)
        parts.append(inter)
        explicit = unmixed_part(ring, which)
        exp.append(f"I{which}=explicit")
        act.append(f"I{which}={'explicit' if ideal_equal(inter, explicit, order, budget) else 'differs'}")
    total = intersect_all(parts, order, budget)
    exp.append("intersection=radical generators")
    same = ideal_equal(total, radical_generators(ring), order, budget)
    act.append(f"intersection={'radical generators' if same else 'differs'}")
    return CheckResult("radical.intersection", "", "; ".join(exp), "; ".join(act))


def _height_from_generators(P) -> int:
    """Generator count when the generators form a regular sequence, else -1.

    Distinct variables plus nonzero forms in the remaining variables qualify.
    """
    gens = P.generators
    variables = [g for g in gens if g.is_monomial() and g.degree() == 1]
    var_slots = {k for g in variables for k, x in enumerate(next(iter(g.terms))) if x}
    others = [g for g in gens if g not in variables]
    if len(var_slots) != len(variables) or len(others) > 1:
        return -1
    for g in others:
        if any(e[k] for e in g.terms for k in var_slots):
            return -1
    return len(gens)


def check_minimal_primes(cfg: SuiteConfig) -> CheckResult:
    """Count, containment of P2, pairwise incomparability, heights and quadric ranks."""
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    primes = minimal_primes(ring)
    P2 = permanental_ideal(ring)
    ideals = [P.ideal() for P in primes]
    contains = sum(1 for I in ideals if ideal_contained(P2, I, order, budget))
    comparable = 0
    for a, b in combinations(range(len(ideals)), 2):
        if ideal_contained(ideals[a], ideals[b], order, budget) or ideal_contained(ideals[b], ideals[a], order, budget):
            comparable += 1
    m, n = ring.m, ring.n
    want_h = {"row": (m - 1) * n, "col": m * (n - 1), "block": m * n - 3}
    kinds = sorted({P.kind for P in primes})
    got_h: Dict[str, set] = {}
    for P in primes:
        got_h.setdefault(P.kind, set()).add(_height_from_generators(P))
    ranks = {P.quadric_rank() for P in primes if P.kind == "block"}
    distinct_want = len({want_h[k] for k in kinds})
    distinct_got = len({h for hs in got_h.values() for h in hs})
    k = component_count(ring.shape)
    exp = [
        f"count={k}",
        f"contain P2={k}",
        "comparable pairs=0",
        "heights " + ",".join(f"{kd}:{want_h[kd]}" for kd in kinds),
        f"distinct heights={distinct_want}",
        "block quadric rank=4",
    ]
    act = [
        f"count={len(primes)}",
        f"contain P2={contains}",
        f"comparable pairs={comparable}",
        "heights " + ",".join(f"{kd}:{'/'.join(str(h) for h in sorted(got_h[kd]))}" for kd in kinds),
        f"distinct heights={distinct_got}",
        "block quadric rank=" + "/".join(str(r) for r in sorted(ranks)),
    ]
    return CheckResult("primes.minimal", "", "; ".join(exp), "; ".join(act))


def _separator(P, primes, ring: Ring, order, budget) -> Polynomial:
    """Product of one generator from each other prime, chosen outside ``P``."""
    PI = P.ideal()
    picks: List[Polynomial] = []
    for other in primes:
        if other == P:
            continue
        g = next(g for g in other.generators if not ideal_member(g, PI, order, budget))
        if g not in picks:
            picks.append(g)
    s = ring.one()
    for g in picks:
        s = s * g
    return s


def check_minimal_components(cfg: SuiteConfig) -> CheckResult:
    """Each minimal primary component of P2 is the prime itself.

    The component at P is the saturation of P2 by an element lying in every other
    associated prime but not in P; it is computed by eliminating ``t`` from
    ``P2 + <1 - t s>``.
    """
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    _require(cfg.run_intersections, "saturation checks not enabled for this shape")
    primes = minimal_primes(ring)
    P2 = permanental_ideal(ring)
    equal = 0
    outside = 0
    for P in primes:
        s = _separator(P, primes, ring, order, budget)
        PI = P.ideal()
        if not ideal_member(s, PI, order, budget):
            outside += 1
        sat = eliminate(Ideal(ring, P2.generators + (ring.one() - ring.t() * s,)), order.elim(), budget)
        if ideal_equal(sat, PI, order, budget):
            equal += 1
    k = len(primes)
    return CheckResult(
        "primes.components", "",
        f"separators outside prime={k}; component equals prime={k}",
        f"separators outside prime={outside}; component equals prime={equal}",
    )


def check_primary_decomposition(cfg: SuiteConfig) -> CheckResult:
    """Q with the three unmixed parts intersects to P2, and no piece can be dropped."""
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    _require(ring.m >= 3 and ring.n >= 3, "needs m, n >= 3")
    _require(cfg.run_intersections, "intersection checks not enabled for this shape")
    P2 = permanental_ideal(ring)
    pieces = {
        "Q": embedded_Q(ring),
        "I1": unmixed_part(ring, 1),
        "I2": unmixed_part(ring, 2),
        "I3": unmixed_part(ring, 3),
    }
    full = intersect_all(list(pieces.values()), order, budget)
    exp = ["all four=P2"]
    act = [f"all four={'P2' if ideal_equal(full, P2, order, budget) else 'differs'}"]
    for name in pieces:
        rest = intersect_all([I for k, I in pieces.items() if k != name], order, budget)
        exp.append(f"drop {name}=larger")
        bigger = ideal_contained(P2, rest, order, budget) and not ideal_equal(rest, P2, order, budget)
        act.append(f"drop {name}={'larger' if bigger else 'not larger'}")
        if name == "Q":
            triple = ring.monomial_poly([(1, 1), (2, 2), (3, 3)])
            exp.append("drop Q contains triple=yes")
            act.append(f"drop Q contains triple={_yn(ideal_member(triple, rest, order, budget))}")
    return CheckResult("decomposition.primary", "", "; ".join(exp), "; ".join(act))


def check_niermann(cfg: SuiteConfig) -> CheckResult:
    """The intersection identity on (block permanent, outside variables) pairs yields I3."""
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    _require(cfg.run_intersections, "intersection checks not enabled for this shape")
    lhs, rhs = niermann_sides(block_prime_pairs(ring), order, budget)
    I3 = unmixed_part(ring, 3)
    return CheckResult(
        "decomposition.niermann", "",
        "sides equal=yes; equals I3=yes",
        f"sides equal={_yn(ideal_equal(lhs, rhs, order, budget))}; "
        f"equals I3={_yn(ideal_equal(rhs, I3, order, budget))}",
    )


def check_gap_module(cfg: SuiteConfig) -> CheckResult:
    """Monomials of in(rad) outside in(P2): counted, identified, and killed by every variable."""
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    _require(ring.m >= 3 and ring.n >= 3, "needs m, n >= 3")
    P2 = permanental_ideal(ring)
    rad = radical_generators(ring)
    gaps = gap_monomials(P2, rad, order, budget=budget)
    gap_set = {u.exps for u in gaps}
    anti = {next(iter(p.terms)) for p in antidiagonal_products(ring)}
    in_P2 = [g.leading(order)[0] for g in P2.basis(order, budget)]

    def in_initial(e):
        return any(all(a <= b for a, b in zip(lm, e)) for lm in in_P2)

    closed = socle = 0
    for u in gaps:
        mults = []
        for v in range(ring.m * ring.n):
            e = list(u.exps)
            e[v] += 1
            mults.append(tuple(e))
        closed += all(in_initial(e) or e in gap_set for e in mults)
        socle += all(in_initial(e) for e in mults)
    k = gap_length_formula(ring.shape)
    n_anti = sum(1 for u in gaps if u.exps in anti)
    return CheckResult(
        "gap.module", "",
        f"gap monomials={k}; anti-diagonal={k}; multiples in in(P2) or gap={k}",
        f"gap monomials={len(gaps)}; anti-diagonal={n_anti}; multiples in in(P2) or gap={closed}",
        detail=f"gap monomials with every variable multiple in in(P2): {socle}",
    )


def check_integral_closure(cfg: SuiteConfig) -> CheckResult:
    """w = x41 x32 x23 x14 is outside P2 while w^2 lies in P2*P2."""
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    _require(ring.m >= 4 and ring.n >= 4, "needs m, n >= 4")
    P2 = permanental_ideal(ring)
    w = ring.monomial_poly([(4, 1), (3, 2), (2, 3), (1, 4)])
    f1 = ring.monomial_poly([(4, 1), (3, 2), (2, 3), (2, 3)])
    f2 = ring.monomial_poly([(4, 1), (3, 2), (1, 4), (1, 4)])
    # constructive route: product of the two quartic certificates
    c1 = quartic_certificate(ring, [(4, 1), (3, 2), (2, 3)], (1, 1, 2))
    c2 = quartic_certificate(ring, [(4, 1), (3, 2), (1, 4)], (1, 1, 2))
    prod = ring.zero()
    for a, g in c1:
        for b, h in c2:
            prod = prod + (a * b) * (g * h)
    square = ideal_product(P2, P2)
    return CheckResult(
        "closure.integral", "",
        "w in P2=no; factors in P2=yes; w^2 in P2*P2=yes; certificate product=w^2",
        f"w in P2={_yn(ideal_member(w, P2, order, budget))}; "
        f"factors in P2={_yn(ideal_member(f1, P2, order, budget) and ideal_member(f2, P2, order, budget))}; "
        f"w^2 in P2*P2={_yn(graded_member(w * w, square))}; "
        f"certificate product={'w^2' if prod == w * w else 'differs'}",
    )


def check_certificates(cfg: SuiteConfig) -> CheckResult:
    """Every cubic and quartic monomial pattern expands exactly from subpermanent multiples."""
    ring = cfg.ring
    _require_char_not_2(ring)
    P2gens = set(subpermanents(ring))
    pats21 = cubic_patterns(ring)
    ok21 = 0
    for ents in pats21:
        cert = cubic_certificate(ring, ents)
        if all(g in P2gens for _, g in cert) and expand_certificate(cert, ring) == ring.monomial_poly(ents):
            ok21 += 1
    pats22 = quartic_patterns(ring) if ring.m >= 3 and ring.n >= 3 else []
    ok22 = 0
    for ents, ex in pats22:
        cert = quartic_certificate(ring, ents, ex)
        target = ring.monomial_poly([e for e, k in zip(ents, ex) for _ in range(k)])
        if all(g in P2gens for _, g in cert) and expand_certificate(cert, ring) == target:
            ok22 += 1
    monos = [e for e in claimed_gb(ring) if e.kind != 1]
    okc = sum(
        1 for e in monos
        if expand_certificate(certificate_for(ring, e), ring) == e.polynomial
    )
    return CheckResult(
        "certificates.membership", "",
        f"two-row/three-column patterns {len(pats21)}; quartic patterns {len(pats22)}; claimed monomials {len(monos)}",
        f"two-row/three-column patterns {ok21}; quartic patterns {ok22}; claimed monomials {okc}",
    )


def min_parameter_support_bruteforce(ring: Ring) -> int:
    """Smallest support of an all-ones linear form avoiding every minimal prime."""
    cells = [(i, j) for i in range(1, ring.m + 1) for j in range(1, ring.n + 1)]
    primes = minimal_primes(ring)
    for size in range(1, len(cells) + 1):
        for supp in combinations(cells, size):
            if is_parameter(LinearForm.ones(supp), primes):
                return size
    return len(cells)


def min_hitting_set(ring: Ring) -> int:
    """Smallest cell set meeting every row (n>=3), every column (m>=3) and every 2x2 block."""
    m, n = ring.m, ring.n
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    families = []
    if n >= 3:
        families += [{(i, j) for j in range(1, n + 1)} for i in range(1, m + 1)]
    if m >= 3:
        families += [{(i, j) for i in range(1, m + 1)} for j in range(1, n + 1)]
    for rows in combinations(range(1, m + 1), 2):
        for cols in combinations(range(1, n + 1), 2):
            families.append({(i, j) for i in rows for j in cols})
    best = len(cells)
    for mask in range(1 << len(cells)):
        k = bin(mask).count("1")
        if k >= best:
            continue
        chosen = {cells[b] for b in range(len(cells)) if mask >> b & 1}
        if all(fam & chosen for fam in families):
            best = k
    return best


def check_parameters(cfg: SuiteConfig) -> CheckResult:
    """Off-block forms sit in block primes, the all-ones form is a parameter, supports are never sparse."""
    ring, order, budget = cfg.ring, cfg.order, cfg.budget
    _require_char_not_2(ring)
    primes = minimal_primes(ring)
    blocks = [P for P in primes if P.kind == "block"]
    cells = [(i, j) for i in range(1, ring.m + 1) for j in range(1, ring.n + 1)]
    off_struct = off_member = 0
    for P in blocks:
        form = LinearForm.ones(P.variable_entries())
        off_struct += linear_form_in_prime(form, P)
        off_member += ideal_member(form.to_polynomial(ring), P.ideal(), order, budget)
    ones = LinearForm.ones(cells)
    poly = ones.to_polynomial(ring)
    struct_hits = sum(linear_form_in_prime(ones, P) for P in primes)
    member_hits = sum(ideal_member(poly, P.ideal(), order, budget) for P in primes)
    exp = [f"off-block forms in block prime={len(blocks)}/{len(blocks)}", "all-ones in primes=0/0"]
    act = [f"off-block forms in block prime={off_struct}/{off_member}", f"all-ones in primes={struct_hits}/{member_hits}"]
    if ring.m * ring.n <= 12:
        exp.append(f"min parameter support={min_hitting_set(ring)}")
        act.append(f"min parameter support={min_parameter_support_bruteforce(ring)}")
    return CheckResult("primes.parameters", "", "; ".join(exp), "; ".join(act))


CHECKS: Dict[str, Callable[[SuiteConfig], CheckResult]] = {
    "gb.equality": check_gb_equality,
    "gb.bare-generators": check_bare_generators,
    "char2.contrast": check_char2_contrast,
    "radical.basis": check_radical,
    "radical.intersection": check_radical_is_intersection,
    "primes.minimal": check_minimal_primes,
    "primes.components": check_minimal_components,
    "primes.parameters": check_parameters,
    "decomposition.primary": check_primary_decomposition,
    "decomposition.niermann": check_niermann,
    "gap.module": check_gap_module,
    "closure.integral": check_integral_closure,
    "certificates.membership": check_certificates,
}


def run_check(check_id: str, cfg: SuiteConfig) -> CheckResult:
    fn = CHECKS[check_id]
    t0 = time.perf_counter()
    try:
        res = fn(cfg)
        res.status = "pass" if res.expected == res.actual else "fail"
    except Skip as exc:
        res = CheckResult(check_id, "skipped", detail=str(exc))
    except BudgetExceeded as exc:
        res = CheckResult(check_id, "timeout", detail=str(exc))
    res.id = check_id
    res.elapsed = time.perf_counter() - t0
    return res


def run_suite(
    ring: Ring,
    order: TermOrder = TermOrder(),
    budget: Optional[Budget] = Budget(time_ms=60_000),
    checks: Optional[Sequence[str]] = None,
    intersections: Optional[bool] = None,
) -> Report:
    """Run every requested check (all by default); results sorted by id."""
    cfg = SuiteConfig(ring, order, budget, intersections)
    ids = list(CHECKS) if checks is None else list(checks)
    unknown = [c for c in ids if c not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    results = [run_check(c, cfg) for c in ids]
    results.sort(key=lambda r: r.id)
    return Report(ring.shape, ring.field, order, results)
