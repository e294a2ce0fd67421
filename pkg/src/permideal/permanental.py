"""Permanental ideals of a generic matrix and their explicit structure.

Builds the 2x2 permanental ideal, the candidate Groebner bases of it and of its
radical, constructive membership certificates for the cubic and quartic
monomials it contains, the minimal primes, the unmixed parts and the embedded
component, together with the counting formulas that go with them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import AlgebraError, Polynomial, Ring, Shape, TermOrder, VarRef
from .groebner import (
    DIAG,
    Budget,
    Ideal,
    ideal_contained,
    ideal_equal,
    ideal_member,
    ideal_sum,
    intersect_all,
)

Entry = Tuple[int, int]


class PatternError(AlgebraError):
    """Entries do not match the shape a certificate construction needs."""


class UnsupportedCharacteristic(AlgebraError):
    pass


class UndefinedPartError(AlgebraError):
    pass


class HypothesisViolation(AlgebraError):
    """Inputs to the Niermann identity violate its containment hypothesis."""


# -- matrices and permanents -------------------------------------------------


@dataclass(frozen=True)
class GenericMatrix:
    ring: Ring

    @property
    def shape(self) -> Shape:
        return self.ring.shape

    def entry(self, i: int, j: int) -> Polynomial:
        return self.ring.x(i, j)

    def transpose_entry(self, e: Entry) -> Entry:
        return (e[1], e[0])


def permanent(ring: Ring, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """Permanent of the submatrix on ``rows`` x ``cols``."""
    if len(rows) != len(cols):
        raise ValueError(f"non-square selection: {len(rows)} rows, {len(cols)} columns")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("repeated row or column in selection")
    terms: Dict[tuple, int] = {}
    for sigma in permutations(cols):
        e = [0] * ring.nvars
        for i, j in zip(rows, sigma):
            e[ring.index(VarRef.matrix(i, j))] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(ring, terms)


def permanental_ideal(ring: Ring, r: int = 2) -> Ideal:
    """Ideal of all r x r subpermanents, generators in row-major selection order."""
    if not 1 <= r <= min(ring.m, ring.n):
        raise ValueError(f"r={r} out of range for a {ring.m}x{ring.n} matrix")
    gens = [
        permanent(ring, rows, cols)
        for rows in combinations(range(1, ring.m + 1), r)
        for cols in combinations(range(1, ring.n + 1), r)
    ]
    return Ideal(ring, gens, name=f"P{r}")


def subpermanents(ring: Ring) -> List[Polynomial]:
    return list(permanental_ideal(ring, 2).generators)


# -- the explicit Groebner bases --------------------------------------------


@dataclass(frozen=True)
class ClaimedBasisElement:
    kind: int
    entries: Tuple[Entry, ...]
    exponents: Tuple[int, ...]
    polynomial: Polynomial = field(compare=False)

    def __str__(self):
        return f"type {self.kind}: {self.polynomial}"


def _mono(ring: Ring, entries, exps=None) -> Polynomial:
    exps = exps or (1,) * len(entries)
    flat = [e for e, k in zip(entries, exps) for _ in range(k)]
    return ring.monomial_poly(flat)


def _cubic_types(ring: Ring, squarefree_antidiagonal: bool) -> List[ClaimedBasisElement]:
    m, n = ring.m, ring.n
    R, C = range(1, m + 1), range(1, n + 1)
    out = []
    # two rows, three columns: lower row carries two entries
    for i2, i1 in combinations(R, 2):
        for j1, j2, j3 in combinations(C, 3):
            ents = ((i1, j1), (i1, j2), (i2, j3))
            out.append(ClaimedBasisElement(2, ents, (1, 1, 1), _mono(ring, ents)))
    for i2, i1 in combinations(R, 2):
        for j1, j2, j3 in combinations(C, 3):
            ents = ((i1, j1), (i2, j2), (i2, j3))
            out.append(ClaimedBasisElement(3, ents, (1, 1, 1), _mono(ring, ents)))
    # three rows, two columns
    for i1, i2, i3 in combinations(R, 3):
        for j2, j1 in combinations(C, 2):
            ents = ((i1, j1), (i2, j1), (i3, j2))
            out.append(ClaimedBasisElement(4, ents, (1, 1, 1), _mono(ring, ents)))
    for i1, i2, i3 in combinations(R, 3):
        for j2, j1 in combinations(C, 2):
            ents = ((i1, j1), (i2, j2), (i3, j2))
            out.append(ClaimedBasisElement(5, ents, (1, 1, 1), _mono(ring, ents)))
    # anti-diagonals of 3x3 submatrices
    splits = [(1, 1, 1)] if squarefree_antidiagonal else [(2, 1, 1), (1, 2, 1), (1, 1, 2)]
    for i1, i2, i3 in combinations(R, 3):
        for j3, j2, j1 in combinations(C, 3):
            ents = ((i1, j1), (i2, j2), (i3, j3))
            for ex in splits:
                out.append(ClaimedBasisElement(6, ents, ex, _mono(ring, ents, ex)))
    return out


def _permanent_types(ring: Ring) -> List[ClaimedBasisElement]:
    out = []
    for i, k in combinations(range(1, ring.m + 1), 2):
        for j, l in combinations(range(1, ring.n + 1), 2):
            ents = ((i, j), (k, l), (k, j), (i, l))
            out.append(ClaimedBasisElement(1, ents, (1, 1, 1, 1), permanent(ring, (i, k), (j, l))))
    return out


def claimed_gb(ring: Ring) -> List[ClaimedBasisElement]:
    """Explicit reduced Groebner basis of P2: subpermanents plus five monomial families."""
    return _permanent_types(ring) + _cubic_types(ring, squarefree_antidiagonal=False)


def claimed_radical_gb(ring: Ring) -> List[ClaimedBasisElement]:
    """Same families with squarefree anti-diagonal triples (needs m, n >= 3)."""
    return _permanent_types(ring) + _cubic_types(ring, squarefree_antidiagonal=True)


def gb_count_formula(shape: Shape) -> int:
    m, n = shape.m, shape.n
    return (
        comb(m, 2) * comb(n, 2)
        + 2 * comb(m, 2) * comb(n, 3)
        + 2 * comb(n, 2) * comb(m, 3)
        + 3 * comb(m, 3) * comb(n, 3)
    )


def canonical_set(polys: Sequence[Polynomial], order: TermOrder = DIAG) -> List[Polynomial]:
    """Monic copies sorted descending by leading monomial."""
    key = order.key(polys[0].ring.shape) if polys else None
    monic = [p.monic(order) for p in polys]
    return sorted(monic, key=lambda p: key(p.leading(order)[0]), reverse=True)


# -- radical -----------------------------------------------------------------


def squarefree_triples(ring: Ring) -> List[Polynomial]:
    """Distinct monomials x_ip x_jq x_kr with i, j, k distinct and p, q, r distinct."""
    out = []
    for rows in combinations(range(1, ring.m + 1), 3):
        for cols in combinations(range(1, ring.n + 1), 3):
            for sigma in permutations(cols):
                out.append(ring.monomial_poly(zip(rows, sigma)))
    return out


def radical_generators(ring: Ring) -> Ideal:
    """P2 plus every squarefree triple on three rows and three columns."""
    P2 = permanental_ideal(ring, 2)
    if ring.m < 3 or ring.n < 3:
        return Ideal(ring, P2.generators, name="rad")
    return Ideal(ring, P2.generators + tuple(squarefree_triples(ring)), name="rad")


# -- membership certificates -------------------------------------------------

Certificate = List[Tuple[Polynomial, Polynomial]]


def expand_certificate(cert: Certificate, ring: Ring) -> Polynomial:
    total = ring.zero()
    for cof, gen in cert:
        total = total + cof * gen
    return total


def _half(ring: Ring):
    if not ring.field.two_is_unit():
        raise UnsupportedCharacteristic("certificates need 2 to be invertible")
    return ring.field.inv(ring.field.coerce(2))


def cubic_certificate(ring: Ring, entries: Sequence[Entry]) -> Certificate:
    """Write a cubic monomial on two rows x three columns (or the transpose) in P2.

    Returns ``[(cofactor, subpermanent), ...]`` summing exactly to the product of
    ``entries``.  With the block [[a, b, c], [x, y, z]] and target ``b*c*x`` the
    combination is ``(c*(ay+bx) - a*(bz+cy) + b*(cx+az)) / 2``.
    """
    half = _half(ring)
    ents = [tuple(e) for e in entries]
    if len(ents) != 3:
        raise PatternError("need exactly three entries")
    for i, j in ents:
        if not (1 <= i <= ring.m and 1 <= j <= ring.n):
            raise PatternError(f"entry ({i},{j}) outside the matrix")
    rows = {i for i, _ in ents}
    cols = {j for _, j in ents}
    if len(cols) == 3 and len(rows) == 2:
        transposed = False
    elif len(rows) == 3 and len(cols) == 2:
        transposed = True
        ents = [(j, i) for i, j in ents]
    else:
        raise PatternError(f"entries {entries} span neither 2 rows x 3 columns nor 3 rows x 2 columns")

    # lonely entry sits alone in its row; the pair shares the other row
    by_row: Dict[int, List[Entry]] = {}
    for e in ents:
        by_row.setdefault(e[0], []).append(e)
    (r_lone, lone), = [(r, es[0]) for r, es in by_row.items() if len(es) == 1]
    (r_pair, pair), = [(r, es) for r, es in by_row.items() if len(es) == 2]
    c_x = lone[1]
    c_b, c_c = pair[0][1], pair[1][1]

    def var(i, j):
        return ring.x(j, i) if transposed else ring.x(i, j)

    a, b, c = var(r_pair, c_x), var(r_pair, c_b), var(r_pair, c_c)
    x, y, z = var(r_lone, c_x), var(r_lone, c_b), var(r_lone, c_c)
    g1 = a * y + b * x
    g2 = b * z + c * y
    g3 = c * x + a * z
    return [(c.scale(half), g1), (a.scale(-half), g2), (b.scale(half), g3)]


def quartic_certificate(ring: Ring, entries: Sequence[Entry], exponents: Sequence[int]) -> Certificate:
    """Certificate for a quartic monomial on three rows and three columns.

    ``exponents`` is a permutation of (2, 1, 1).  With ``w`` the squared entry,
    ``y`` another entry and ``v``, ``z`` completing their 2x2 block,
    ``a*y*w^2 = a*w*(y*w + v*z) - z*(a*w*v)`` and ``a*w*v`` is cubic on two rows.
    """
    ents = [tuple(e) for e in entries]
    exps = list(exponents)
    if len(ents) != 3 or len(exps) != 3 or any(k < 1 for k in exps):
        raise PatternError("need three entries with positive exponents")
    if sum(exps) != 4:
        raise PatternError(f"exponents {tuple(exps)} do not sum to 4")
    if len({i for i, _ in ents}) != 3 or len({j for _, j in ents}) != 3:
        raise PatternError("entries must lie on three distinct rows and three distinct columns")
    if ring.m < 3 or ring.n < 3:
        raise PatternError("needs at least a 3x3 matrix")
    half = _half(ring)
    del half
    k_w = exps.index(2)
    w_e = ents[k_w]
    a_e, y_e = [e for k, e in enumerate(ents) if k != k_w]
    v_e = (w_e[0], y_e[1])
    z_e = (y_e[0], w_e[1])
    a, y, w = ring.x(*a_e), ring.x(*y_e), ring.x(*w_e)
    v, z = ring.x(*v_e), ring.x(*z_e)
    block = y * w + v * z
    inner = cubic_certificate(ring, [a_e, w_e, v_e])
    cert: Certificate = [(a * w, block)]
    cert += [(-(z * cof), gen) for cof, gen in inner]
    return cert


def cubic_patterns(ring: Ring) -> List[Tuple[Entry, Entry, Entry]]:
    """Every entry triple on 2 rows x 3 distinct columns or 3 distinct rows x 2 columns."""
    out = []
    for cols in combinations(range(1, ring.n + 1), 3):
        for rows in combinations(range(1, ring.m + 1), 2):
            for choice in product(rows, repeat=3):
                if len(set(choice)) == 2:
                    out.append(tuple(zip(choice, cols)))
    for rows in combinations(range(1, ring.m + 1), 3):
        for cols in combinations(range(1, ring.n + 1), 2):
            for choice in product(cols, repeat=3):
                if len(set(choice)) == 2:
                    out.append(tuple(zip(rows, choice)))
    return out


def quartic_patterns(ring: Ring) -> List[Tuple[Tuple[Entry, Entry, Entry], Tuple[int, int, int]]]:
    out = []
    for rows in combinations(range(1, ring.m + 1), 3):
        for cols in combinations(range(1, ring.n + 1), 3):
            for sigma in permutations(cols):
                for ex in ((2, 1, 1), (1, 2, 1), (1, 1, 2)):
                    out.append((tuple(zip(rows, sigma)), ex))
    return out


def certificate_for(ring: Ring, el: ClaimedBasisElement) -> Optional[Certificate]:
    """Constructive membership certificate for a monomial element of the claimed basis."""
    if el.kind == 1:
        return [(ring.one(), el.polynomial)]
    if el.kind in (2, 3, 4, 5):
        return cubic_certificate(ring, el.entries)
    if sum(el.exponents) == 4:
        return quartic_certificate(ring, el.entries, el.exponents)
    return None


# -- minimal primes ----------------------------------------------------------


@dataclass(frozen=True)
class MinimalPrime:
    """One of the three families of minimal primes over P2.

    ``kind`` is ``row`` (all variables except those of ``rows[0]``), ``col``
    (all except column ``cols[0]``) or ``block`` (the permanent of the block
    ``rows`` x ``cols`` plus every variable outside it).
    """

    kind: str
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    ring: Ring = field(compare=False, repr=False)

    @property
    def label(self) -> str:
        if self.kind == "row":
            return f"row-complement(keep row {self.rows[0]})"
        if self.kind == "col":
            return f"col-complement(keep col {self.cols[0]})"
        return f"block(rows {self.rows}, cols {self.cols})"

    def variable_entries(self) -> List[Entry]:
        m, n = self.ring.m, self.ring.n
        every = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
        if self.kind == "row":
            return [e for e in every if e[0] != self.rows[0]]
        if self.kind == "col":
            return [e for e in every if e[1] != self.cols[0]]
        return [e for e in every if not (e[0] in self.rows and e[1] in self.cols)]

    def free_entries(self) -> List[Entry]:
        """Entries whose variables are not generators of the prime."""
        inside = set(self.variable_entries())
        return [(i, j) for i in range(1, self.ring.m + 1) for j in range(1, self.ring.n + 1)
                if (i, j) not in inside]

    @property
    def generators(self) -> List[Polynomial]:
        gens = [self.ring.x(i, j) for i, j in self.variable_entries()]
        if self.kind == "block":
            gens.append(permanent(self.ring, self.rows, self.cols))
        return gens

    @property
    def height(self) -> int:
        m, n = self.ring.m, self.ring.n
        return {"row": (m - 1) * n, "col": m * (n - 1), "block": m * n - 3}[self.kind]

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators, name=self.label)

    def quadric_rank(self) -> int:
        """Rank of the polar bilinear form of the block permanent (0 for monomial primes)."""
        if self.kind != "block":
            return 0
        q = permanent(self.ring, self.rows, self.cols)
        support = sorted({k for e in q.terms for k, x in enumerate(e) if x})
        pos = {k: r for r, k in enumerate(support)}
        gram = [[0] * len(support) for _ in support]
        for e, c in q.terms.items():
            idx = [k for k, x in enumerate(e) for _ in range(x)]
            a, b = pos[idx[0]], pos[idx[1]]
            if a == b:
                gram[a][a] += 2 * c
            else:
                gram[a][b] += c
                gram[b][a] += c
        return matrix_rank(gram, self.ring.field)


def matrix_rank(rows, fs) -> int:
    """Rank by Gaussian elimination over ``fs``."""
    rows = [[fs.coerce(v) for v in r] for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = fs.inv(rows[rank][col])
        rows[rank] = [fs.norm(v * inv) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [fs.norm(v - f * w) for v, w in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def minimal_primes(ring: Ring) -> List[MinimalPrime]:
    m, n = ring.m, ring.n
    out = []
    if n >= 3:
        out += [MinimalPrime("row", (i,), (), ring) for i in range(1, m + 1)]
    if m >= 3:
        out += [MinimalPrime("col", (), (j,), ring) for j in range(1, n + 1)]
    for rows in combinations(range(1, m + 1), 2):
        for cols in combinations(range(1, n + 1), 2):
            out.append(MinimalPrime("block", rows, cols, ring))
    return out


def component_count(shape: Shape) -> int:
    """Number of minimal primes.

    With two rows the only monomial primes keep one of the m rows, so the count
    is m + blocks (and n + blocks with two columns).
    """
    m, n = shape.m, shape.n
    blocks = comb(m, 2) * comb(n, 2)
    if m >= 3 and n >= 3:
        return m + n + blocks
    if m >= 3 and n == 2:
        return n + blocks
    if m == 2 and n >= 3:
        return m + blocks
    return 1


def component_count_as_printed(shape: Shape) -> int:
    """The piecewise count with the two-row and two-column cases as usually stated.

    Kept for comparison; it disagrees with the enumeration when min(m, n) == 2 < max(m, n).
    """
    m, n = shape.m, shape.n
    blocks = comb(m, 2) * comb(n, 2)
    if m >= 3 and n >= 3:
        return m + n + blocks
    if m >= 3 and n == 2:
        return m + blocks
    if m == 2 and n >= 3:
        return n + blocks
    return 1


def gap_length_formula(shape: Shape) -> int:
    return sum(comb(shape.m, i) * comb(shape.n, i) for i in range(3, min(shape.m, shape.n) + 1))


def antidiagonal_products(ring: Ring) -> List[Polynomial]:
    """Anti-diagonal products of every i x i submatrix, 3 <= i <= min(m, n)."""
    out = []
    for size in range(3, min(ring.m, ring.n) + 1):
        for rows in combinations(range(1, ring.m + 1), size):
            for cols in combinations(range(1, ring.n + 1), size):
                out.append(ring.monomial_poly(zip(rows, reversed(cols))))
    return out


# -- unmixed parts and the embedded component --------------------------------


def unmixed_part(ring: Ring, which: int) -> Ideal:
    """Explicit generators of the intersection of one family of minimal primes.

    1: products of two entries from distinct rows (needs n >= 3);
    2: products of two entries from distinct columns (needs m >= 3);
    3: P2 plus triples from three distinct rows or three distinct columns.
    """
    m, n = ring.m, ring.n
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    if which == 1:
        if n < 3:
            raise UndefinedPartError("the row-complement part needs n >= 3")
        gens = _dedup(ring.monomial_poly([a, b]) for a, b in combinations(cells, 2) if a[0] != b[0])
        return Ideal(ring, gens, name="I1")
    if which == 2:
        if m < 3:
            raise UndefinedPartError("the column-complement part needs m >= 3")
        gens = _dedup(ring.monomial_poly([a, b]) for a, b in combinations(cells, 2) if a[1] != b[1])
        return Ideal(ring, gens, name="I2")
    if which == 3:
        trip = []
        for rows in combinations(range(1, m + 1), 3):
            for cols in product(range(1, n + 1), repeat=3):
                trip.append(ring.monomial_poly(zip(rows, cols)))
        for cols in combinations(range(1, n + 1), 3):
            for rows in product(range(1, m + 1), repeat=3):
                trip.append(ring.monomial_poly(zip(rows, cols)))
        P2 = permanental_ideal(ring, 2)
        return Ideal(ring, P2.generators + tuple(_dedup(trip)), name="I3")
    raise UndefinedPartError(f"no unmixed part {which}")


def _dedup(polys) -> List[Polynomial]:
    seen, out = set(), []
    for p in polys:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def prime_family(ring: Ring, kind: str) -> List[MinimalPrime]:
    return [P for P in minimal_primes(ring) if P.kind == kind]


def embedded_Q(ring: Ring) -> Ideal:
    """P2 plus the square of every variable."""
    P2 = permanental_ideal(ring, 2)
    squares = [v * v for v in ring.matrix_vars()]
    return Ideal(ring, P2.generators + tuple(squares), name="Q")


# -- linear forms and parameters ---------------------------------------------


@dataclass(frozen=True)
class LinearForm:
    coefficients: Tuple[Tuple[Entry, object], ...]

    @classmethod
    def from_dict(cls, d: Dict[Entry, object]) -> "LinearForm":
        return cls(tuple(sorted((e, c) for e, c in d.items() if c)))

    @classmethod
    def ones(cls, support) -> "LinearForm":
        return cls.from_dict({e: 1 for e in support})

    @property
    def support(self) -> List[Entry]:
        return [e for e, _ in self.coefficients]

    def to_polynomial(self, ring: Ring) -> Polynomial:
        total = ring.zero()
        for (i, j), c in self.coefficients:
            total = total + ring.x(i, j).scale(c)
        return total


def linear_form_in_prime(a: LinearForm, P: MinimalPrime) -> bool:
    """Structural test: the form uses only variables that generate ``P``."""
    inside = set(P.variable_entries())
    return all(e in inside for e in a.support)


def is_parameter(a: LinearForm, primes: Sequence[MinimalPrime]) -> bool:
    return not any(linear_form_in_prime(a, P) for P in primes)


# -- Niermann's intersection identity ----------------------------------------


def niermann_sides(pairs: Sequence[Tuple[Ideal, Ideal]], order: TermOrder = DIAG,
                   budget: Optional[Budget] = None) -> Tuple[Ideal, Ideal]:
    """Both sides of the identity after checking the containment hypothesis."""
    if not pairs:
        raise ValueError("need at least one pair")
    for a, (Ia, _) in enumerate(pairs):
        for b, (_, Jb) in enumerate(pairs):
            if a != b and not ideal_contained(Ia, Jb, order, budget):
                raise HypothesisViolation(f"I_{a + 1} is not contained in J_{b + 1}")
    lhs = intersect_all([ideal_sum(I, J) for I, J in pairs], order, budget)
    ring = pairs[0][0].ring
    total = Ideal(ring, [g for I, _ in pairs for g in I.generators])
    rhs = ideal_sum(total, intersect_all([J for _, J in pairs], order, budget))
    return lhs, rhs


def niermann_check(pairs: Sequence[Tuple[Ideal, Ideal]], order: TermOrder = DIAG,
                   budget: Optional[Budget] = None) -> bool:
    lhs, rhs = niermann_sides(pairs, order, budget)
    return ideal_equal(lhs, rhs, order, budget)


def block_prime_pairs(ring: Ring) -> List[Tuple[Ideal, Ideal]]:
    """(block permanent, variables outside the block) for every 2x2 block."""
    out = []
    for P in prime_family(ring, "block"):
        I = Ideal(ring, [permanent(ring, P.rows, P.cols)])
        J = Ideal(ring, [ring.x(i, j) for i, j in P.variable_entries()])
        out.append((I, J))
    return out
