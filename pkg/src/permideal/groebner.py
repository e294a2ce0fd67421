"""Buchberger's algorithm, normal forms and ideal operations.

All lexicographic term orders are handled by permuting exponent vectors so that
the order becomes plain tuple comparison; the engine below only ever works in
those permuted coordinates.
"""

from __future__ import annotations

import heapq
import threading
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    AlgebraError,
    Exps,
    Monomial,
    Polynomial,
    Ring,
    ShapeMismatchError,
    FieldMismatchError,
    TermOrder,
    exps_coprime,
    exps_div,
    exps_divides,
    exps_lcm,
    exps_mul,
)

DIAG = TermOrder("diag-lex")


class BudgetExceeded(AlgebraError):
    """A Groebner computation ran past its time or step budget."""

    def __init__(self, message: str, stats: "GbStats"):
        super().__init__(message)
        self.stats = stats


class NotFiniteError(AlgebraError):
    """Gap enumeration did not close off below the degree cap."""


@dataclass(frozen=True)
class Budget:
    """Limits for one Groebner basis computation.  ``None`` means unlimited."""

    time_ms: Optional[int] = None
    max_steps: Optional[int] = None


@dataclass
class GbStats:
    s_pairs_processed: int = 0
    reductions_to_zero: int = 0
    elapsed: float = 0.0


@dataclass
class GbReport:
    basis: List[Polynomial]
    order: TermOrder
    s_pairs_processed: int = 0
    reductions_to_zero: int = 0
    elapsed: float = 0.0


# -- internal representation -------------------------------------------------

Internal = Dict[Exps, object]


def _perm_of(order: TermOrder, ring: Ring) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    perm = order.ranking(ring.shape)
    inv = [0] * len(perm)
    for r, i in enumerate(perm):
        inv[i] = r
    return perm, tuple(inv)


def _to_internal(f: Polynomial, perm) -> Internal:
    return {tuple([e[i] for i in perm]): c for e, c in f.terms.items()}


def _from_internal(d: Internal, ring: Ring, inv) -> Polynomial:
    return Polynomial(ring, {tuple([k[i] for i in inv]): c for k, c in d.items()}, normalized=True)


def _mask(e: Exps) -> int:
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


class _Basis:
    """Monic polynomials with cached leading data, in internal coordinates."""

    __slots__ = ("polys", "lms", "masks", "p")

    def __init__(self, p: int):
        self.polys: List[Internal] = []
        self.lms: List[Exps] = []
        self.masks: List[int] = []
        self.p = p

    def add(self, f: Internal) -> int:
        lm = max(f)
        c = f[lm]
        if c != 1:
            inv = pow(c, -1, self.p) if self.p else 1 / c
            f = {e: (v * inv) % self.p if self.p else v * inv for e, v in f.items()}
        self.polys.append(f)
        self.lms.append(lm)
        self.masks.append(_mask(lm))
        return len(self.polys) - 1


def _reduce(f: Internal, B: _Basis, active: Sequence[int], full: bool = True) -> Internal:
    """Remainder of ``f`` on division by the monic elements ``active`` of ``B``."""
    p = B.p
    f = dict(f)
    rem: Internal = {}
    lms, masks, polys = B.lms, B.masks, B.polys
    while f:
        lm = max(f)
        c = f[lm]
        mm = _mask(lm)
        hit = -1
        for g in active:
            if masks[g] & ~mm == 0 and exps_divides(lms[g], lm):
                hit = g
                break
        if hit < 0:
            rem[lm] = c
            del f[lm]
            if not full:
                rem.update(f)
                break
            continue
        q = exps_div(lm, lms[hit])
        for e, gc in polys[hit].items():
            ee = tuple([a + b for a, b in zip(e, q)])
            v = f.get(ee, 0) - c * gc
            if p:
                v %= p
            if v:
                f[ee] = v
            else:
                f.pop(ee, None)
    return rem


def _spoly(f: Internal, g: Internal, p: int) -> Internal:
    lf, lg = max(f), max(g)
    l = exps_lcm(lf, lg)
    cf, cg = f[lf], g[lg]
    if p:
        a, b = pow(cf, -1, p), pow(cg, -1, p)
    else:
        a, b = 1 / cf, 1 / cg
    qf, qg = exps_div(l, lf), exps_div(l, lg)
    out: Internal = {}
    for e, c in f.items():
        out[exps_mul(e, qf)] = c * a
    for e, c in g.items():
        ee = exps_mul(e, qg)
        out[ee] = out.get(ee, 0) - c * b
    res = {}
    for e, c in out.items():
        if p:
            c %= p
        if c:
            res[e] = c
    return res


class _Clock:
    def __init__(self, budget: Optional[Budget], stats: GbStats):
        self.t0 = time.perf_counter()
        self.stats = stats
        self.deadline = None
        self.max_steps = None
        if budget is not None:
            if budget.time_ms is not None:
                self.deadline = self.t0 + budget.time_ms / 1000.0
            self.max_steps = budget.max_steps

    def tick(self):
        st = self.stats
        if self.max_steps is not None and st.s_pairs_processed > self.max_steps:
            st.elapsed = time.perf_counter() - self.t0
            raise BudgetExceeded(f"step budget of {self.max_steps} S-pairs exceeded", st)
        if self.deadline is not None and time.perf_counter() > self.deadline:
            st.elapsed = time.perf_counter() - self.t0
            raise BudgetExceeded(f"time budget exceeded after {st.elapsed:.2f}s", st)


def _buchberger_internal(
    gens: List[Internal], p: int, budget: Optional[Budget], chain: bool
) -> Tuple[List[Internal], GbStats]:
    stats = GbStats()
    clock = _Clock(budget, stats)
    B = _Basis(p)
    active: List[int] = []
    pairs: Dict[Tuple[int, int], Exps] = {}
    heap: list = []

    def update(h: int):
        nonlocal active
        lh = B.lms[h]
        if not chain:
            for g in active:
                if not exps_coprime(B.lms[g], lh):
                    l = exps_lcm(B.lms[g], lh)
                    pairs[(g, h)] = l
                    heapq.heappush(heap, (sum(l), l, g, h))
            active.append(h)
            return
        cand = [(g, exps_lcm(B.lms[g], lh)) for g in active]
        kept: List[Tuple[int, Exps]] = []
        for idx, (g, l) in enumerate(cand):
            if exps_coprime(B.lms[g], lh):
                kept.append((g, l))
                continue
            if any(exps_divides(l2, l) for _, l2 in cand[idx + 1:]):
                continue
            if any(exps_divides(l2, l) for _, l2 in kept):
                continue
            kept.append((g, l))
        for key in list(pairs):
            l = pairs[key]
            a, b = key
            if (
                exps_divides(lh, l)
                and exps_lcm(B.lms[a], lh) != l
                and exps_lcm(B.lms[b], lh) != l
            ):
                del pairs[key]
        for g, l in kept:
            if not exps_coprime(B.lms[g], lh):
                pairs[(g, h)] = l
                heapq.heappush(heap, (sum(l), l, g, h))
        active = [g for g in active if not exps_divides(lh, B.lms[g])]
        active.append(h)

    def insert(h_poly: Internal) -> bool:
        h = B.add(h_poly)
        if not any(B.lms[h]):
            return True  # unit ideal
        update(h)
        return False

    unit = False
    for f in gens:
        h = _reduce(f, B, active)
        if h and insert(h):
            unit = True
            break

    while heap and not unit:
        _, _, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        clock.tick()
        stats.s_pairs_processed += 1
        h = _reduce(_spoly(B.polys[i], B.polys[j], p), B, active)
        if not h:
            stats.reductions_to_zero += 1
            continue
        if insert(h):
            unit = True

    if unit:
        one = (0,) * len(B.lms[-1])
        stats.elapsed = time.perf_counter() - clock.t0
        return [{one: 1}], stats

    # the chain-criterion path prunes as it goes; otherwise drop non-minimal leads here
    active = [g for g in active
              if not any(k != g and exps_divides(B.lms[k], B.lms[g]) for k in active)]
    out = []
    for g in active:
        others = [k for k in active if k != g]
        lm = B.lms[g]
        tail = {e: c for e, c in B.polys[g].items() if e != lm}
        red = _reduce(tail, B, others)
        red[lm] = 1
        out.append(red)
    out.sort(key=max, reverse=True)
    stats.elapsed = time.perf_counter() - clock.t0
    return out, stats


# -- public operations -------------------------------------------------------


def _common_ring(polys: Iterable[Polynomial]) -> Ring:
    ring = None
    for f in polys:
        if ring is None:
            ring = f.ring
        elif f.ring.shape != ring.shape:
            raise ShapeMismatchError(f"{ring.shape} vs {f.ring.shape}")
        elif f.ring.field != ring.field:
            raise FieldMismatchError(f"{ring.field.name} vs {f.ring.field.name}")
    return ring


def buchberger(
    gens: Sequence[Polynomial],
    order: TermOrder = DIAG,
    budget: Optional[Budget] = None,
    chain_criterion: bool = True,
) -> GbReport:
    """Canonical reduced Groebner basis of the ideal generated by ``gens``.

    The basis is monic, interreduced and sorted descending by leading monomial.
    Raises :class:`BudgetExceeded` (carrying partial statistics) when the budget
    runs out.
    """
    gens = [g for g in gens if g]
    if not gens:
        return GbReport([], order)
    ring = _common_ring(gens)
    perm, inv = _perm_of(order, ring)
    internal = [_to_internal(g, perm) for g in gens]
    basis, stats = _buchberger_internal(internal, ring.field.characteristic, budget, chain_criterion)
    polys = [_from_internal(b, ring, inv) for b in basis]
    return GbReport(polys, order, stats.s_pairs_processed, stats.reductions_to_zero, stats.elapsed)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder = DIAG) -> Polynomial:
    """Fully reduced remainder of ``f`` on division by ``basis`` (in list order)."""
    if not basis:
        return f
    ring = _common_ring([f, *basis])
    perm, inv = _perm_of(order, ring)
    B = _Basis(ring.field.characteristic)
    for g in basis:
        if not g:
            raise ValueError("basis elements must be nonzero")
        B.add(_to_internal(g, perm))
    rem = _reduce(_to_internal(f, perm), B, range(len(basis)))
    return _from_internal(rem, ring, inv)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = DIAG) -> Polynomial:
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    ring = _common_ring([f, g])
    perm, inv = _perm_of(order, ring)
    return _from_internal(_spoly(_to_internal(f, perm), _to_internal(g, perm), ring.field.characteristic), ring, inv)


def is_groebner_basis(basis: Sequence[Polynomial], order: TermOrder = DIAG) -> bool:
    """True iff every S-pair of ``basis`` reduces to zero."""
    basis = list(basis)
    if any(not g for g in basis):
        raise ValueError("basis elements must be nonzero")
    if len(basis) <= 1:
        return True
    ring = _common_ring(basis)
    perm, _ = _perm_of(order, ring)
    p = ring.field.characteristic
    B = _Basis(p)
    for g in basis:
        B.add(_to_internal(g, perm))
    idx = range(len(basis))
    for i in idx:
        for j in range(i + 1, len(basis)):
            if _reduce(_spoly(B.polys[i], B.polys[j], p), B, idx):
                return False
    return True


# -- ideals ------------------------------------------------------------------


class Ideal:
    """Finitely generated ideal with a per-order cache of reduced Groebner bases."""

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = (), name: str = ""):
        gens = []
        for g in generators:
            if g.ring.shape != ring.shape:
                raise ShapeMismatchError(f"{ring.shape} vs {g.ring.shape}")
            if g.ring.field != ring.field:
                raise FieldMismatchError(f"{ring.field.name} vs {g.ring.field.name}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self.name = name
        self._cache: Dict[TermOrder, GbReport] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Ideal{label}: {len(self.generators)} generators in {self.ring.m}x{self.ring.n}>"

    def __len__(self):
        return len(self.generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def groebner(self, order: TermOrder = DIAG, budget: Optional[Budget] = None) -> GbReport:
        hit = self._cache.get(order)
        if hit is not None:
            return hit
        report = buchberger(self.generators, order, budget)
        with self._lock:
            return self._cache.setdefault(order, report)

    def seed_basis(self, order: TermOrder, report: GbReport):
        with self._lock:
            self._cache.setdefault(order, report)

    def basis(self, order: TermOrder = DIAG, budget: Optional[Budget] = None) -> List[Polynomial]:
        return self.groebner(order, budget).basis

    def contains(self, f: Polynomial, order: TermOrder = DIAG, budget: Optional[Budget] = None) -> bool:
        return ideal_member(f, self, order, budget)

    def leading_monomials(self, order: TermOrder = DIAG, budget: Optional[Budget] = None) -> List[Exps]:
        return [g.leading(order)[0] for g in self.basis(order, budget)]

    def with_field(self, fs) -> "Ideal":
        return Ideal(self.ring.with_field(fs), [g.with_field(fs) for g in self.generators], self.name)


def _check_same(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        if I.ring.shape != J.ring.shape:
            raise ShapeMismatchError(f"{I.ring.shape} vs {J.ring.shape}")
        raise FieldMismatchError(f"{I.ring.field.name} vs {J.ring.field.name}")


def ideal_member(f: Polynomial, I: Ideal, order: TermOrder = DIAG, budget: Optional[Budget] = None) -> bool:
    if not f:
        return True
    basis = I.basis(order, budget)
    return not normal_form(f, basis, order) if basis else False


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check_same(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _check_same(I, J)
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def ideal_equal(I: Ideal, J: Ideal, order: TermOrder = DIAG, budget: Optional[Budget] = None) -> bool:
    """Bit-exact comparison of canonical reduced bases."""
    _check_same(I, J)
    return I.basis(order, budget) == J.basis(order, budget)


def ideal_contained(I: Ideal, J: Ideal, order: TermOrder = DIAG, budget: Optional[Budget] = None) -> bool:
    """True iff every generator of ``I`` lies in ``J``."""
    _check_same(I, J)
    return all(ideal_member(g, J, order, budget) for g in I.generators)


def eliminate(I: Ideal, order: TermOrder, budget: Optional[Budget] = None) -> Ideal:
    """Intersection of ``I`` with the subring without ``t``.

    ``order`` must be an elimination order.  The result carries its reduced basis
    for ``order.base`` already cached.
    """
    if not order.is_elim:
        raise ValueError("eliminate needs an elimination order (t above all matrix variables)")
    report = I.groebner(order, budget)
    kept = [g for g in report.basis if not g.uses_t()]
    out = Ideal(I.ring, kept)
    out.seed_basis(order.base, GbReport(kept, order.base, report.s_pairs_processed,
                                        report.reductions_to_zero, report.elapsed))
    return out


def minimalize_monomials(monos: Iterable[Exps]) -> List[Exps]:
    """Minimal generators of a monomial ideal, sorted for determinism."""
    uniq = sorted(set(monos), key=lambda e: (sum(e), e))
    kept: List[Exps] = []
    for e in uniq:
        if not any(exps_divides(k, e) for k in kept):
            kept.append(e)
    return kept


def monomial_intersection(I: Ideal, J: Ideal) -> Ideal:
    _check_same(I, J)
    if not (I.is_monomial() and J.is_monomial()):
        raise ValueError("monomial fast path needs monomial ideals")
    a = [next(iter(g.terms)) for g in I.generators]
    b = [next(iter(g.terms)) for g in J.generators]
    lcms = minimalize_monomials(exps_lcm(x, y) for x in a for y in b)
    return Ideal(I.ring, [Polynomial(I.ring, {e: 1}, normalized=False) for e in lcms])


def ideal_intersection(
    I: Ideal, J: Ideal, order: TermOrder = DIAG, budget: Optional[Budget] = None
) -> Ideal:
    """``I`` intersected with ``J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    _check_same(I, J)
    if any(g.uses_t() for g in I.generators + J.generators):
        raise ValueError("intersection inputs must not involve t")
    if not I.generators or not J.generators:
        return Ideal(I.ring, [])
    if I.is_monomial() and J.is_monomial():
        return monomial_intersection(I, J)
    ring = I.ring
    t = ring.t()
    s = ring.one() - t
    lifted = Ideal(ring, [t * f for f in I.generators] + [s * g for g in J.generators])
    return eliminate(lifted, order.elim() if not order.is_elim else order, budget)


def intersect_all(ideals: Sequence[Ideal], order: TermOrder = DIAG, budget: Optional[Budget] = None) -> Ideal:
    """Left fold of pairwise intersections, smallest generator count first."""
    if not ideals:
        raise ValueError("empty intersection")
    ordered = sorted(ideals, key=len)
    acc = ordered[0]
    for nxt in ordered[1:]:
        acc = ideal_intersection(acc, nxt, order, budget)
    return acc


def radical_member(f: Polynomial, I: Ideal, order: TermOrder = DIAG, budget: Optional[Budget] = None) -> bool:
    """Rabinowitsch test: some power of ``f`` lies in ``I`` iff ``1 in I + <1 - t f>``."""
    if not f:
        raise ValueError("radical membership of the zero polynomial")
    if f.uses_t() or any(g.uses_t() for g in I.generators):
        raise ValueError("radical membership needs t-free inputs")
    if ideal_member(f, I, order, budget):
        return True
    ring = I.ring
    J = Ideal(ring, I.generators + (ring.one() - ring.t() * f,))
    basis = J.basis(order, budget)
    return len(basis) == 1 and basis[0] == ring.one()


def power_member(f: Polynomial, I: Ideal, max_power: int = 4, order: TermOrder = DIAG,
                 budget: Optional[Budget] = None) -> Optional[int]:
    """Smallest ``k <= max_power`` with ``f**k`` in ``I``, else ``None``."""
    g = f
    for k in range(1, max_power + 1):
        if ideal_member(g, I, order, budget):
            return k
        g = g * f
    return None


def in_monomial_ideal(e: Exps, gens: Sequence[Exps]) -> bool:
    return any(exps_divides(g, e) for g in gens)


def gap_monomials(
    I: Ideal,
    J: Ideal,
    order: TermOrder = DIAG,
    degree_cap: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> List[Monomial]:
    """Monomials in in(J) but not in in(I), for ``I`` contained in ``J``.

    Breadth-first from the minimal generators of in(J), multiplying by single
    matrix variables.  Raises :class:`NotFiniteError` when a survivor exceeds
    ``degree_cap`` (default ``m + n``).
    """
    _check_same(I, J)
    if not ideal_contained(I, J, order, budget):
        raise ValueError("gap_monomials needs I contained in J")
    ring = I.ring
    cap = degree_cap if degree_cap is not None else ring.m + ring.n
    in_I = [g.leading(order)[0] for g in I.basis(order, budget)]
    in_J = [g.leading(order)[0] for g in J.basis(order, budget)]
    nmat = ring.m * ring.n
    seen = set()
    frontier = [e for e in in_J if not in_monomial_ideal(e, in_I)]
    found: List[Exps] = []
    while frontier:
        nxt = []
        for e in frontier:
            if e in seen:
                continue
            seen.add(e)
            if sum(e) > cap:
                raise NotFiniteError(f"gap monomial of degree {sum(e)} exceeds cap {cap}")
            found.append(e)
            for v in range(nmat):
                u = list(e)
                u[v] += 1
                u = tuple(u)
                if u not in seen and not in_monomial_ideal(u, in_I):
                    nxt.append(u)
        frontier = nxt
    key = order.key(ring.shape)
    found.sort(key=key, reverse=True)
    return [Monomial(ring.shape, e) for e in found]


# -- multigraded linear algebra ----------------------------------------------


def multidegree(ring: Ring, e: Exps) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(row content, column content) of a monomial in the matrix variables."""
    m, n = ring.m, ring.n
    rows = tuple(sum(e[i * n:(i + 1) * n]) for i in range(m))
    cols = tuple(sum(e[i * n + j] for i in range(m)) for j in range(n))
    return rows, cols


def _poly_multidegree(f: Polynomial):
    degs = {multidegree(f.ring, e) for e in f.terms}
    if len(degs) != 1:
        raise ValueError(f"{f} is not homogeneous for the row/column grading")
    return degs.pop()


def _matrices_with_margins(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Nonnegative integer matrices (flattened row-major) with the given margins."""
    m, n = len(rows), len(cols)
    out: List[Tuple[int, ...]] = []
    cells = [0] * (m * n)

    def fill(i: int, j: int, row_left: int, col_left: List[int]):
        if i == m:
            if not any(col_left):
                out.append(tuple(cells))
            return
        if j == n - 1:
            v = row_left
            if v <= col_left[j]:
                cells[i * n + j] = v
                col_left[j] -= v
                fill(i + 1, 0, rows[i + 1] if i + 1 < m else 0, col_left)
                col_left[j] += v
            cells[i * n + j] = 0
            return
        for v in range(min(row_left, col_left[j]) + 1):
            cells[i * n + j] = v
            col_left[j] -= v
            fill(i, j + 1, row_left - v, col_left)
            col_left[j] += v
        cells[i * n + j] = 0

    if sum(rows) != sum(cols) or any(r < 0 for r in rows) or any(c < 0 for c in cols):
        return []
    fill(0, 0, rows[0], list(cols))
    return out


def graded_member(f: Polynomial, I: Ideal) -> bool:
    """Membership by linear algebra in one piece of the row/column multigrading.

    Needs ``f`` and every generator of ``I`` homogeneous for the grading in which
    ``x[i,j]`` has degree (e_i, f_j).  Avoids a Groebner basis entirely, which
    matters for ideals such as products of permanental ideals.
    """
    if not f:
        return True
    ring = f.ring
    if f.uses_t() or any(g.uses_t() for g in I.generators):
        raise ValueError("graded membership needs t-free inputs")
    target_rows, target_cols = _poly_multidegree(f)
    p = ring.field.characteristic
    tslot = (0,)
    shifts: Dict[tuple, List[Tuple[int, ...]]] = {}
    pivots: Dict[Exps, Dict[Exps, object]] = {}

    def reduce(v: Dict[Exps, object]) -> Dict[Exps, object]:
        v = dict(v)
        while True:
            hits = [e for e in v if e in pivots]
            if not hits:
                return v
            e = max(hits)
            c = v[e]
            for k, pc in pivots[e].items():
                val = v.get(k, 0) - c * pc
                if p:
                    val %= p
                if val:
                    v[k] = val
                else:
                    v.pop(k, None)

    for g in dict.fromkeys(I.generators):
        gr, gc = _poly_multidegree(g)
        need = (tuple(a - b for a, b in zip(target_rows, gr)), tuple(a - b for a, b in zip(target_cols, gc)))
        if need not in shifts:
            shifts[need] = _matrices_with_margins(*need)
        for u in shifts[need]:
            ue = u + tslot
            vec = {exps_mul(e, ue): c for e, c in g.terms.items()}
            vec = reduce(vec)
            if not vec:
                continue
            piv = max(vec)
            c = vec[piv]
            inv = pow(c, -1, p) if p else 1 / c
            pivots[piv] = {k: (x * inv) % p if p else x * inv for k, x in vec.items()}
    return not reduce(dict(f.terms))
