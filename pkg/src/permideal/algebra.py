"""Exact scalars, monomials and polynomials over a generic m x n matrix.

Polynomials live in ``F[x[i,j] | 1<=i<=m, 1<=j<=n][t]`` where ``t`` is a single
auxiliary elimination variable.  Exponent vectors are plain tuples of length
``m*n + 1`` in row-major order with the ``t`` slot last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

Exps = Tuple[int, ...]
Scalar = Union[int, Fraction]


class AlgebraError(Exception):
    """Base class for errors raised by this package."""


class ShapeMismatchError(AlgebraError):
    pass


class FieldMismatchError(AlgebraError):
    pass


class EmptyPolynomialError(AlgebraError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (characteristic 0) or GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``q`` / ``Q`` or ``fp:<p>``."""
        s = text.strip().lower()
        if s in ("q", "qq", "rationals"):
            return cls(0)
        if s.startswith("fp:"):
            return cls(int(s[3:]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:<p>'")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime_field"

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    # -- element arithmetic --------------------------------------------------

    def coerce(self, c) -> Scalar:
        p = self.characteristic
        if p == 0:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {c.denominator} vanishes mod {p}")
            return c.numerator * pow(c.denominator, -1, p) % p
        return int(c) % p

    def norm(self, c: Scalar) -> Scalar:
        p = self.characteristic
        return c % p if p else c

    def inv(self, c: Scalar) -> Scalar:
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        return 1 / c

    def neg(self, c: Scalar) -> Scalar:
        p = self.characteristic
        return (-c) % p if p else -c

    def to_text(self, c: Scalar) -> str:
        return str(c)

    def two_is_unit(self) -> bool:
        return self.characteristic != 2


@dataclass(frozen=True)
class Shape:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise ValueError(f"shape must have m, n >= 2, got ({self.m}, {self.n})")

    def transpose(self) -> "Shape":
        return Shape(self.n, self.m)


class VarRef(NamedTuple):
    """A variable: ``x[row, col]`` (kind 0) or the elimination variable (kind 1).

    The tuple layout makes the natural sort row-major with ``t`` last.
    """

    kind: int
    row: int
    col: int

    @classmethod
    def matrix(cls, row: int, col: int) -> "VarRef":
        return cls(0, row, col)

    @classmethod
    def elim(cls) -> "VarRef":
        return cls(1, 0, 0)

    @property
    def is_elim(self) -> bool:
        return self.kind == 1

    def __str__(self):
        return "t" if self.kind else f"x[{self.row},{self.col}]"


@dataclass(frozen=True)
class Ring:
    """Ambient polynomial ring: shape of the generic matrix plus coefficient field."""

    shape: Shape
    field: FieldSpec = field(default_factory=FieldSpec)

    @classmethod
    def of(cls, m: int, n: int, characteristic: int = 0) -> "Ring":
        return cls(Shape(m, n), FieldSpec(characteristic))

    @property
    def m(self) -> int:
        return self.shape.m

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def nvars(self) -> int:
        return self.shape.m * self.shape.n + 1

    @property
    def t_index(self) -> int:
        return self.shape.m * self.shape.n

    def index(self, v: VarRef) -> int:
        if v.kind == 1:
            return self.t_index
        if not (1 <= v.row <= self.m and 1 <= v.col <= self.n):
            raise IndexError(f"{v} outside a {self.m}x{self.n} matrix")
        return (v.row - 1) * self.n + (v.col - 1)

    @cached_property
    def varrefs(self) -> Tuple[VarRef, ...]:
        refs = [VarRef.matrix(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]
        return tuple(refs) + (VarRef.elim(),)

    def with_field(self, fs: FieldSpec) -> "Ring":
        return Ring(self.shape, fs)

    # -- constructors --------------------------------------------------------

    def unit_exps(self, idx: int, power: int = 1) -> Exps:
        e = [0] * self.nvars
        e[idx] = power
        return tuple(e)

    @cached_property
    def one_exps(self) -> Exps:
        return (0,) * self.nvars

    def x(self, i: int, j: int) -> "Polynomial":
        return Polynomial(self, {self.unit_exps(self.index(VarRef.matrix(i, j))): 1})

    def t(self) -> "Polynomial":
        return Polynomial(self, {self.unit_exps(self.t_index): 1})

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {self.one_exps: c})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def monomial(self, powers: Dict[VarRef, int]) -> "Monomial":
        e = [0] * self.nvars
        for v, k in powers.items():
            e[self.index(v)] += k
        return Monomial(self.shape, tuple(e))

    def monomial_poly(self, entries: Iterable[Tuple[int, int]], coeff=1) -> "Polynomial":
        """Product of ``x[i,j]`` over ``entries`` (repeats raise the power)."""
        e = [0] * self.nvars
        for i, j in entries:
            e[self.index(VarRef.matrix(i, j))] += 1
        return Polynomial(self, {tuple(e): coeff})

    def matrix_vars(self) -> List["Polynomial"]:
        return [self.x(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]


# -- monomials ---------------------------------------------------------------


def exps_mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def exps_div(a: Exps, b: Exps) -> Exps:
    return tuple(x - y for x, y in zip(a, b))


def exps_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def exps_divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exps_coprime(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


@dataclass(frozen=True)
class Monomial:
    """A power product; ``exps`` is indexed like :class:`Ring` variables."""

    shape: Shape
    exps: Exps

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def exponents(self, ring: Optional[Ring] = None) -> Dict[VarRef, int]:
        refs = (ring or Ring(self.shape)).varrefs
        return {refs[k]: e for k, e in enumerate(self.exps) if e}

    def _check(self, other: "Monomial"):
        if self.shape != other.shape:
            raise ShapeMismatchError(f"{self.shape} vs {other.shape}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.shape, exps_mul(self.exps, other.exps))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return exps_divides(self.exps, other.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.shape, exps_lcm(self.exps, other.exps))

    def __str__(self):
        return exps_to_text(Ring(self.shape).varrefs, self.exps) or "1"


def exps_to_text(refs: Tuple[VarRef, ...], exps: Exps) -> str:
    parts = []
    for k, e in enumerate(exps):
        if e:
            parts.append(str(refs[k]) if e == 1 else f"{refs[k]}^{e}")
    return "*".join(parts)


# -- term orders -------------------------------------------------------------


@dataclass(frozen=True)
class TermOrder:
    """Lexicographic orders on the matrix variables.

    ``diag-lex``: x[i,j] < x[k,l] iff l > j, or l == j and k > i.
    ``diag-lex-T``: the same rule with rows and columns exchanged.
    ``elim``: ``t`` above every matrix variable, then ``base``.

    For the base kinds the variable ``t`` ranks below every matrix variable.
    """

    kind: str = "diag-lex"
    base: Optional["TermOrder"] = None

    def __post_init__(self):
        if self.kind not in ("diag-lex", "diag-lex-T", "elim"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if (self.kind == "elim") != (self.base is not None):
            raise ValueError("elim order needs a base order, base orders take none")

    @classmethod
    def diag_lex(cls) -> "TermOrder":
        return cls("diag-lex")

    @classmethod
    def diag_lex_T(cls) -> "TermOrder":
        return cls("diag-lex-T")

    @classmethod
    def parse(cls, text: str) -> "TermOrder":
        return cls(text.strip())

    def elim(self) -> "TermOrder":
        return self if self.kind == "elim" else TermOrder("elim", self)

    @property
    def is_elim(self) -> bool:
        return self.kind == "elim"

    @property
    def name(self) -> str:
        return f"elim({self.base.name})" if self.base else self.kind

    def ranking(self, shape: Shape) -> Tuple[int, ...]:
        """Variable indices from largest to smallest."""
        return _ranking(self, shape)

    def key(self, shape: Shape):
        """Function mapping an exponent tuple to a key whose tuple order is this order."""
        perm = self.ranking(shape)

        def k(e: Exps) -> Exps:
            return tuple([e[i] for i in perm])

        return k


_RANK_CACHE: Dict[Tuple[TermOrder, Shape], Tuple[int, ...]] = {}


def _ranking(order: TermOrder, shape: Shape) -> Tuple[int, ...]:
    hit = _RANK_CACHE.get((order, shape))
    if hit is not None:
        return hit
    m, n = shape.m, shape.n
    t = m * n
    if order.kind == "diag-lex":
        # largest column first, then largest row
        mat = [(i - 1) * n + (j - 1) for j in range(n, 0, -1) for i in range(m, 0, -1)]
        rank = tuple(mat) + (t,)
    elif order.kind == "diag-lex-T":
        mat = [(i - 1) * n + (j - 1) for i in range(m, 0, -1) for j in range(n, 0, -1)]
        rank = tuple(mat) + (t,)
    else:
        base = _ranking(order.base, shape)
        rank = (t,) + tuple(i for i in base if i != t)
    _RANK_CACHE[(order, shape)] = rank
    return rank


def compare_monomials(order: TermOrder, a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if a.shape != b.shape:
        raise ShapeMismatchError(f"{a.shape} vs {b.shape}")
    k = order.key(a.shape)
    ka, kb = k(a.exps), k(b.exps)
    return (ka > kb) - (ka < kb)


# -- polynomials -------------------------------------------------------------


class Polynomial:
    """Sparse polynomial with exact coefficients.  Treated as immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Dict[Exps, Scalar], *, normalized: bool = False):
        self.ring = ring
        if normalized:
            self.terms = terms
        else:
            fs = ring.field
            clean = {}
            for e, c in terms.items():
                c = fs.coerce(c)
                if c:
                    clean[e] = c
            self.terms = clean
        self._hash = None

    # -- basic protocol --

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def _coerce_other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring.shape != self.ring.shape:
                raise ShapeMismatchError(f"{self.ring.shape} vs {other.ring.shape}")
            if other.ring.field != self.ring.field:
                raise FieldMismatchError(f"{self.ring.field.name} vs {other.ring.field.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    # -- arithmetic --

    def __add__(self, other):
        other = self._coerce_other(other)
        fs = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = fs.norm(out.get(e, 0) + c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        fs = self.ring.field
        return Polynomial(self.ring, {e: fs.neg(c) for e, c in self.terms.items()}, normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce_other(other)
        fs = self.ring.field
        out: Dict[Exps, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exps_mul(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        clean = {}
        for e, c in out.items():
            c = fs.norm(c)
            if c:
                clean[e] = c
        return Polynomial(self.ring, clean, normalized=True)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        fs = self.ring.field
        c = fs.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: fs.norm(v * c) for e, v in self.terms.items()}, normalized=True)

    def mul_term(self, exps: Exps, c) -> "Polynomial":
        fs = self.ring.field
        c = fs.coerce(c)
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring, {exps_mul(e, exps): fs.norm(v * c) for e, v in self.terms.items()}, normalized=True
        )

    # -- inspection --

    def monomials(self) -> Iterator[Monomial]:
        for e in self.terms:
            yield Monomial(self.ring.shape, e)

    def sorted_terms(self, order: Optional[TermOrder] = None) -> List[Tuple[Exps, Scalar]]:
        k = (order or TermOrder()).key(self.ring.shape)
        return sorted(self.terms.items(), key=lambda ec: k(ec[0]), reverse=True)

    def leading(self, order: TermOrder) -> Tuple[Exps, Scalar]:
        if not self.terms:
            raise EmptyPolynomialError("zero polynomial has no leading term")
        k = order.key(self.ring.shape)
        e = max(self.terms, key=k)
        return e, self.terms[e]

    def leading_term(self, order: TermOrder) -> Tuple[Monomial, Scalar]:
        e, c = self.leading(order)
        return Monomial(self.ring.shape, e), c

    def monic(self, order: TermOrder) -> "Polynomial":
        _, c = self.leading(order)
        return self.scale(self.ring.field.inv(c))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def uses_t(self) -> bool:
        t = self.ring.t_index
        return any(e[t] for e in self.terms)

    def with_field(self, fs: FieldSpec) -> "Polynomial":
        """Reinterpret the (integral or rational) coefficients over another field."""
        ring = self.ring.with_field(fs)
        return Polynomial(ring, dict(self.terms))

    # -- printing --

    def to_text(self, order: Optional[TermOrder] = None) -> str:
        """Canonical text, terms descending under ``order`` (default diag-lex)."""
        if not self.terms:
            return "0"
        refs = self.ring.varrefs
        fs = self.ring.field
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms(order)):
            mono = exps_to_text(refs, e)
            neg = fs.characteristic == 0 and c < 0
            mag = -c if neg else c
            if mono:
                body = mono if mag == 1 else f"{fs.to_text(mag)}*{mono}"
            else:
                body = fs.to_text(mag)
            if idx == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def leading_term(order: TermOrder, f: Polynomial) -> Tuple[Monomial, Scalar]:
    return f.leading_term(order)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def subtract(f: Polynomial, g: Polynomial) -> Polynomial:
    return f - g


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def scale(f: Polynomial, c) -> Polynomial:
    return f.scale(c)
