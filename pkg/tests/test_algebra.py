"""Coefficient fields, term orders and polynomial arithmetic."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from permideal.algebra import (
    EmptyPolynomialError,
    FieldMismatchError,
    FieldSpec,
    Monomial,
    Polynomial,
    Ring,
    Shape,
    ShapeMismatchError,
    TermOrder,
    VarRef,
    add,
    compare_monomials,
    exps_mul,
    leading_term,
    multiply,
    scale,
    subtract,
)
from permideal.permanental import permanent

from conftest import exps_strategy, polys

R33 = Ring.of(3, 3)
R34 = Ring.of(3, 4)
R33_F3 = Ring.of(3, 3, 3)
ORDERS = [TermOrder("diag-lex"), TermOrder("diag-lex-T"), TermOrder("diag-lex").elim()]


def mono(ring, *entries):
    return Monomial(ring.shape, ring.monomial_poly(entries).leading(TermOrder())[0])


# -- fields ------------------------------------------------------------------


def test_field_parse_and_names():
    assert FieldSpec.parse("q") == FieldSpec.rationals()
    assert FieldSpec.parse("fp:5") == FieldSpec.prime_field(5)
    assert FieldSpec.rationals().name == "Q"
    assert FieldSpec.prime_field(7).name == "Fp:7"
    assert not FieldSpec.prime_field(2).two_is_unit()


@pytest.mark.parametrize("bad", ["fp:4", "fp:1", "r", "fp:x", "fp:"])
def test_field_parse_rejects(bad):
    with pytest.raises(Exception):
        FieldSpec.parse(bad)


def test_shape_needs_two_by_two():
    with pytest.raises(Exception):
        Shape(1, 3)


def test_varref_text():
    assert str(VarRef.matrix(2, 3)) == "x[2,3]"
    assert str(VarRef.elim()) == "t"


# -- orders ------------------------------------------------------------------


def test_diagonal_beats_antidiagonal():
    a, b = mono(R33, (1, 1), (2, 2)), mono(R33, (2, 1), (1, 2))
    assert compare_monomials(TermOrder("diag-lex"), a, b) == 1


def test_reflexive():
    a = mono(R33, (1, 1), (2, 2))
    for order in ORDERS:
        assert compare_monomials(order, a, a) == 0


def test_same_column_larger_row_wins():
    assert compare_monomials(TermOrder("diag-lex"), mono(R33, (2, 2)), mono(R33, (1, 2))) == 1


def test_t_on_top_only_in_elim():
    t = Monomial(R33.shape, R33.t().leading(TermOrder())[0])
    big = mono(R33, (3, 3), (3, 3), (3, 3))
    assert compare_monomials(TermOrder("diag-lex").elim(), t, big) == 1
    assert compare_monomials(TermOrder("diag-lex"), t, big) == -1


def test_compare_rejects_mixed_shapes():
    with pytest.raises(ShapeMismatchError):
        compare_monomials(TermOrder(), mono(R33, (1, 1)), mono(R34, (1, 1)))


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.name)
@given(data=st.data())
def test_order_axioms(order, data):
    e = exps_strategy(R33, 3, with_t=True)
    a, b, c = (data.draw(e) for _ in range(3))
    ma, mb, mc = (Monomial(R33.shape, x) for x in (a, b, c))
    ab, ba = compare_monomials(order, ma, mb), compare_monomials(order, mb, ma)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if ab >= 0 and compare_monomials(order, mb, mc) >= 0:
        assert compare_monomials(order, ma, mc) >= 0
    ac, bc = Monomial(R33.shape, exps_mul(a, c)), Monomial(R33.shape, exps_mul(b, c))
    assert compare_monomials(order, ac, bc) == ab
    one = Monomial(R33.shape, R33.one_exps)
    assert compare_monomials(order, ma, one) >= 0


@pytest.mark.parametrize("order", ORDERS[:2], ids=lambda o: o.name)
@pytest.mark.parametrize("ring", [R33, R34, Ring.of(4, 3)], ids=lambda r: f"{r.m}x{r.n}")
def test_permanent_leads_with_main_diagonal(order, ring):
    for k in range(2, min(ring.m, ring.n) + 1):
        for rows in combinations(range(1, ring.m + 1), k):
            for cols in combinations(range(1, ring.n + 1), k):
                lm, c = leading_term(order, permanent(ring, rows, cols))
                assert lm.exps == ring.monomial_poly(zip(rows, cols)).leading(order)[0]
                assert c == 1


# -- leading terms and arithmetic ---------------------------------------------


def test_leading_term_examples():
    o = TermOrder("diag-lex")
    f = R33.x(1, 1) * R33.x(2, 2) + R33.x(1, 2) * R33.x(2, 1)
    assert leading_term(o, f) == (mono(R33, (1, 1), (2, 2)), 1)
    assert leading_term(o, R33.const(5)) == (Monomial(R33.shape, R33.one_exps), 5)
    g = R33.x(1, 1) * R33.x(2, 3) + R33.x(2, 1) * R33.x(1, 3)
    assert leading_term(o, g)[0] == mono(R33, (1, 1), (2, 3))


def test_leading_term_of_zero():
    with pytest.raises(EmptyPolynomialError):
        leading_term(TermOrder(), R33.zero())


def test_arith_examples():
    x11, x12, x21 = R33.x(1, 1), R33.x(1, 2), R33.x(2, 1)
    assert subtract(x11 + x12, x11 + x12).is_zero()
    assert multiply(x11 + x21, x11 - x21) == x11 ** 2 - x21 ** 2
    y = R33_F3.x(1, 1)
    assert scale(scale(y, 2), 2) == y
    assert add(x11, x12) == x12 + x11


def test_mixed_ambient_rejected():
    with pytest.raises(ShapeMismatchError):
        R33.x(1, 1) + R34.x(1, 1)
    with pytest.raises(FieldMismatchError):
        R33.x(1, 1) * R33_F3.x(1, 1)


def test_no_zero_terms():
    f = Polynomial(R33, {R33.unit_exps(0): Fraction(0), R33.unit_exps(1): Fraction(2)})
    assert len(f) == 1


@pytest.mark.parametrize("ring", [R33, R33_F3], ids=["Q", "F3"])
@given(data=st.data())
def test_ring_axioms(ring, data):
    f, g, h = (data.draw(polys(ring)) for _ in range(3))
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + g == g + f
    assert f - f == ring.zero()
    assert f * ring.one() == f


@given(f=polys(R33, with_t=True))
def test_text_is_descending_and_deterministic(f):
    assert f.to_text() == Polynomial(R33, dict(reversed(list(f.terms.items())))).to_text()


def test_to_text_examples():
    x = R33.x
    assert R33.zero().to_text() == "0"
    f = x(1, 1) * x(2, 2) + x(1, 2) * x(2, 1)
    assert f.to_text() == "x[1,1]*x[2,2] + x[1,2]*x[2,1]"
    g = (x(1, 1) ** 2).scale(Fraction(-3, 2)) + R33.const(4)
    assert g.to_text() == "-3/2*x[1,1]^2 + 4"
