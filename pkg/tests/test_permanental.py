"""Permanental ideals, their explicit bases, certificates and primes."""

import random
from itertools import combinations

import pytest

from permideal.algebra import Ring, Shape, TermOrder
from permideal.groebner import Ideal, ideal_contained, ideal_equal, ideal_member, intersect_all
from permideal.permanental import (
    HypothesisViolation,
    LinearForm,
    MinimalPrime,
    PatternError,
    UndefinedPartError,
    UnsupportedCharacteristic,
    antidiagonal_products,
    block_prime_pairs,
    certificate_for,
    claimed_gb,
    claimed_radical_gb,
    component_count,
    component_count_as_printed,
    embedded_Q,
    expand_certificate,
    gap_length_formula,
    gb_count_formula,
    is_parameter,
    cubic_certificate,
    cubic_patterns,
    quartic_certificate,
    linear_form_in_prime,
    minimal_primes,
    niermann_check,
    niermann_sides,
    permanent,
    permanental_ideal,
    radical_generators,
    squarefree_triples,
    unmixed_part,
)

R22, R23, R32, R33, R34 = (Ring.of(*s) for s in [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4)])


def test_permanent_examples():
    assert permanent(R33, [2], [3]) == R33.x(2, 3)
    x = R33.x
    assert permanent(R33, [1, 2], [1, 2]) == x(1, 1) * x(2, 2) + x(1, 2) * x(2, 1)
    full = permanent(R33, [1, 2, 3], [1, 2, 3])
    assert len(full) == 6 and set(full.terms.values()) == {1}


@pytest.mark.parametrize("shape,count", [((2, 2), 1), ((3, 3), 9), ((3, 4), 18)])
def test_generator_counts(shape, count):
    assert len(permanental_ideal(Ring.of(*shape), 2).generators) == count


def test_claimed_basis_type_split():
    kinds = [c.kind for c in claimed_gb(R33)]
    assert [kinds.count(k) for k in range(1, 7)] == [9, 3, 3, 3, 3, 3]
    assert [c.kind for c in claimed_gb(R22)] == [1]
    assert len(claimed_gb(R23)) == 5


@pytest.mark.parametrize("shape,count", [((2, 2), 1), ((2, 3), 5), ((3, 3), 24), ((3, 4), 66), ((4, 4), 180)])
def test_gb_count_formula(shape, count):
    assert gb_count_formula(Shape(*shape)) == count
    assert len(claimed_gb(Ring.of(*shape))) == count


def test_radical_generators():
    assert radical_generators(R23).generators == permanental_ideal(R23, 2).generators
    rad = radical_generators(R33)
    assert len(rad.generators) == 9 + 6
    assert len(squarefree_triples(R33)) == 6
    assert len(claimed_radical_gb(R33)) == 9 + 12 + 1


# -- certificates -------------------------------------------------------------


def test_two_row_certificate_example():
    a, b, c = R33.x(1, 1), R33.x(1, 2), R33.x(1, 3)
    x, y, z = R33.x(2, 1), R33.x(2, 2), R33.x(2, 3)
    cert = cubic_certificate(R33, [(1, 2), (1, 3), (2, 1)])
    gens = [g for _, g in cert]
    assert gens == [a * y + b * x, b * z + c * y, c * x + a * z]
    assert [cof for cof, _ in cert] == [c.scale(R33.field.coerce(1) / 2), a.scale(-R33.field.coerce(1) / 2),
                                        b.scale(R33.field.coerce(1) / 2)]
    assert expand_certificate(cert, R33) == b * c * x


def test_transposed_certificate():
    ents = [(2, 1), (3, 1), (1, 2)]
    cert = cubic_certificate(R33, ents)
    assert expand_certificate(cert, R33) == R33.monomial_poly(ents)


def test_certificate_pattern_errors():
    with pytest.raises(PatternError):
        cubic_certificate(R33, [(1, 1), (2, 1), (1, 1)])
    with pytest.raises(PatternError):
        quartic_certificate(R33, [(1, 3), (2, 2), (3, 1)], (1, 1, 1))


def test_certificates_need_two_invertible():
    with pytest.raises(UnsupportedCharacteristic):
        cubic_certificate(Ring.of(3, 3, 2), [(1, 2), (1, 3), (2, 1)])


def test_quartic_certificate_example():
    ents, ex = [(1, 3), (2, 2), (3, 1)], (2, 1, 1)
    cert = quartic_certificate(R33, ents, ex)
    assert expand_certificate(cert, R33) == R33.monomial_poly([(1, 3), (1, 3), (2, 2), (3, 1)])
    gens = set(permanental_ideal(R33, 2).generators)
    assert all(g in gens for _, g in cert)


@pytest.mark.parametrize("ring", [R33, R34, Ring.of(3, 3, 5)], ids=["3x3", "3x4", "3x3-F5"])
def test_every_cubic_pattern_certifies(ring):
    gens = set(permanental_ideal(ring, 2).generators)
    for ents in cubic_patterns(ring):
        cert = cubic_certificate(ring, ents)
        assert all(g in gens for _, g in cert)
        assert expand_certificate(cert, ring) == ring.monomial_poly(ents)


def test_claimed_monomials_have_certificates():
    for el in claimed_gb(R34):
        cert = certificate_for(R34, el)
        assert cert is not None
        assert expand_certificate(cert, R34) == el.polynomial


# -- primes and counts ----------------------------------------------------------


def test_two_by_two_single_prime():
    (P,) = minimal_primes(R22)
    assert P.kind == "block"
    assert ideal_equal(P.ideal(), permanental_ideal(R22, 2))


@pytest.mark.parametrize("shape,count", [((2, 2), 1), ((2, 3), 5), ((3, 2), 5), ((3, 3), 15),
                                         ((3, 4), 25), ((4, 4), 44)])
def test_component_count_matches_enumeration(shape, count):
    assert len(minimal_primes(Ring.of(*shape))) == count
    assert component_count(Shape(*shape)) == count


def test_printed_count_differs_only_with_one_side_two():
    for m in range(2, 6):
        for n in range(2, 6):
            s = Shape(m, n)
            same = component_count(s) == component_count_as_printed(s)
            assert same == (min(m, n) != 2 or max(m, n) == 2)


@pytest.mark.parametrize("ring", [R23, R32], ids=["2x3", "3x2"])
def test_two_sided_primes_decompose_radical(ring):
    primes = minimal_primes(ring)
    P2 = permanental_ideal(ring, 2)
    for A, B in combinations(primes, 2):
        assert not ideal_contained(A.ideal(), B.ideal())
        assert not ideal_contained(B.ideal(), A.ideal())
    assert ideal_equal(intersect_all([P.ideal() for P in primes]), P2)


def test_heights():
    h = {P.kind: P.height for P in minimal_primes(R34)}
    assert h == {"row": 8, "col": 9, "block": 9}
    assert {P.height for P in minimal_primes(R33)} == {6}
    for P in minimal_primes(R33):
        if P.kind == "block":
            assert P.quadric_rank() == 4


@pytest.mark.parametrize("shape,k", [((3, 3), 1), ((3, 4), 4), ((4, 4), 17), ((2, 5), 0)])
def test_gap_length_formula(shape, k):
    assert gap_length_formula(Shape(*shape)) == k
    assert len(antidiagonal_products(Ring.of(*shape))) == k


def test_linear_forms():
    block = MinimalPrime("block", (1, 2), (1, 2), R33)
    assert not linear_form_in_prime(LinearForm.ones([(1, 1)]), block)
    assert linear_form_in_prime(LinearForm.ones([(3, 3)]), block)
    assert ideal_member(R33.x(3, 3), block.ideal())
    every = [(i, j) for i in range(1, 4) for j in range(1, 4)]
    assert is_parameter(LinearForm.ones(every), minimal_primes(R33))
    assert LinearForm.from_dict({(1, 1): 2, (2, 2): 0}).support == [(1, 1)]


def test_unmixed_parts_undefined_when_too_narrow():
    with pytest.raises(UndefinedPartError):
        unmixed_part(R32, 1)
    with pytest.raises(UndefinedPartError):
        unmixed_part(R23, 2)
    with pytest.raises(UndefinedPartError):
        unmixed_part(R33, 4)


def test_embedded_component_contains_squares():
    Q = embedded_Q(R33)
    assert ideal_member(R33.x(2, 3) ** 2, Q)
    assert ideal_contained(permanental_ideal(R33, 2), Q)


# -- Niermann's identity --------------------------------------------------------


def test_niermann_single_pair():
    I, J = Ideal(R22, [R22.x(1, 1)]), Ideal(R22, [R22.x(2, 2)])
    assert niermann_check([(I, J)])


def test_niermann_principal_variables():
    x, y = R22.x(1, 1), R22.x(2, 2)
    pairs = [(Ideal(R22, [x]), Ideal(R22, [y, R22.x(1, 2)])), (Ideal(R22, [y]), Ideal(R22, [x, R22.x(2, 1)]))]
    assert niermann_check(pairs)


def test_niermann_hypothesis_violation():
    x, y = R22.x(1, 1), R22.x(2, 2)
    with pytest.raises(HypothesisViolation):
        niermann_sides([(Ideal(R22, [x]), Ideal(R22, [x])), (Ideal(R22, [y]), Ideal(R22, [y]))])


def test_niermann_block_instance():
    assert niermann_check(block_prime_pairs(R33))


def _random_pairs(seed):
    """Disjoint variable blocks S_a; I_a lives in S_a, J_a holds every variable outside S_a."""
    rng = random.Random(seed)
    ring = R33
    cells = [(i, j) for i in range(1, 4) for j in range(1, 4)]
    rng.shuffle(cells)
    l = rng.choice([2, 3])
    cuts = sorted(rng.sample(range(1, len(cells)), l - 1))
    blocks = [cells[a:b] for a, b in zip([0] + cuts, cuts + [len(cells)])]
    pairs = []
    for S in blocks:
        v = [ring.x(*e) for e in S]
        f = rng.choice(v) * rng.choice(v)
        if len(v) > 1 and rng.random() < 0.5:
            f = f + rng.choice(v) * rng.choice(v).scale(rng.choice([1, -1, 2]))
        I = Ideal(ring, [f])
        outside = [ring.x(*e) for e in cells if e not in S]
        J = Ideal(ring, outside + [rng.choice(v) ** 3])
        pairs.append((I, J))
    return pairs


@pytest.mark.parametrize("seed", range(20))
def test_niermann_random_instances(seed):
    assert niermann_check(_random_pairs(seed))
