"""Finite fields and the standard group families."""

import itertools

import pytest

from oracles import naive_closure
from tschirn.errors import CapExceeded, InvalidDegree, NotPrimePower
from tschirn.families import (
    FiniteField,
    agl1,
    agl1_order,
    alternating_group,
    cyclic_group,
    finite_field,
    pgl2,
    pgl2_order,
    psl2,
    psl2_order,
    symmetric_group,
)
from tschirn.perms import group_order, is_transitive

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


# ------------------------------------------------------------------ fields

# Moduli are pinned: the lexicographically smallest monic irreducible of each
# degree, coefficients listed from the constant term up.
FROZEN_MODULI = {
    2: (2, 1, (0, 1)),
    3: (3, 1, (0, 1)),
    4: (2, 2, (1, 1, 1)),
    5: (5, 1, (0, 1)),
    7: (7, 1, (0, 1)),
    8: (2, 3, (1, 0, 1, 1)),
    9: (3, 2, (1, 0, 1)),
    16: (2, 4, (1, 0, 0, 1, 1)),
    25: (5, 2, (1, 1, 1)),
    27: (3, 3, (1, 0, 2, 1)),
}


@pytest.mark.parametrize("q", sorted(FROZEN_MODULI))
def test_field_moduli_are_pinned(q):
    p, k, modulus = FROZEN_MODULI[q]
    field = finite_field(q)
    assert (field.p, field.k, field.q) == (p, k, q)
    assert field.modulus == modulus


def test_field_is_deterministic():
    assert finite_field(8) == finite_field(8)
    assert finite_field(9).modulus == finite_field(9).modulus


@pytest.mark.parametrize("q", [0, 1, 6, 12, 100])
def test_not_prime_power_rejected(q):
    with pytest.raises(NotPrimePower):
        finite_field(q)


@pytest.mark.parametrize("q", [529, 1024])
def test_field_cap(q):
    with pytest.raises(CapExceeded):
        finite_field(q)


def test_field_custom_cap():
    with pytest.raises(CapExceeded):
        finite_field(8, cap=4)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_field_laws_exhaustively(q):
    field = finite_field(q)
    elems = range(q)
    for a, b in itertools.product(elems, repeat=2):
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.add(a, field.neg(a)) == 0
    for a, b, c in itertools.product(elems, repeat=3):
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(
            field.mul(a, b), field.mul(a, c)
        )
    for a in range(1, q):
        assert field.mul(a, field.inv(a)) == 1


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_generator_has_full_multiplicative_order(q):
    field = finite_field(q)
    powers = set()
    x = 1
    for _ in range(q - 1):
        x = field.mul(x, field.generator)
        powers.add(x)
    assert len(powers) == q - 1
    assert x == 1


# ------------------------------------------------------------------ groups


def test_cyclic_symmetric_alternating_orders():
    assert group_order(cyclic_group(2)) == 2
    assert group_order(cyclic_group(5)) == 5
    assert group_order(symmetric_group(2)) == 2
    assert group_order(symmetric_group(4)) == 24
    assert group_order(alternating_group(3)) == 3
    assert group_order(alternating_group(4)) == 12
    assert group_order(alternating_group(5)) == 60
    assert group_order(alternating_group(6)) == 360


@pytest.mark.parametrize(
    "ctor,arg",
    [(cyclic_group, 1), (symmetric_group, 1), (alternating_group, 2)],
)
def test_small_degrees_rejected(ctor, arg):
    with pytest.raises(InvalidDegree):
        ctor(arg)


FROZEN_ORDERS = [
    (pgl2, 3, 4, 24),
    (pgl2, 4, 5, 60),
    (pgl2, 5, 6, 120),
    (pgl2, 7, 8, 336),
    (pgl2, 8, 9, 504),
    (pgl2, 9, 10, 720),
    (pgl2, 11, 12, 1320),
    (psl2, 3, 4, 12),
    (psl2, 4, 5, 60),
    (psl2, 5, 6, 60),
    (psl2, 7, 8, 168),
    (psl2, 8, 9, 504),
    (psl2, 9, 10, 360),
    (psl2, 11, 12, 660),
    (agl1, 3, 3, 6),
    (agl1, 4, 4, 12),
    (agl1, 5, 5, 20),
    (agl1, 7, 7, 42),
    (agl1, 8, 8, 56),
    (agl1, 9, 9, 72),
]


@pytest.mark.parametrize("ctor,q,degree,order", FROZEN_ORDERS)
def test_projective_and_affine_orders(ctor, q, degree, order):
    G = ctor(q)
    assert G.degree == degree
    assert group_order(G) == order


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_order_formulas(q):
    assert group_order(pgl2(q)) == pgl2_order(q) == q**3 - q
    assert group_order(psl2(q)) == psl2_order(q)
    assert group_order(agl1(q)) == agl1_order(q) == q * (q - 1)
    if q % 2 == 0:
        assert psl2_order(q) == pgl2_order(q)
    else:
        assert 2 * psl2_order(q) == pgl2_order(q)


def test_orders_agree_with_naive_closure():
    small = [
        cyclic_group(5),
        symmetric_group(4),
        alternating_group(4),
        alternating_group(5),
        pgl2(3),
        psl2(3),
        pgl2(4),
        psl2(5),
        agl1(3),
        agl1(4),
        agl1(5),
        agl1(8),
    ]
    for G in small:
        assert group_order(G) == len(naive_closure(G.raw_generators(), G.degree))


def test_all_families_are_transitive():
    members = [cyclic_group(6), symmetric_group(5), alternating_group(5)]
    for q in PRIME_POWERS:
        members += [pgl2(q), psl2(q), agl1(q)]
    for G in members:
        assert is_transitive(G)


def test_family_generators_are_deterministic():
    for ctor, arg in [(pgl2, 9), (psl2, 7), (agl1, 8), (alternating_group, 6)]:
        a = ctor(arg).raw_generators()
        b = ctor(arg).raw_generators()
        assert a == b


def test_field_cap_propagates_to_groups():
    with pytest.raises(CapExceeded):
        pgl2(1024)
    with pytest.raises(NotPrimePower):
        agl1(12)


def test_finite_field_type_is_frozen():
    field = finite_field(4)
    assert isinstance(field, FiniteField)
    with pytest.raises(Exception):
        field.q = 5
