"""Splitting-type calculus over a rational target."""

import pytest

from oracles import brute_force_balanced_types
from tschirn.errors import (
    DegenerateRank,
    NeitherPerfectlyBalanced,
    NoSuchCover,
    RankMismatch,
)
from tschirn.splitting import (
    SplittingType,
    balanced_type,
    general_p1_splitting,
    generic_negative_modification,
    glue_deform,
    is_balanced,
    is_perfectly_balanced,
)


def test_construction_canonicalizes_order():
    t = SplittingType((0, -1, 0))
    assert t.degrees == (0, 0, -1)
    assert t.rank == 3
    assert t.total_degree == -1
    assert str(t) == "(0, 0, -1)"
    with pytest.raises(ValueError):
        SplittingType(())


def test_balance_predicates():
    assert is_balanced(SplittingType((-1, -1, -1)))
    assert is_perfectly_balanced(SplittingType((-1, -1, -1)))
    assert is_balanced(SplittingType((0, -1)))
    assert not is_perfectly_balanced(SplittingType((0, -1)))
    assert not is_balanced(SplittingType((1, -1)))


def test_balanced_type_frozen_values():
    assert balanced_type(4, -4).degrees == (-1, -1, -1, -1)
    assert balanced_type(2, -6).degrees == (-3, -3)
    assert balanced_type(3, -5).degrees == (-1, -2, -2)
    assert balanced_type(3, 5).degrees == (2, 2, 1)
    assert balanced_type(1, 7).degrees == (7,)
    with pytest.raises(DegenerateRank):
        balanced_type(0, 3)


def test_balanced_type_is_the_unique_balanced_tuple():
    for rank in range(1, 7):
        for degree in range(-12, 9):
            candidates = brute_force_balanced_types(rank, degree)
            assert candidates == [balanced_type(rank, degree).degrees]


def test_modification_examples():
    assert generic_negative_modification(SplittingType((0, 0, -1))).degrees == (0, -1, -1)
    assert generic_negative_modification(SplittingType((0, 0))).degrees == (0, -1)
    assert generic_negative_modification(SplittingType((-1, -1))).degrees == (-1, -2)


def test_modification_preserves_balance_and_drops_degree():
    for rank in range(1, 7):
        for degree in range(-10, 4):
            t = balanced_type(rank, degree)
            for _ in range(5):
                before = t.total_degree
                t = generic_negative_modification(t)
                assert t.total_degree == before - 1
                assert is_balanced(t)


def test_glue_deform_examples():
    a = SplittingType((0, 0, -1, -1))
    b = SplittingType((-1, -1, -1, -1))
    assert glue_deform(a, b).degrees == (-1, -1, -2, -2)
    assert glue_deform(SplittingType((0, 0)), SplittingType((0, 0))).degrees == (0, 0)
    assert glue_deform(SplittingType((1, -1)), SplittingType((0, 0))).degrees == (1, -1)
    # Either side may carry the perfectly balanced factor.
    assert glue_deform(SplittingType((-1, -1)), SplittingType((0, -1))).degrees == (-1, -2)


def test_glue_deform_rejections():
    with pytest.raises(RankMismatch):
        glue_deform(SplittingType((0, 0)), SplittingType((0, 0, 0)))
    with pytest.raises(NeitherPerfectlyBalanced):
        glue_deform(SplittingType((1, -1)), SplittingType((0, -1)))


def test_general_splitting_frozen_values():
    assert general_p1_splitting(5, 0).degrees == (-1, -1, -1, -1)
    assert general_p1_splitting(2, 0).degrees == (-1,)
    assert general_p1_splitting(3, 4).degrees == (-3, -3)
    assert general_p1_splitting(4, 1).degrees == (-1, -1, -2)


def test_general_splitting_grid():
    for r in range(2, 11):
        for g in range(0, 31):
            t = general_p1_splitting(r, g)
            assert t.rank == r - 1
            assert t.total_degree == -(g + r - 1)
            assert is_balanced(t)
            assert t == balanced_type(r - 1, -(g + r - 1))


def test_general_splitting_matches_modification_ladder():
    # Independent route: start from the unbranched-over-one-component base
    # type and apply one generic negative modification per extra unit of
    # genus.  Must land on the same splitting type as the degeneration.
    for r in range(2, 11):
        for g in range(0, 31):
            t = SplittingType((-1,) * (r - 1))
            for _ in range(g):
                t = generic_negative_modification(t)
            assert t == general_p1_splitting(r, g)


def test_general_splitting_domain():
    with pytest.raises(DegenerateRank):
        general_p1_splitting(1, 3)
    with pytest.raises(NoSuchCover):
        general_p1_splitting(4, -1)
