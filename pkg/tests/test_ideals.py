# tests/test_ideals.py
import itertools

import pytest

from libs.axioms.engine import find_g_identities
from libs.constructions.generators import gen_affine, gen_modring, gen_powerset
from libs.errors import NotAnIdealError, PositionError
from libs.ideals.ideals import (
    enumerate_ideals,
    ideal_closure,
    intersect_ideals,
    is_i_ideal,
    is_ideal,
    is_ideal_by_definition,
    is_left_ideal,
    is_right_ideal,
)
from libs.substructures.subalgebras import is_subseminearring
from libs.substructures.subset import Subset
from tests.conftest import small_corpus


def S(*xs, k):
    return Subset.of(xs, k)


def test_i_ideal_examples(b2, affine3):
    assert is_i_ideal(b2, S(0, k=2), 1).holds
    assert is_i_ideal(b2, S(0, k=2), 2).holds

    verdict = is_left_ideal(b2, S(1, k=2))
    assert not verdict.holds
    assert verdict.witness.law == "absorption"
    assert verdict.witness.args == (1, 0)
    assert verdict.witness.lhs == 0

    slice0 = S(0, 1, 2, k=9)
    for i in (1, 2, 3):
        assert is_i_ideal(affine3, slice0, i).holds
    assert is_right_ideal(affine3, slice0).holds


def test_position_range(b2):
    with pytest.raises(PositionError):
        is_i_ideal(b2, S(0, k=2), 3)


def test_is_ideal_examples(z3, z4):
    assert is_ideal(z4, S(0, 2, k=4)).holds
    assert is_ideal(z4, Subset.full(4)).holds

    verdict = is_ideal(z3, S(0, 1, k=3))
    assert not verdict.holds
    assert verdict.witness.args == (1, 1)
    assert verdict.witness.lhs == 2


def test_ideal_closure_examples(z4, z6):
    assert ideal_closure(z4, S(2, k=4)) == S(0, 2, k=4)
    assert ideal_closure(z6, S(2, k=6)) == S(0, 2, 4, k=6)
    for q in (2, 5, 7):
        assert ideal_closure(gen_modring(q, 2, 2), S(0, k=q)) == S(0, k=q)


def test_enumerate_ideals_examples(z3, z4, b2):
    assert enumerate_ideals(z4) == [S(0, k=4), S(0, 2, k=4), Subset.full(4)]
    assert enumerate_ideals(b2) == [S(0, k=2), Subset.full(2)]
    assert enumerate_ideals(z3) == [S(0, k=3), Subset.full(3)]


def test_enumerate_single_position_ideals(affine3):
    right = enumerate_ideals(affine3, positions=[3])
    everywhere = enumerate_ideals(affine3)
    assert set(everywhere) <= set(right)
    assert S(0, 1, 2, k=9) in everywhere


def test_intersect_ideals_examples(b2):
    z12 = gen_modring(12, 2, 2)
    evens = S(0, 2, 4, 6, 8, 10, k=12)
    thirds = S(0, 3, 6, 9, k=12)
    assert intersect_ideals(z12, [evens, thirds]) == S(0, 6, k=12)
    assert intersect_ideals(z12, [Subset.full(12), S(0, k=12)]) == S(0, k=12)
    assert intersect_ideals(b2, [S(0, k=2), Subset.full(2)]) == S(0, k=2)
    with pytest.raises(NotAnIdealError):
        intersect_ideals(b2, [S(1, k=2)])


@pytest.mark.parametrize("s", small_corpus(), ids=lambda s: s.name)
def test_lemma_matches_definition(s):
    for mask in range(1, 1 << s.k):
        sub = Subset(mask=mask, k=s.k)
        lemma = is_ideal(s, sub).holds
        assert lemma == is_ideal_by_definition(s, sub).holds
        assert lemma == all(is_i_ideal(s, sub, i).holds for i in range(1, s.n + 1))


def test_intersection_theorem_z12():
    z12 = gen_modring(12, 2, 2)
    ideals = enumerate_ideals(z12)
    for a, b in itertools.combinations(ideals, 2):
        if a.mask & b.mask:
            assert is_ideal(z12, intersect_ideals(z12, [a, b])).holds


@pytest.mark.parametrize(
    "s",
    [gen_powerset(1, 2, 2), gen_affine(3)] + [gen_modring(q, 2, 2) for q in range(2, 9)],
    ids=lambda s: s.name,
)
def test_ideal_containing_a_unity_is_everything(s):
    unities = find_g_identities(s)
    for ideal in enumerate_ideals(s):
        assert is_subseminearring(s, ideal).holds
        if unities & set(ideal.elements()):
            assert ideal.is_full


@pytest.mark.parametrize("s", small_corpus(), ids=lambda s: s.name)
def test_ideal_closure_is_least(s):
    ideals = enumerate_ideals(s)
    for x in s.elements:
        seed = Subset.of([x], s.k)
        closed = ideal_closure(s, seed)
        assert is_ideal(s, closed).holds
        for other in ideals:
            if seed.issubset(other):
                assert closed.issubset(other)
