# tests/test_axioms.py
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from libs.axioms.engine import (
    check_associative,
    check_commutative,
    check_t_distributive,
    classify,
    find_f_identities,
    find_g_identities,
    find_g_zeros,
    replay_witness,
)
from libs.carrier.optable import OpTable
from libs.carrier.structure import FinStructure
from libs.constructions.generators import gen_modring, gen_powerset
from libs.errors import PositionError
from tests.conftest import small_corpus


def test_associativity_examples(b2, nand, z3):
    assert check_associative(b2.f).holds
    assert check_associative(z3.g).holds

    verdict = check_associative(nand.f, "f")
    assert not verdict.holds
    w = verdict.witness
    assert w.positions == (1, 2)
    assert w.args == (0, 0, 1)
    assert (w.lhs, w.rhs) == (0, 1)
    assert w.operation == "f"


def test_commutativity_examples(b2, z3):
    assert check_commutative(b2.f).holds
    assert check_commutative(z3.f).holds

    left_projection = OpTable.from_entries(2, 2, [0, 0, 1, 1])
    verdict = check_commutative(left_projection)
    assert not verdict.holds
    assert verdict.witness.positions == (1, 2)
    assert verdict.witness.args == (0, 1)
    assert (verdict.witness.lhs, verdict.witness.rhs) == (0, 1)


def test_distributivity_examples(b2, affine3):
    assert check_t_distributive(b2, 1).holds
    assert check_t_distributive(affine3, 3).holds

    verdict = check_t_distributive(affine3, 1)
    assert not verdict.holds
    w = verdict.witness
    # a_1 = a_2 = (0,0), b_2 = (0,0), b_3 = (0,1): (0,1) vs (0,2)
    assert w.args == (0, 0, 0, 1)
    assert (w.lhs, w.rhs) == (1, 2)
    assert w.positions == (1,)


def test_quoted_affine_tuple_is_also_a_violation(affine3):
    # a = (0,1),(0,1); b_2 = (1,1); b_3 = (0,1)
    a1 = a2 = 1
    b2_, b3 = 4, 1
    lhs = affine3.g.eval([affine3.f.eval([a1, a2]), b2_, b3])
    rhs = affine3.f.eval([affine3.g.eval([a1, b2_, b3]), affine3.g.eval([a2, b2_, b3])])
    assert (lhs, rhs) == (1, 2)


def test_distributivity_position_range(b2):
    with pytest.raises(PositionError):
        check_t_distributive(b2, 0)
    with pytest.raises(PositionError):
        check_t_distributive(b2, 3)


def test_distinguished_elements(b2, nand, affine3):
    z4, z5 = gen_modring(4, 2, 2), gen_modring(5, 2, 2)
    assert find_f_identities(z4) == {0}
    assert find_f_identities(b2) == {0}
    assert find_f_identities(nand) == set()

    assert find_g_zeros(b2) == {0}
    assert find_g_zeros(affine3) == set()
    assert find_g_zeros(z5) == {0}

    assert find_g_identities(z5) == {1}
    assert find_g_identities(affine3) == {3}
    assert find_g_identities(gen_powerset(2, 2, 3)) == {3}


def test_classify_powerset():
    report = classify(gen_powerset(2, 2, 3))
    assert report.t_snr == {1, 2, 3}
    assert report.is_semiring
    assert report.absorbing_zeros == {0}
    assert report.g_identities == {3}
    assert report.t_snr_with_absorbing_zero == {1, 2, 3}


def test_classify_affine(affine3):
    report = classify(affine3)
    assert report.f_associative.holds
    assert report.g_associative.holds
    assert report.distributive_positions == {3}
    assert report.is_left_snr
    assert not report.is_right_snr
    assert not report.is_semiring
    assert report.g_identities == {3}
    assert report.absorbing_zeros == set()
    assert report.f_commutative_semigroup
    assert not report.fully_distributive


def test_classify_z6(z6):
    report = classify(z6)
    assert report.is_semiring
    assert report.t_snr == {1, 2}
    assert report.g_identities == {1}


def test_verdicts_are_in_report_order(affine3):
    names = list(classify(affine3).verdicts())
    assert names == [
        "f_associative",
        "f_commutative",
        "g_associative",
        "distributive_1",
        "distributive_2",
        "distributive_3",
    ]


def _naive_distributive(s: FinStructure, t: int) -> bool:
    for a in itertools.product(s.elements, repeat=s.m):
        for b in itertools.product(s.elements, repeat=s.n - 1):
            b = list(b)
            lhs = s.g.eval(b[: t - 1] + [s.f.eval(list(a))] + b[t - 1 :])
            rhs = s.f.eval([s.g.eval(b[: t - 1] + [x] + b[t - 1 :]) for x in a])
            if lhs != rhs:
                return False
    return True


@pytest.mark.parametrize("s", small_corpus(), ids=lambda s: s.name)
def test_distributive_positions_match_naive_oracle(s):
    expected = {t for t in range(1, s.n + 1) if _naive_distributive(s, t)}
    assert classify(s).distributive_positions == expected


@pytest.mark.parametrize("s", small_corpus(), ids=lambda s: s.name)
def test_semiring_implies_every_position(s):
    report = classify(s)
    if report.is_semiring:
        assert report.t_snr == set(range(1, s.n + 1))
    assert report.absorbing_zeros <= report.f_identities & report.g_zeros


def test_failing_witnesses_replay(nand, affine3):
    for s in (nand, affine3):
        for verdict in classify(s).verdicts().values():
            if not verdict.holds:
                lhs, rhs = replay_witness(s, verdict.witness)
                assert (lhs, rhs) == (verdict.witness.lhs, verdict.witness.rhs)
                assert lhs != rhs


# ---------------------------------------------------------------------
# 与朴素实现对拍
# ---------------------------------------------------------------------
@st.composite
def binary_tables(draw, arity):
    entries = draw(st.lists(st.integers(0, 1), min_size=2**arity, max_size=2**arity))
    return OpTable.from_entries(2, arity, entries)


def _all_bracketings_agree(op: OpTable) -> bool:
    r = op.arity
    for args in itertools.product(range(2), repeat=2 * r - 1):
        forms = {
            op.eval_nested(args[:i], args[i : i + r], args[i + r :]) for i in range(r)
        }
        if len(forms) > 1:
            return False
    return True


def _all_permutations_agree(op: OpTable) -> bool:
    for args in itertools.product(range(2), repeat=op.arity):
        values = {op.eval(list(p)) for p in itertools.permutations(args)}
        if len(values) > 1:
            return False
    return True


@settings(max_examples=60)
@given(st.integers(2, 3).flatmap(binary_tables))
def test_associativity_reduction_matches_pairwise_oracle(op):
    assert check_associative(op).holds == _all_bracketings_agree(op)


@settings(max_examples=60)
@given(binary_tables(3))
def test_commutativity_reduction_matches_permutation_oracle(op):
    assert check_commutative(op).holds == _all_permutations_agree(op)


@settings(max_examples=40)
@given(st.integers(2, 3).flatmap(binary_tables))
def test_failing_associativity_witness_replays(op):
    s = FinStructure.from_tables("random", op, op)
    verdict = check_associative(op, "f")
    if not verdict.holds:
        lhs, rhs = replay_witness(s, verdict.witness)
        assert lhs != rhs
