# tests/test_carrier.py
import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from libs.carrier.optable import OpTable, encode_args
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import iter_tuple_blocks, tuple_digits
from libs.errors import ArityMismatchError, ElementRangeError, SizeCapError

OR = [0, 1, 1, 1]
AND = [0, 0, 0, 1]
NAND = [1, 1, 1, 0]
Z3_ADD = [(a + b) % 3 for a in range(3) for b in range(3)]


def test_encode_args_place_value():
    assert encode_args([0, 0, 1], 2) == 1
    assert encode_args([1, 0], 3) == 3
    assert encode_args([2, 1, 0], 3) == 21


def test_encode_args_rejects_out_of_range():
    with pytest.raises(ElementRangeError):
        encode_args([0, 3], 3)


@pytest.mark.parametrize("k,r", [(k, r) for k in range(1, 5) for r in range(1, 4)])
def test_encode_args_is_a_bijection(k, r):
    indices = [encode_args(t, k) for t in itertools.product(range(k), repeat=r)]
    assert indices == list(range(k**r))


def test_eval_examples():
    assert OpTable.from_entries(2, 2, OR).eval([1, 0]) == 1
    assert OpTable.from_entries(2, 2, AND).eval([1, 1]) == 1
    assert OpTable.from_entries(3, 2, Z3_ADD).eval([2, 2]) == 1


def test_eval_checks_arity_and_range():
    op = OpTable.from_entries(2, 2, OR)
    with pytest.raises(ArityMismatchError):
        op.eval([1])
    with pytest.raises(ElementRangeError):
        op.eval([1, 2])


def test_eval_nested_examples():
    assert OpTable.from_entries(2, 2, OR).eval_nested([], [0, 1], [0]) == 1
    assert OpTable.from_entries(3, 2, Z3_ADD).eval_nested([2], [2, 2], []) == 0
    assert OpTable.from_entries(2, 2, NAND).eval_nested([], [0, 0], [1]) == 0


def test_eval_nested_checks_hole_arity():
    with pytest.raises(ArityMismatchError):
        OpTable.from_entries(2, 2, OR).eval_nested([0, 1], [0, 1], [])


def test_table_validation():
    with pytest.raises(ArityMismatchError):
        OpTable.from_entries(2, 2, [0, 1, 1])
    with pytest.raises(ElementRangeError):
        OpTable.from_entries(2, 2, [0, 1, 2, 1])
    with pytest.raises(ArityMismatchError):
        OpTable.from_entries(2, 1, [0, 1])


def test_size_caps():
    with pytest.raises(SizeCapError):
        OpTable.from_entries(65, 2, [0] * 65**2)
    with pytest.raises(SizeCapError):
        # 64^5 > 2^26
        OpTable.from_function(64, 5, lambda cols: cols[0])


def test_tables_are_read_only():
    op = OpTable.from_entries(2, 2, OR)
    with pytest.raises(ValueError):
        op.table[0] = 1


def test_structure_consistency_checks():
    f = OpTable.from_entries(2, 2, OR)
    g3 = OpTable.from_entries(3, 2, Z3_ADD)
    with pytest.raises(ArityMismatchError):
        FinStructure(name="bad", k=2, m=2, n=2, f=f, g=g3)
    with pytest.raises(ArityMismatchError):
        FinStructure(name="bad", k=2, m=3, n=2, f=f, g=f)


def test_tables_equal_ignores_names(b2):
    same = FinStructure.from_entries("other", 2, 2, OR, 2, AND)
    assert b2.tables_equal(same)
    assert not b2.tables_equal(FinStructure.from_entries("x", 2, 2, OR, 2, OR))


def test_sweep_order_is_mixed_radix():
    cols = tuple_digits(3, 2, 0, 9)
    assert [tuple(c) for c in cols.T] == list(itertools.product(range(3), repeat=2))


def test_small_blocks_cover_every_tuple_once():
    blocks = list(iter_tuple_blocks(2, 3, block=3))
    assert [b.shape[1] for b in blocks] == [3, 3, 2]
    joined = np.concatenate(blocks, axis=1)
    assert [tuple(c) for c in joined.T] == list(itertools.product(range(2), repeat=3))


@st.composite
def tables(draw, max_k=3, max_arity=3):
    k = draw(st.integers(1, max_k))
    r = draw(st.integers(2, max_arity))
    entries = draw(st.lists(st.integers(0, k - 1), min_size=k**r, max_size=k**r))
    return OpTable.from_entries(k, r, entries)


@given(tables())
def test_eval_many_matches_scalar_eval(op):
    cols = tuple_digits(op.carrier_size, op.arity, 0, op.carrier_size**op.arity)
    many = op.eval_many(cols)
    for j, args in enumerate(cols.T):
        assert many[j] == op.eval(list(args))


@given(tables(max_k=2, max_arity=2))
def test_eval_nested_matches_two_step_eval(op):
    k, r = op.carrier_size, op.arity
    for args in itertools.product(range(k), repeat=2 * r - 1):
        for i in range(r):
            inner = op.eval(list(args[i : i + r]))
            expected = op.eval([*args[:i], inner, *args[i + r :]])
            assert op.eval_nested(args[:i], args[i : i + r], args[i + r :]) == expected
