# libs/axioms/engine.py
"""
Exhaustive axiom checks over dense tables.

Scan orders (all witnesses are the first violation under these orders):
  associativity   j = 2..r ascending, then tuple a_1^{2r-1} ascending;
                  the 1-form is compared with the j-form
  commutativity   adjacent transposition (p, p+1) for p ascending, then tuple
  distributivity  tuple (a_1^m, b_1^{t-1}, b_{t+1}^n) ascending
"""
from __future__ import annotations

import time

import numpy as np

from libs.axioms.report import ClassificationReport
from libs.axioms.verdict import AxiomVerdict, Witness
from libs.carrier.optable import OpTable
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import (
    Cols,
    first_violation,
    insert_column,
    iter_tuple_blocks,
)
from libs.errors import PositionError
from libs.logging.structured_logger import logger


# ----------------------------------------------------------------------
# 结合律
# ----------------------------------------------------------------------
def _bracketing(op: OpTable, cols: Cols, j: int) -> np.ndarray:
    """op(a_1^{j-1}, op(a_j^{j+r-1}), a_{j+r}^{2r-1}) with j 1-based."""
    r = op.arity
    inner = op.eval_many(cols[j - 1 : j - 1 + r])
    outer = [*cols[: j - 1], inner, *cols[j - 1 + r :]]
    return op.eval_many(outer)


def check_associative(op: OpTable, operation: str | None = None) -> AxiomVerdict:
    r, k = op.arity, op.carrier_size
    for j in range(2, r + 1):
        hit = first_violation(
            iter_tuple_blocks(k, 2 * r - 1),
            lambda cols, j=j: (_bracketing(op, cols, 1), _bracketing(op, cols, j)),
        )
        if hit is not None:
            args, lhs, rhs = hit
            return AxiomVerdict.fail(
                Witness(
                    law="associativity",
                    args=args,
                    lhs=lhs,
                    rhs=rhs,
                    operation=operation,
                    positions=(1, j),
                )
            )
    return AxiomVerdict.ok()


# ----------------------------------------------------------------------
# 交换律（只查相邻对换，它们生成对称群）
# ----------------------------------------------------------------------
def check_commutative(op: OpTable, operation: str | None = None) -> AxiomVerdict:
    r, k = op.arity, op.carrier_size
    for p in range(1, r):
        order = list(range(r))
        order[p - 1], order[p] = order[p], order[p - 1]
        hit = first_violation(
            iter_tuple_blocks(k, r),
            lambda cols, order=order: (op.eval_many(cols), op.eval_many(cols[order])),
        )
        if hit is not None:
            args, lhs, rhs = hit
            return AxiomVerdict.fail(
                Witness(
                    law="commutativity",
                    args=args,
                    lhs=lhs,
                    rhs=rhs,
                    operation=operation,
                    positions=(p, p + 1),
                )
            )
    return AxiomVerdict.ok()


# ----------------------------------------------------------------------
# t-分配律
# ----------------------------------------------------------------------
def _check_position(s: FinStructure, t: int) -> int:
    if not 1 <= t <= s.n:
        raise PositionError(f"position {t} outside 1..{s.n}")
    return t


def _distributive_sides(s: FinStructure, cols: Cols, t: int) -> tuple[np.ndarray, np.ndarray]:
    a_rows, b_rows = cols[: s.m], cols[s.m :]
    lhs = s.g.eval_many(insert_column(b_rows, t - 1, s.f.eval_many(a_rows)))
    parts = [s.g.eval_many(insert_column(b_rows, t - 1, a)) for a in a_rows]
    rhs = s.f.eval_many(parts)
    return lhs, rhs


def check_t_distributive(s: FinStructure, t: int) -> AxiomVerdict:
    _check_position(s, t)
    hit = first_violation(
        iter_tuple_blocks(s.k, s.m + s.n - 1),
        lambda cols: _distributive_sides(s, cols, t),
    )
    if hit is None:
        return AxiomVerdict.ok()
    args, lhs, rhs = hit
    return AxiomVerdict.fail(
        Witness(
            law="distributivity",
            operation="g",
            args=args,
            lhs=lhs,
            rhs=rhs,
            positions=(t,),
            details={"a": list(args[: s.m]), "b": list(args[s.m :])},
        )
    )


# ----------------------------------------------------------------------
# 特殊元素
# ----------------------------------------------------------------------
def _is_identity_for(op: OpTable, z: int, positions: range) -> bool:
    k = op.carrier_size
    a = np.arange(k, dtype=np.int64)
    for i in positions:
        cols = np.full((op.arity, k), z, dtype=np.int64)
        cols[i - 1] = a
        if not np.array_equal(op.eval_many(cols), a):
            return False
    return True


def find_f_identities(s: FinStructure) -> frozenset[int]:
    return frozenset(
        z for z in s.elements if _is_identity_for(s.f, z, range(1, s.m + 1))
    )


def find_g_identities(s: FinStructure) -> frozenset[int]:
    """Unities: g(1^{i-1}, a, 1^{n-i}) = a for every a and i."""
    return frozenset(
        z for z in s.elements if _is_identity_for(s.g, z, range(1, s.n + 1))
    )


def _is_g_zero(s: FinStructure, z: int) -> bool:
    for i in range(1, s.n + 1):
        for cols in iter_tuple_blocks(s.k, s.n - 1):
            if not np.all(s.g.eval_many(insert_column(cols, i - 1, z)) == z):
                return False
    return True


def find_g_zeros(s: FinStructure) -> frozenset[int]:
    return frozenset(z for z in s.elements if _is_g_zero(s, z))


# ----------------------------------------------------------------------
# 分类
# ----------------------------------------------------------------------
def classify(s: FinStructure) -> ClassificationReport:
    t0 = time.time()

    f_assoc = check_associative(s.f, "f")
    f_comm = check_commutative(s.f, "f")
    g_assoc = check_associative(s.g, "g")
    distributive = {t: check_t_distributive(s, t) for t in range(1, s.n + 1)}

    f_ids = find_f_identities(s)
    g_zeros = find_g_zeros(s)
    g_ids = find_g_identities(s)
    absorbing = f_ids & g_zeros

    semigroups = f_assoc.holds and g_assoc.holds
    t_snr = frozenset(t for t, v in distributive.items() if semigroups and v.holds)
    fully = all(v.holds for v in distributive.values())

    # Def 1.2 只要求 f(a, z^{m-1}) = a（第一个位置）
    semiring_zero = any(
        _is_identity_for(s.f, z, range(1, 2)) for z in sorted(g_zeros)
    )
    is_semiring = f_comm.holds and semigroups and fully and semiring_zero

    report = ClassificationReport(
        f_associative=f_assoc,
        f_commutative=f_comm,
        g_associative=g_assoc,
        distributive=distributive,
        t_snr=t_snr,
        is_right_snr=1 in t_snr,
        is_left_snr=s.n in t_snr,
        f_identities=f_ids,
        g_zeros=g_zeros,
        absorbing_zeros=absorbing,
        g_identities=g_ids,
        is_semiring=is_semiring,
    )

    logger.debug(
        "CLASSIFY_DONE",
        extra={
            "structure": s.name,
            "k": s.k,
            "m": s.m,
            "n": s.n,
            "t_snr": sorted(t_snr),
            "semiring": is_semiring,
            "elapsed_ms": round((time.time() - t0) * 1000, 2),
        },
    )
    return report


# ----------------------------------------------------------------------
# 见证复算：只用标量 eval / eval_nested
# ----------------------------------------------------------------------
def replay_witness(s: FinStructure, w: Witness) -> tuple[int, int]:
    """Re-evaluate an axiom witness and return the two sides."""
    if w.law == "associativity":
        op = s.op(w.operation or "f")
        r = op.arity
        a = list(w.args)
        i, j = w.positions
        lhs = op.eval_nested(a[: i - 1], a[i - 1 : i - 1 + r], a[i - 1 + r :])
        rhs = op.eval_nested(a[: j - 1], a[j - 1 : j - 1 + r], a[j - 1 + r :])
        return lhs, rhs
    if w.law == "commutativity":
        op = s.op(w.operation or "f")
        p, q = w.positions
        swapped = list(w.args)
        swapped[p - 1], swapped[q - 1] = swapped[q - 1], swapped[p - 1]
        return op.eval(w.args), op.eval(swapped)
    if w.law == "distributivity":
        (t,) = w.positions
        a, b = list(w.args[: s.m]), list(w.args[s.m :])
        lhs = s.g.eval([*b[: t - 1], s.f.eval(a), *b[t - 1 :]])
        rhs = s.f.eval([s.g.eval([*b[: t - 1], x, *b[t - 1 :]]) for x in a])
        return lhs, rhs
    raise ValueError(f"no replay rule for law {w.law!r}")
