# libs/units/units.py
"""
Units with respect to a chosen unity e.

x is invertible when some a satisfies g(a, x, e^{n-2}) = g(x, a, e^{n-2}) = e.
Inverses are not assumed unique: the least one (ascending scan) is used and
UnitsReport.multiple_inverses lists the elements with more than one.
"""
from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from libs.axioms.engine import find_g_identities
from libs.axioms.verdict import AxiomVerdict, Witness
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import first_violation, insert_column, iter_tuple_blocks
from libs.errors import (
    ArityMismatchError,
    NotAUnitError,
    NotAUnityError,
    PositionError,
    TheoremViolationError,
)
from libs.logging.structured_logger import logger


@dataclass(frozen=True)
class UnitsReport:
    unity: int
    units: frozenset[int]
    inverse_of: dict[int, int]
    multiple_inverses: frozenset[int] = frozenset()


def _require_unity(s: FinStructure, e: int) -> int:
    e = s.check_element(e)
    if e not in find_g_identities(s):
        raise NotAUnityError(f"{e} is not a g-identity of {s.name}")
    return e


def _g_with_unity(s: FinStructure, left: int, right: int, e: int) -> int:
    return s.g.eval([left, right, *([e] * (s.n - 2))])


def _all_inverses(s: FinStructure, e: int, x: int) -> list[int]:
    # 向量化：一次算出所有候选 a
    a = np.arange(s.k, dtype=np.int64)
    tail = [np.full(s.k, e, dtype=np.int64)] * (s.n - 2)
    left = s.g.eval_many([a, np.full(s.k, x, dtype=np.int64), *tail])
    right = s.g.eval_many([np.full(s.k, x, dtype=np.int64), a, *tail])
    return [int(v) for v in np.flatnonzero((left == e) & (right == e))]


def g_inverse(s: FinStructure, e: int, x: int) -> int | None:
    """Least two-sided g-inverse of x, or None."""
    e = _require_unity(s, e)
    x = s.check_element(x)
    found = _all_inverses(s, e, x)
    return found[0] if found else None


def units_set(s: FinStructure, e: int) -> UnitsReport:
    e = _require_unity(s, e)
    inverse_of: dict[int, int] = {}
    multiple: set[int] = set()
    for x in s.elements:
        found = _all_inverses(s, e, x)
        if found:
            inverse_of[x] = found[0]
            if len(found) > 1:
                multiple.add(x)
    if multiple:
        logger.warning(
            "UNITS_MULTIPLE_INVERSES",
            extra={"structure": s.name, "unity": e, "elements": sorted(multiple)},
        )
    return UnitsReport(
        unity=e,
        units=frozenset(inverse_of),
        inverse_of=inverse_of,
        multiple_inverses=frozenset(multiple),
    )


def _require_unit(report: UnitsReport, x: int) -> int:
    if x not in report.units:
        raise NotAUnitError(f"{x} is not invertible with respect to unity {report.unity}")
    return report.inverse_of[x]



def _check_context(context: Sequence[int], length: int) -> None:
    if len(context) != length:
        raise ArityMismatchError(f"context must have {length} elements, got {len(context)}")


def _inverse_identity_rows(s: FinStructure, report: UnitsReport, x: int, cols) -> list:
    inv = report.inverse_of[x]
    e = report.unity
    return [
        s.g.eval_many(insert_column(insert_column(cols, 0, inv), 0, x)),
        s.g.eval_many(insert_column(insert_column(cols, 0, x), 0, inv)),
        s.g.eval_many(insert_column(insert_column(cols, s.n - 2, x), s.n - 1, inv)),
        s.g.eval_many(insert_column(insert_column(cols, s.n - 2, inv), s.n - 1, x)),
        s.g.eval_many(insert_column(insert_column(cols, s.n - 2, e), s.n - 1, e)),
    ]


def _inverse_identity_sweep(
    s: FinStructure, report: UnitsReport, x: int, blocks
) -> AxiomVerdict:
    for cols in blocks:
        rows = np.stack(_inverse_identity_rows(s, report, x, cols))
        bad = np.flatnonzero((rows != rows[0]).any(axis=0))
        if bad.size:
            j = int(bad[0])
            values = [int(v) for v in rows[:, j]]
            other = next(idx for idx in range(1, len(values)) if values[idx] != values[0])
            return AxiomVerdict.fail(
                Witness(
                    law="inverse-identities",
                    operation="g",
                    args=(x, *(int(c) for c in cols[:, j])),
                    lhs=values[0],
                    rhs=values[other],
                    positions=(1, other + 1),
                    details={"inverse": report.inverse_of[x], "values": values},
                )
            )
    return AxiomVerdict.ok()


def check_inverse_identities(
    s: FinStructure, e: int, x: int, context: Sequence[int]
) -> AxiomVerdict:
    """
    g(x, x^-1, c) = g(x^-1, x, c) = g(c, x, x^-1) = g(c, x^-1, x) = g(c, e, e)
    for the context c = a_3^n.
    """
    report = units_set(s, e)
    x = s.check_element(x)
    _require_unit(report, x)
    _check_context(context, s.n - 2)
    c = np.array([[s.check_element(a)] for a in context], dtype=np.int64).reshape(s.n - 2, 1)
    return _inverse_identity_sweep(s, report, x, iter([c]))


def _shift_sweep(s: FinStructure, e: int, i: int, j: int, blocks) -> AxiomVerdict:
    hit = first_violation(
        blocks,
        lambda cols: (
            s.g.eval_many(insert_column(cols, i - 1, e)),
            s.g.eval_many(insert_column(cols, j - 1, e)),
        ),
    )
    if hit is None:
        return AxiomVerdict.ok()
    context, lhs, rhs = hit
    return AxiomVerdict.fail(
        Witness(
            law="shift-identity",
            operation="g",
            args=context,
            lhs=lhs,
            rhs=rhs,
            positions=(i, j),
        )
    )


def check_shift_identity(
    s: FinStructure, e: int, context: Sequence[int], i: int, j: int
) -> AxiomVerdict:
    """g(a_2^i, e, a_{i+1}^n) = g(a_2^j, e, a_{j+1}^n): e inserted at slot i vs j."""
    e = _require_unity(s, e)
    if not 1 <= i < j <= s.n:
        raise PositionError(f"need 1 <= i < j <= {s.n}, got i={i}, j={j}")
    _check_context(context, s.n - 1)
    c = np.array([s.check_element(a) for a in context], dtype=np.int64).reshape(s.n - 1, 1)
    return _shift_sweep(s, e, i, j, iter([c]))


def _product_inverse(s: FinStructure, report: UnitsReport, args: Sequence[int]) -> int:
    inverses = [report.inverse_of[a] for a in args]
    product = s.g.eval(list(args))
    candidate = s.g.eval(inverses[::-1])
    if (
        _g_with_unity(s, product, candidate, report.unity) != report.unity
        or _g_with_unity(s, candidate, product, report.unity) != report.unity
    ):
        raise TheoremViolationError(
            f"g{tuple(inverses[::-1])} = {candidate} is not a g-inverse of "
            f"g{tuple(args)} = {product}"
        )
    return candidate


def product_inverse(s: FinStructure, e: int, args: Sequence[int]) -> int:
    """
    Inverse of g(a_1^n) for units a_i, computed as g(a_n^-1, ..., a_1^-1)
    and checked to be two-sided.
    """
    report = units_set(s, e)
    if len(args) != s.n:
        raise ArityMismatchError(f"expected {s.n} units, got {len(args)}")
    for a in args:
        _require_unit(report, s.check_element(a))
    return _product_inverse(s, report, [int(a) for a in args])


def verify_unit_theorems(s: FinStructure, e: int) -> dict[str, AxiomVerdict]:
    """
    Exhaustive sweep of the three unity theorems for one unity:
      closure            every n-tuple of units multiplies to a unit whose
                         inverse is the reversed product of inverses
      inverse_identities every unit x and every context a_3^n
      shift_identity     every context a_2^n and every i < j
    """
    report = units_set(s, e)
    units = sorted(report.units)
    verdicts: dict[str, AxiomVerdict] = {"closure": AxiomVerdict.ok()}

    for args in itertools.product(units, repeat=s.n):
        try:
            _product_inverse(s, report, args)
        except TheoremViolationError:
            verdicts["closure"] = AxiomVerdict.fail(
                Witness(
                    law="unit-closure",
                    operation="g",
                    args=tuple(args),
                    lhs=s.g.eval(list(args)),
                    details={
                        "reversed_inverse_product": s.g.eval(
                            [report.inverse_of[a] for a in reversed(args)]
                        )
                    },
                )
            )
            break

    verdicts["inverse_identities"] = _first_failure(
        _inverse_identity_sweep(s, report, x, iter_tuple_blocks(s.k, s.n - 2))
        for x in units
    )
    verdicts["shift_identity"] = _first_failure(
        _shift_sweep(s, report.unity, i, j, iter_tuple_blocks(s.k, s.n - 1))
        for i in range(1, s.n + 1)
        for j in range(i + 1, s.n + 1)
    )

    logger.debug(
        "UNIT_THEOREMS_DONE",
        extra={
            "structure": s.name,
            "unity": report.unity,
            "units": len(units),
            "holds": {name: v.holds for name, v in verdicts.items()},
        },
    )
    return verdicts


def _first_failure(verdicts) -> AxiomVerdict:
    for verdict in verdicts:
        if not verdict.holds:
            return verdict
    return AxiomVerdict.ok()
