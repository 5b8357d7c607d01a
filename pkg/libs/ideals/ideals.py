# libs/ideals/ideals.py
"""
i-(m,n)-ideals and (m,n)-ideals.

Absorption sweeps: x ascending over the candidate set, then the k^(n-1)
context tuples (b_1^{i-1}, b_{i+1}^n) in mixed-radix order.
"""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from libs.axioms.verdict import AxiomVerdict, Witness
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import first_escape, insert_column, iter_tuple_blocks, iter_tuples_over
from libs.errors import (
    EmptyIntersectionError,
    NotAnIdealError,
    PositionError,
    SnrError,
    TheoremViolationError,
)
from libs.logging.structured_logger import logger
from libs.substructures.subalgebras import enumeration_guard, is_subseminearring
from libs.substructures.subset import Subset


def _check_position(s: FinStructure, i: int) -> None:
    if not 1 <= i <= s.n:
        raise PositionError(f"position {i} outside 1..{s.n}")


def check_absorption(s: FinStructure, sub: Subset, i: int) -> AxiomVerdict:
    """g(b_1^{i-1}, x, b_{i+1}^n) in sub for every x in sub and every context."""
    _check_position(s, i)
    member = sub.member_mask()
    for x in sub.elements():
        hit = first_escape(
            iter_tuple_blocks(s.k, s.n - 1),
            lambda cols, x=x: s.g.eval_many(insert_column(cols, i - 1, x)),
            member,
        )
        if hit is not None:
            context, image = hit
            args = (*context[: i - 1], x, *context[i - 1 :])
            return AxiomVerdict.fail(
                Witness(
                    law="absorption",
                    operation="g",
                    args=args,
                    lhs=image,
                    positions=(i,),
                    details={"x": x},
                )
            )
    return AxiomVerdict.ok()


def is_i_ideal(s: FinStructure, sub: Subset, i: int) -> AxiomVerdict:
    _check_position(s, i)
    closed = is_subseminearring(s, sub)
    if not closed.holds:
        return closed
    return check_absorption(s, sub, i)


def is_left_ideal(s: FinStructure, sub: Subset) -> AxiomVerdict:
    """1-(m,n)-ideal"""
    return is_i_ideal(s, sub, 1)


def is_right_ideal(s: FinStructure, sub: Subset) -> AxiomVerdict:
    """n-(m,n)-ideal"""
    return is_i_ideal(s, sub, s.n)


def is_ideal(s: FinStructure, sub: Subset) -> AxiomVerdict:
    """
    Ideal criterion: f(a_1^m) in I for a_1^m in I, plus absorption at every
    position (g-closure is not checked separately).
    """
    if sub.k != s.k:
        raise SnrError(f"subset built for k={sub.k}, structure has k={s.k}")
    hit = first_escape(
        iter_tuples_over(sub.elements(), s.m), s.f.eval_many, sub.member_mask()
    )
    if hit is not None:
        args, image = hit
        return AxiomVerdict.fail(Witness(law="closure", operation="f", args=args, lhs=image))
    for i in range(1, s.n + 1):
        verdict = check_absorption(s, sub, i)
        if not verdict.holds:
            return verdict
    return AxiomVerdict.ok()


def is_ideal_by_definition(s: FinStructure, sub: Subset) -> AxiomVerdict:
    """Subseminearring plus absorption in every position."""
    for i in range(1, s.n + 1):
        verdict = is_i_ideal(s, sub, i)
        if not verdict.holds:
            return verdict
    return AxiomVerdict.ok()


def ideal_closure(s: FinStructure, seed: Subset) -> Subset:
    """
    Least fixpoint of
      (a) f on tuples inside the set,
      (b) g with one slot from the set and every other slot over R.
    """
    current = set(seed.elements())
    frontier = set(current)
    while frontier:
        fresh = np.array(sorted(frontier), dtype=np.int64)
        images: set[int] = set()

        for cols in iter_tuples_over(sorted(current), s.m):
            touch = np.isin(cols, fresh).any(axis=0)
            if touch.any():
                images.update(int(v) for v in np.unique(s.f.eval_many(cols[:, touch])))

        # 吸收：新元素放进每个位置，其余位置取遍 R
        for x in frontier:
            for i in range(1, s.n + 1):
                for cols in iter_tuple_blocks(s.k, s.n - 1):
                    values = s.g.eval_many(insert_column(cols, i - 1, x))
                    images.update(int(v) for v in np.unique(values))

        frontier = images - current
        current |= frontier

    return Subset.of(current, s.k)


def _positions(s: FinStructure, positions: Iterable[int] | None) -> list[int]:
    if positions is None:
        return list(range(1, s.n + 1))
    out = sorted(set(positions))
    for i in out:
        _check_position(s, i)
    return out


def enumerate_ideals(
    s: FinStructure, positions: Iterable[int] | None = None
) -> list[Subset]:
    """Subsets that are i-ideals for every requested position (None = all)."""
    enumeration_guard(s)
    wanted = _positions(s, positions)
    found: list[Subset] = []
    for mask in range(1, 1 << s.k):
        sub = Subset(mask=mask, k=s.k)
        if not is_subseminearring(s, sub).holds:
            continue
        if all(check_absorption(s, sub, i).holds for i in wanted):
            found.append(sub)
    logger.debug(
        "IDEAL_ENUM_DONE",
        extra={"structure": s.name, "positions": wanted, "count": len(found)},
    )
    return found


def intersect_ideals(s: FinStructure, family: list[Subset]) -> Subset:
    if not family:
        raise SnrError("family must contain at least one subset")
    mask = (1 << s.k) - 1
    for member in family:
        verdict = is_ideal(s, member)
        if not verdict.holds:
            raise NotAnIdealError(
                f"{{{member}}} is not an ideal: {verdict.witness.describe()}"
            )
        mask &= member.mask
    if mask == 0:
        raise EmptyIntersectionError("the intersection of the family is empty")

    result = Subset(mask=mask, k=s.k)
    verdict = is_ideal(s, result)
    if not verdict.holds:
        raise TheoremViolationError(
            f"intersection {{{result}}} is not an ideal: {verdict.witness.describe()}"
        )
    return result
