# libs/substructures/subalgebras.py
from __future__ import annotations

import numpy as np

from libs.axioms.verdict import AxiomVerdict, Witness
from libs.carrier.optable import OpTable
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import first_escape, iter_tuples_over
from libs.config.settings import get_settings
from libs.errors import (
    EmptyIntersectionError,
    EnumerationGuardError,
    NotASubseminearringError,
    SnrError,
    TheoremViolationError,
)
from libs.logging.structured_logger import logger
from libs.substructures.subset import Subset


def _check_fits(s: FinStructure, sub: Subset) -> None:
    if sub.k != s.k:
        raise SnrError(f"subset built for k={sub.k}, structure has k={s.k}")


def is_subseminearring(s: FinStructure, sub: Subset) -> AxiomVerdict:
    """f-closed and g-closed on tuples drawn from sub (f first, then g)."""
    _check_fits(s, sub)
    elems = sub.elements()
    member = sub.member_mask()
    for name, op in s.operations():
        hit = first_escape(iter_tuples_over(elems, op.arity), op.eval_many, member)
        if hit is not None:
            args, image = hit
            return AxiomVerdict.fail(
                Witness(law="closure", operation=name, args=args, lhs=image)
            )
    return AxiomVerdict.ok()


def sub_closure(s: FinStructure, seed: Subset) -> Subset:
    """
    Least closed superset of seed.
    每一轮只计算至少包含一个新元素的元组。
    """
    _check_fits(s, seed)
    current = set(seed.elements())
    frontier = set(current)
    rounds = 0
    while frontier:
        rounds += 1
        elems = sorted(current)
        fresh = np.array(sorted(frontier), dtype=np.int64)
        images: set[int] = set()
        for _, op in s.operations():
            for cols in iter_tuples_over(elems, op.arity):
                touch = np.isin(cols, fresh).any(axis=0)
                if touch.any():
                    images.update(int(v) for v in np.unique(op.eval_many(cols[:, touch])))
        frontier = images - current
        current |= frontier

    logger.debug(
        "SUB_CLOSURE_DONE",
        extra={"structure": s.name, "seed": str(seed), "size": len(current), "rounds": rounds},
    )
    return Subset.of(current, s.k)


def enumeration_guard(s: FinStructure) -> None:
    limit = get_settings().enum_max_k
    if s.k > limit:
        raise EnumerationGuardError(
            f"carrier {s.k} too large for exhaustive subset enumeration (limit {limit})"
        )


def enumerate_subs(s: FinStructure) -> list[Subset]:
    enumeration_guard(s)
    found = [
        sub
        for sub in (Subset(mask=mask, k=s.k) for mask in range(1, 1 << s.k))
        if is_subseminearring(s, sub).holds
    ]
    logger.debug("SUB_ENUM_DONE", extra={"structure": s.name, "count": len(found)})
    return found


def intersect_closed_family(s: FinStructure, family: list[Subset]) -> Subset:
    """Intersection of subseminearrings; nonempty intersections are closed again."""
    if not family:
        raise SnrError("family must contain at least one subset")
    mask = (1 << s.k) - 1
    for member in family:
        verdict = is_subseminearring(s, member)
        if not verdict.holds:
            raise NotASubseminearringError(
                f"{{{member}}} is not a subseminearring: {verdict.witness.describe()}"
            )
        mask &= member.mask
    if mask == 0:
        raise EmptyIntersectionError("the intersection of the family is empty")

    result = Subset(mask=mask, k=s.k)
    verdict = is_subseminearring(s, result)
    if not verdict.holds:
        raise TheoremViolationError(
            f"intersection {{{result}}} is not closed: {verdict.witness.describe()}"
        )
    return result


def restrict(s: FinStructure, sub: Subset) -> tuple[FinStructure, tuple[int, ...]]:
    """
    (S, f|S, g|S) as a standalone structure, elements relabelled in ascending
    order, together with the inclusion map (new label -> old element).
    """
    verdict = is_subseminearring(s, sub)
    if not verdict.holds:
        raise NotASubseminearringError(
            f"{{{sub}}} is not closed: {verdict.witness.describe()}"
        )
    elems = np.array(sub.elements(), dtype=np.int64)
    relabel = np.full(s.k, -1, dtype=np.int64)
    relabel[elems] = np.arange(elems.size)

    def restricted(op: OpTable) -> OpTable:
        return OpTable.from_function(
            elems.size, op.arity, lambda cols: relabel[op.eval_many(elems[cols])]
        )

    name = f"{s.name}_sub_" + "_".join(str(int(x)) for x in elems)
    structure = FinStructure.from_tables(name, restricted(s.f), restricted(s.g))
    return structure, tuple(int(x) for x in elems)
