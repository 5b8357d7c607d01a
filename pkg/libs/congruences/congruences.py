# libs/congruences/congruences.py
"""
Congruences and factor structures.

is_congruence sweeps single-position substitutions: operation f then g,
argument position ascending, tuple ascending; the argument at that position is
replaced by the least element of its block. Chaining such substitutions gives
the simultaneous condition, and comparing with the block representative
suffices by transitivity.
"""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from sympy.utilities.iterables import multiset_partitions

from libs.axioms.engine import classify
from libs.axioms.verdict import AxiomVerdict, Witness
from libs.carrier.optable import OpTable
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import insert_column, iter_tuple_blocks
from libs.config.settings import get_settings
from libs.congruences.partition import Partition
from libs.congruences.union_find import UnionFind
from libs.errors import (
    EnumerationGuardError,
    MalformedPartitionError,
    NotACongruenceError,
    TheoremViolationError,
)
from libs.logging.structured_logger import logger
from libs.morphisms.morphism import Morphism


def _check_fits(s: FinStructure, p: Partition) -> None:
    if p.k != s.k:
        raise MalformedPartitionError(
            f"partition covers {p.k} elements, carrier has {s.k}"
        )


def is_congruence(s: FinStructure, p: Partition) -> AxiomVerdict:
    _check_fits(s, p)
    labels = p.labels()
    reps = np.asarray(p.representatives, dtype=np.int64)
    blocks = p.blocks

    for name, op in s.operations():
        for pos in range(1, op.arity + 1):
            for cols in iter_tuple_blocks(s.k, op.arity):
                swapped = cols.copy()
                swapped[pos - 1] = reps[labels[cols[pos - 1]]]
                original = op.eval_many(cols)
                replaced = op.eval_many(swapped)
                bad = np.flatnonzero(labels[original] != labels[replaced])
                if not bad.size:
                    continue
                j = int(bad[0])
                lhs, rhs = int(original[j]), int(replaced[j])
                return AxiomVerdict.fail(
                    Witness(
                        law="congruence",
                        operation=name,
                        args=tuple(int(c) for c in cols[:, j]),
                        lhs=lhs,
                        rhs=rhs,
                        positions=(pos,),
                        details={
                            "replacement": int(swapped[pos - 1, j]),
                            "blocks": [
                                list(blocks[labels[lhs]]),
                                list(blocks[labels[rhs]]),
                            ],
                        },
                    )
                )
    return AxiomVerdict.ok()


def require_congruence(s: FinStructure, p: Partition) -> None:
    verdict = is_congruence(s, p)
    if not verdict.holds:
        raise NotACongruenceError(
            f"{p} is not a congruence of {s.name}: {verdict.witness.describe()}"
        )


# ----------------------------------------------------------------------
# 生成
# ----------------------------------------------------------------------
def congruence_closure(
    s: FinStructure, seed_pairs: Iterable[tuple[int, int]]
) -> Partition:
    """
    Least congruence containing the seed pairs.

    Union-find over the carrier plus a worklist of merged edges; each edge (x, y)
    is pushed through every operation, position and context. Edges that do
    not merge anything are already implied by earlier ones.
    """
    uf = UnionFind(s.k)
    worklist: list[tuple[int, int]] = []
    for x, y in seed_pairs:
        x, y = s.check_element(x), s.check_element(y)
        if uf.union(x, y):
            worklist.append((x, y))

    pushed = 0
    while worklist:
        x, y = worklist.pop()
        pushed += 1
        for _, op in s.operations():
            for pos in range(op.arity):
                for cols in iter_tuple_blocks(s.k, op.arity - 1):
                    left = op.eval_many(insert_column(cols, pos, x))
                    right = op.eval_many(insert_column(cols, pos, y))
                    differ = left != right
                    if not differ.any():
                        continue
                    edges = np.unique(np.stack([left[differ], right[differ]]), axis=1)
                    for a, b in edges.T:
                        a, b = int(a), int(b)
                        if uf.union(a, b):
                            worklist.append((a, b))

    result = uf.to_partition()
    verdict = is_congruence(s, result)
    if not verdict.holds:
        raise TheoremViolationError(
            f"closure {result} is not a congruence: {verdict.witness.describe()}"
        )
    logger.debug(
        "CONGRUENCE_CLOSURE_DONE",
        extra={"structure": s.name, "edges": pushed, "blocks": result.block_count},
    )
    return result


def enumerate_congruences(s: FinStructure) -> list[Partition]:
    """Every congruence, finest first (block count descending), then canonical form."""
    limit = get_settings().congruence_max_k
    if s.k > limit:
        raise EnumerationGuardError(
            f"carrier {s.k} too large for partition enumeration (limit {limit})"
        )
    found = []
    scanned = 0
    for blocks in multiset_partitions(list(s.elements)):
        scanned += 1
        p = Partition.from_blocks(blocks, s.k)
        if is_congruence(s, p).holds:
            found.append(p)
    found.sort(key=Partition.sort_key)
    logger.debug(
        "CONGRUENCE_ENUM_DONE",
        extra={"structure": s.name, "partitions": scanned, "count": len(found)},
    )
    return found


# ----------------------------------------------------------------------
# 商结构
# ----------------------------------------------------------------------
def _quotient_table(op: OpTable, labels: np.ndarray, reps: np.ndarray) -> OpTable:
    return OpTable.from_function(
        reps.size, op.arity, lambda cols: labels[op.eval_many(reps[cols])]
    )


def _check_well_defined(
    s: FinStructure, name: str, op: OpTable, op_q: OpTable, labels: np.ndarray
) -> None:
    settings = get_settings()
    if s.k <= settings.quotient_exhaustive_max_k:
        batches = iter_tuple_blocks(s.k, op.arity)
    else:
        rng = np.random.default_rng(settings.quotient_seed)
        batches = iter([rng.integers(0, s.k, size=(op.arity, settings.quotient_spot_draws))])

    for cols in batches:
        direct = labels[op.eval_many(cols)]
        via_blocks = op_q.eval_many(labels[cols])
        bad = np.flatnonzero(direct != via_blocks)
        if bad.size:
            args = tuple(int(c) for c in cols[:, int(bad[0])])
            raise TheoremViolationError(
                f"{name}' is not well-defined on {s.name}: "
                f"{name}{args} lands in block {int(direct[bad[0]])}, "
                f"representatives give block {int(via_blocks[bad[0]])}"
            )


def quotient(s: FinStructure, p: Partition) -> FinStructure:
    """R/p with block indices as elements, tables from block representatives."""
    _check_fits(s, p)
    require_congruence(s, p)

    labels = p.labels()
    reps = np.asarray(p.representatives, dtype=np.int64)
    f_q = _quotient_table(s.f, labels, reps)
    g_q = _quotient_table(s.g, labels, reps)
    _check_well_defined(s, "f", s.f, f_q, labels)
    _check_well_defined(s, "g", s.g, g_q, labels)

    factor = FinStructure.from_tables(f"{s.name}_factor", f_q, g_q)

    # 父结构成立的公理在商结构上也必须成立
    parent, child = classify(s).verdicts(), classify(factor).verdicts()
    lost = [law for law, v in parent.items() if v.holds and not child[law].holds]
    if lost:
        raise TheoremViolationError(
            f"{factor.name} loses {', '.join(lost)}: "
            + "; ".join(child[law].witness.describe() for law in lost)
        )
    logger.debug(
        "QUOTIENT_DONE",
        extra={"structure": s.name, "partition": str(p), "k": factor.k},
    )
    return factor


def quotient_map(s: FinStructure, p: Partition) -> Morphism:
    """The natural epimorphism x -> block of x."""
    return Morphism(s, quotient(s, p), p.class_of)
