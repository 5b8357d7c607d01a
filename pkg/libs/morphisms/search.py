# libs/morphisms/search.py
"""
Exhaustive homomorphism search by backtracking.

psi(0), psi(1), ... are assigned in ascending order, each trying codomain
elements ascending, so results come out in lexicographic map order. Every
operation tuple is checked exactly once: at the step that assigns the largest
element among its arguments and its result.
"""
from __future__ import annotations

import time
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from libs.carrier.optable import OpTable
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import tuple_digits
from libs.config.settings import get_settings
from libs.errors import ArityMismatchError, SearchSpaceError
from libs.logging.structured_logger import logger
from libs.morphisms.morphism import Morphism


@dataclass(frozen=True)
class _Check:
    """Tuples of one operation that become fully assigned at one step."""

    cols: np.ndarray  # (arity, N) domain arguments
    results: np.ndarray  # (N,) domain values
    target: OpTable


def _checks_by_step(s1: FinStructure, s2: FinStructure) -> list[list[_Check]]:
    steps: list[list[_Check]] = [[] for _ in range(s1.k)]
    for (_, op), (_, op2) in zip(s1.operations(), s2.operations()):
        cols = tuple_digits(s1.k, op.arity, 0, s1.k**op.arity)
        results = op.eval_many(cols).astype(np.int64)
        step = np.maximum(cols.max(axis=0), results)
        order = np.argsort(step, kind="stable")
        bounds = np.searchsorted(step[order], np.arange(s1.k + 1))
        for v in range(s1.k):
            picked = order[bounds[v] : bounds[v + 1]]
            if picked.size:
                steps[v].append(_Check(cols[:, picked], results[picked], op2))
    return steps


def _check_arities(s1: FinStructure, s2: FinStructure) -> None:
    if s1.m != s2.m or s1.n != s2.n:
        raise ArityMismatchError(
            f"({s1.m},{s1.n}) and ({s2.m},{s2.n}) structures have different arities"
        )


def iter_homomorphisms(s1: FinStructure, s2: FinStructure) -> Iterator[tuple[int, ...]]:
    _check_arities(s1, s2)
    steps = _checks_by_step(s1, s2)
    psi = np.full(s1.k, -1, dtype=np.int64)

    def consistent(v: int) -> bool:
        return all(
            np.array_equal(psi[c.results], c.target.eval_many(psi[c.cols]))
            for c in steps[v]
        )

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == s1.k:
            yield tuple(int(x) for x in psi)
            return
        for candidate in range(s2.k):
            psi[v] = candidate
            if consistent(v):
                yield from extend(v + 1)
        psi[v] = -1

    yield from extend(0)


def find_homomorphisms(
    s1: FinStructure, s2: FinStructure, limit: int | None = None
) -> list[Morphism]:
    """All homomorphisms s1 -> s2 in lexicographic map order, at most `limit`."""
    _check_arities(s1, s2)
    space = s2.k**s1.k
    budget = get_settings().hom_search_space
    if limit is None and space > budget:
        raise SearchSpaceError(
            f"{s2.k}^{s1.k} candidate maps exceed the search budget {budget}; pass a limit"
        )
    if limit is not None and limit < 0:
        raise SearchSpaceError(f"limit must be >= 0, got {limit}")

    t0 = time.time()
    found: list[Morphism] = []
    if limit != 0:
        for images in iter_homomorphisms(s1, s2):
            found.append(Morphism(s1, s2, images))
            if limit is not None and len(found) >= limit:
                break

    logger.debug(
        "HOM_SEARCH_DONE",
        extra={
            "domain": s1.name,
            "codomain": s2.name,
            "count": len(found),
            "limit": limit,
            "elapsed_ms": int((time.time() - t0) * 1000),
        },
    )
    return found
