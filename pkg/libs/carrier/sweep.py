# libs/carrier/sweep.py
"""
Block-wise exhaustive sweeps over argument tuples.

Tuples of a given length over 0..k-1 are visited in mixed-radix ascending
order (first coordinate most significant). Each block is a `(length, B)`
integer matrix whose column j is the tuple with index `start + j`.
"""
from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence

import numpy as np

from libs.config.settings import get_settings

Cols = np.ndarray


def tuple_digits(k: int, length: int, start: int, stop: int) -> Cols:
    """Digits of the tuple indices start..stop-1, most significant row first."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((length, idx.size), dtype=np.int64)
    for p in range(length - 1, -1, -1):
        out[p] = idx % k
        idx //= k
    return out


def iter_tuple_blocks(
    k: int, length: int, block: int | None = None
) -> Iterator[Cols]:
    total = k**length
    block = block or get_settings().sweep_block
    for start in range(0, total, block):
        yield tuple_digits(k, length, start, min(start + block, total))


def iter_tuples_over(
    elements: Sequence[int], length: int, block: int | None = None
) -> Iterator[Cols]:
    """Same order as iter_tuple_blocks, but the alphabet is `elements` (sorted)."""
    alphabet = np.asarray(sorted(elements), dtype=np.int64)
    for cols in iter_tuple_blocks(len(alphabet), length, block):
        yield alphabet[cols]


def first_violation(
    blocks: Iterator[Cols],
    evaluate: Callable[[Cols], tuple[np.ndarray, np.ndarray]],
) -> tuple[tuple[int, ...], int, int] | None:
    """
    First tuple (in sweep order) where the two evaluated sides differ.
    Returns (tuple, lhs, rhs) or None.
    """
    for cols in blocks:
        width = cols.shape[1]
        lhs, rhs = evaluate(cols)
        lhs = np.broadcast_to(np.atleast_1d(lhs), (width,))
        rhs = np.broadcast_to(np.atleast_1d(rhs), (width,))
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            j = int(bad[0])
            return tuple(int(c) for c in cols[:, j]), int(lhs[j]), int(rhs[j])
    return None


def first_escape(
    blocks: Iterator[Cols],
    evaluate: Callable[[Cols], np.ndarray],
    member: np.ndarray,
) -> tuple[tuple[int, ...], int] | None:
    """
    First tuple whose image falls outside the boolean membership mask.
    Returns (tuple, image) or None.
    """
    for cols in blocks:
        images = np.broadcast_to(np.atleast_1d(evaluate(cols)), (cols.shape[1],))
        bad = np.flatnonzero(~member[images])
        if bad.size:
            j = int(bad[0])
            return tuple(int(c) for c in cols[:, j]), int(images[j])
    return None


def insert_column(cols: Cols, position: int, value: int | np.ndarray) -> Cols:
    """Insert a constant (or a row) as argument `position` (0-based)."""
    row = np.broadcast_to(np.asarray(value, dtype=np.int64), (cols.shape[1],))
    return np.insert(cols, position, row, axis=0)
