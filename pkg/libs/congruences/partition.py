# libs/congruences/partition.py
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from libs.errors import MalformedPartitionError


@dataclass(frozen=True)
class Partition:
    """
    Set partition of {0..k-1} in canonical form.

    class_of[x] is the block index of x; blocks are numbered by ascending least
    element, so two partitions are equal iff their class_of tuples are equal.
    """

    class_of: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = tuple(int(c) for c in self.class_of)
        if not labels:
            raise MalformedPartitionError("partition of an empty carrier")
        if labels != _canonical(labels):
            raise MalformedPartitionError(
                f"labels {labels} are not canonical (use Partition.from_labels)"
            )
        object.__setattr__(self, "class_of", labels)

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Partition:
        """Any labelling x -> label; equal labels share a block."""
        return cls(_canonical(tuple(int(v) for v in labels)))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], k: int) -> Partition:
        labels = [-1] * k
        for idx, block in enumerate(blocks):
            members = list(block)
            if not members:
                raise MalformedPartitionError("empty block")
            for x in members:
                x = int(x)
                if not 0 <= x < k:
                    raise MalformedPartitionError(f"element {x} outside carrier 0..{k - 1}")
                if labels[x] != -1:
                    raise MalformedPartitionError(f"element {x} appears in two blocks")
                labels[x] = idx
        missing = [x for x, label in enumerate(labels) if label == -1]
        if missing:
            raise MalformedPartitionError(f"elements {missing} are in no block")
        return cls.from_labels(labels)

    @classmethod
    def parse(cls, text: str, k: int) -> Partition:
        """'0,2|1,3' -> {0,2} | {1,3}"""
        blocks = []
        for chunk in text.replace(" ", "").split("|"):
            try:
                blocks.append([int(t) for t in chunk.split(",") if t])
            except ValueError as e:
                raise MalformedPartitionError(f"bad partition literal {text!r}") from e
        return cls.from_blocks(blocks, k)

    @classmethod
    def identity(cls, k: int) -> Partition:
        return cls(tuple(range(k)))

    @classmethod
    def universal(cls, k: int) -> Partition:
        return cls((0,) * k)

    # ------------------------------------------------------------------
    # 查询
    # ------------------------------------------------------------------
    @property
    def k(self) -> int:
        return len(self.class_of)

    @property
    def block_count(self) -> int:
        return max(self.class_of) + 1

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return tuple(tuple(b) for b in out)

    @property
    def representatives(self) -> tuple[int, ...]:
        """Least element of each block, in block order."""
        return tuple(b[0] for b in self.blocks)

    def labels(self) -> np.ndarray:
        return np.asarray(self.class_of, dtype=np.int64)

    def same_block(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def refines(self, other: Partition) -> bool:
        """Every block of self lies inside a block of other."""
        if other.k != self.k:
            return False
        return all(
            len({other.class_of[x] for x in block}) == 1 for block in self.blocks
        )

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Finer first (more blocks), then canonical labels."""
        return (-self.block_count, self.class_of)

    def __str__(self) -> str:
        return "|".join(",".join(str(x) for x in b) for b in self.blocks)


def _canonical(labels: tuple[int, ...]) -> tuple[int, ...]:
    # 按首次出现重新编号 = 按块内最小元素排序
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(v, len(seen)) for v in labels)
