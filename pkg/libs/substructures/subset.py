# libs/substructures/subset.py
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from libs.errors import ElementRangeError, EmptySubsetError


@dataclass(frozen=True, order=True)
class Subset:
    """Nonempty subset of {0..k-1} as a bitmask (bit x set <=> x in S)."""

    mask: int
    k: int

    def __post_init__(self) -> None:
        if self.mask == 0:
            raise EmptySubsetError("subset must be nonempty")
        if self.mask >> self.k:
            raise ElementRangeError(f"subset {self.mask:#x} exceeds carrier 0..{self.k - 1}")

    @classmethod
    def of(cls, elements: Iterable[int], k: int) -> Subset:
        mask = 0
        for x in elements:
            x = int(x)
            if not 0 <= x < k:
                raise ElementRangeError(f"element {x} outside carrier 0..{k - 1}")
            mask |= 1 << x
        return cls(mask=mask, k=k)

    @classmethod
    def full(cls, k: int) -> Subset:
        return cls(mask=(1 << k) - 1, k=k)

    @classmethod
    def parse(cls, text: str, k: int) -> Subset:
        """'0,2' -> {0, 2}"""
        items = [t for t in text.replace(" ", "").split(",") if t]
        try:
            return cls.of((int(t) for t in items), k)
        except ValueError as e:
            if isinstance(e, (EmptySubsetError, ElementRangeError)):
                raise
            raise ElementRangeError(f"bad element list {text!r}") from e

    def elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.k) if self.mask >> x & 1)

    def member_mask(self) -> np.ndarray:
        return np.array([bool(self.mask >> x & 1) for x in range(self.k)], dtype=bool)

    def issubset(self, other: Subset) -> bool:
        return self.mask & ~other.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.k) - 1

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < self.k and bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.elements())
