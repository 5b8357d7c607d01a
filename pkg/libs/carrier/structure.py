# libs/carrier/structure.py
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from libs.carrier.optable import OpTable
from libs.errors import ArityMismatchError, ElementRangeError


@dataclass(frozen=True)
class FinStructure:
    """
    The triple (R, f, g) on R = {0..k-1}: f is the m-ary addition,
    g the n-ary multiplication. Immutable; safe to share.
    """

    name: str
    k: int
    m: int
    n: int
    f: OpTable
    g: OpTable

    def __post_init__(self) -> None:
        if self.f.carrier_size != self.k or self.g.carrier_size != self.k:
            raise ArityMismatchError(
                f"tables built for k={self.f.carrier_size}/{self.g.carrier_size}, "
                f"structure says k={self.k}"
            )
        if self.f.arity != self.m or self.g.arity != self.n:
            raise ArityMismatchError(
                f"f/g arities {self.f.arity}/{self.g.arity} != m/n {self.m}/{self.n}"
            )

    @classmethod
    def from_tables(cls, name: str, f: OpTable, g: OpTable) -> FinStructure:
        return cls(name=name, k=f.carrier_size, m=f.arity, n=g.arity, f=f, g=g)

    @classmethod
    def from_entries(
        cls,
        name: str,
        k: int,
        m: int,
        f_entries: Sequence[int],
        n: int,
        g_entries: Sequence[int],
    ) -> FinStructure:
        return cls(
            name=name,
            k=k,
            m=m,
            n=n,
            f=OpTable.from_entries(k, m, f_entries),
            g=OpTable.from_entries(k, n, g_entries),
        )

    @property
    def elements(self) -> range:
        return range(self.k)

    def operations(self) -> tuple[tuple[str, OpTable], tuple[str, OpTable]]:
        return (("f", self.f), ("g", self.g))

    def op(self, which: str) -> OpTable:
        if which == "f":
            return self.f
        if which == "g":
            return self.g
        raise ValueError(f"unknown operation {which!r}")

    def check_element(self, x: int) -> int:
        if not 0 <= int(x) < self.k:
            raise ElementRangeError(f"element {x} outside carrier 0..{self.k - 1}")
        return int(x)

    def tables_equal(self, other: FinStructure) -> bool:
        """Table-for-table comparison under the fixed encodings (names ignored)."""
        return (
            self.k == other.k
            and self.m == other.m
            and self.n == other.n
            and self.f == other.f
            and self.g == other.g
        )
