# libs/carrier/optable.py
from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from libs.carrier.sweep import Cols, tuple_digits
from libs.config.settings import get_settings
from libs.errors import ArityMismatchError, ElementRangeError, SizeCapError


def check_caps(k: int, arity: int) -> None:
    settings = get_settings()
    if k < 1 or k > settings.max_carrier:
        raise SizeCapError(f"carrier size {k} outside 1..{settings.max_carrier}")
    # 先用整数算，避免先分配内存
    if k**arity > settings.max_table_entries:
        raise SizeCapError(
            f"table of arity {arity} over k={k} needs {k**arity} entries "
            f"(cap {settings.max_table_entries})"
        )


def encode_args(args: Sequence[int], k: int) -> int:
    """
    Mixed-radix index of an argument tuple, args[0] most significant:
        ([2, 1, 0], k=3) -> 2*9 + 1*3 + 0 = 21
    """
    if len(args) < 1:
        raise ArityMismatchError("argument tuple must be non-empty")
    index = 0
    for a in args:
        a = int(a)
        if not 0 <= a < k:
            raise ElementRangeError(f"argument {a} outside carrier 0..{k - 1}")
        index = index * k + a
    return index


def encode_cols(cols: Sequence[np.ndarray] | Cols, k: int) -> np.ndarray:
    """Vectorised encode_args over argument columns (no range check)."""
    index = np.zeros(np.shape(cols[0]), dtype=np.int64)
    for c in cols:
        index = index * k + c
    return index


@dataclass(frozen=True, eq=False)
class OpTable:
    """
    Dense table of one operation of arity r on carrier {0..k-1}.
    `table` is a read-only uint8 array of length k**r in mixed-radix order.
    """

    arity: int
    carrier_size: int
    table: np.ndarray

    def __post_init__(self) -> None:
        if self.arity < 2:
            raise ArityMismatchError(f"arity must be >= 2, got {self.arity}")
        check_caps(self.carrier_size, self.arity)

        raw = np.asarray(self.table)
        expected = self.carrier_size**self.arity
        if raw.ndim != 1 or raw.size != expected:
            raise ArityMismatchError(
                f"table length {raw.size} != k**arity = {expected}"
            )
        if raw.size and (raw.min() < 0 or raw.max() >= self.carrier_size):
            raise ElementRangeError(
                f"table entries must lie in 0..{self.carrier_size - 1}"
            )
        data = raw.astype(np.uint8, copy=True)
        data.setflags(write=False)
        object.__setattr__(self, "table", data)

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def from_entries(cls, k: int, arity: int, entries: Sequence[int]) -> OpTable:
        check_caps(k, arity)
        return cls(arity=arity, carrier_size=k, table=np.asarray(entries, dtype=np.int64))

    @classmethod
    def from_function(
        cls, k: int, arity: int, fn: Callable[[Cols], np.ndarray]
    ) -> OpTable:
        """Tabulate `fn`, which receives the (arity, k**arity) argument matrix."""
        check_caps(k, arity)
        cols = tuple_digits(k, arity, 0, k**arity)
        values = np.broadcast_to(np.asarray(fn(cols), dtype=np.int64), (k**arity,))
        return cls(arity=arity, carrier_size=k, table=np.array(values))

    # ------------------------------------------------------------------
    # 求值
    # ------------------------------------------------------------------
    def eval(self, args: Sequence[int]) -> int:
        if len(args) != self.arity:
            raise ArityMismatchError(
                f"expected {self.arity} arguments, got {len(args)}"
            )
        return int(self.table[encode_args(args, self.carrier_size)])

    def eval_many(self, cols: Sequence[np.ndarray] | Cols) -> np.ndarray:
        """Evaluate column-wise; cols[i] holds argument i for every tuple."""
        if len(cols) != self.arity:
            raise ArityMismatchError(
                f"expected {self.arity} argument columns, got {len(cols)}"
            )
        return self.table[encode_cols(cols, self.carrier_size)]

    def eval_nested(
        self,
        outer_prefix: Sequence[int],
        inner_args: Sequence[int],
        outer_suffix: Sequence[int],
    ) -> int:
        """op(prefix, op(inner), suffix)"""
        if len(outer_prefix) + 1 + len(outer_suffix) != self.arity:
            raise ArityMismatchError(
                f"prefix ({len(outer_prefix)}) + hole + suffix "
                f"({len(outer_suffix)}) must equal arity {self.arity}"
            )
        inner = self.eval(inner_args)
        return self.eval([*outer_prefix, inner, *outer_suffix])

    def entries(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OpTable):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.carrier_size == other.carrier_size
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((self.arity, self.carrier_size, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"OpTable(arity={self.arity}, k={self.carrier_size})"
