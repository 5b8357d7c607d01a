# libs/axioms/verdict.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Witness:
    """
    A concrete counterexample.

    law:       associativity / commutativity / distributivity / closure /
               absorption / homomorphism / congruence / unit-theorem ...
    operation: "f" or "g" when one operation is involved
    args:      the argument tuple in sweep order
    lhs, rhs:  the two evaluated elements that should have agreed
               (rhs is None for membership failures: lhs is the escaping image)
    positions: 1-based positions i, j or t involved
    details:   anything law-specific (replacement element, blocks, ...)
    """

    law: str
    args: tuple[int, ...]
    lhs: int
    rhs: int | None = None
    operation: str | None = None
    positions: tuple[int, ...] = ()
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "law": self.law,
            "operation": self.operation,
            "positions": list(self.positions),
            "args": list(self.args),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "details": dict(self.details),
        }

    def describe(self) -> str:
        where = f" {self.operation}" if self.operation else ""
        pos = (
            " at " + ",".join(str(p) for p in self.positions) if self.positions else ""
        )
        args = "(" + ",".join(str(a) for a in self.args) + ")"
        if self.rhs is None:
            body = f"image {self.lhs} escapes"
        else:
            body = f"{self.lhs} != {self.rhs}"
        extra = "".join(f" {k}={v}" for k, v in self.details.items())
        return f"{self.law}{where}{pos} args={args}: {body}{extra}"


@dataclass(frozen=True)
class AxiomVerdict:
    holds: bool
    witness: Witness | None = None

    def __post_init__(self) -> None:
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict must carry a witness")

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls) -> AxiomVerdict:
        return cls(holds=True)

    @classmethod
    def fail(cls, witness: Witness) -> AxiomVerdict:
        return cls(holds=False, witness=witness)
