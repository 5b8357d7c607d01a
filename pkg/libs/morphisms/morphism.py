# libs/morphisms/morphism.py
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from libs.axioms.verdict import AxiomVerdict, Witness
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import first_violation, iter_tuple_blocks
from libs.errors import ArityMismatchError, ElementRangeError, NotAHomomorphismError


@dataclass(frozen=True)
class Morphism:
    """A total map domain -> codomain, stored as the sequence of images."""

    domain: FinStructure
    codomain: FinStructure
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.domain.m != self.codomain.m or self.domain.n != self.codomain.n:
            raise ArityMismatchError(
                f"({self.domain.m},{self.domain.n}) -> "
                f"({self.codomain.m},{self.codomain.n}): arities differ"
            )
        images = tuple(int(v) for v in self.map)
        if len(images) != self.domain.k:
            raise ArityMismatchError(
                f"map has {len(images)} images, domain carrier has {self.domain.k}"
            )
        for v in images:
            if not 0 <= v < self.codomain.k:
                raise ElementRangeError(
                    f"image {v} outside codomain carrier 0..{self.codomain.k - 1}"
                )
        object.__setattr__(self, "map", images)

    @classmethod
    def from_function(
        cls, domain: FinStructure, codomain: FinStructure, fn: Callable[[int], int]
    ) -> Morphism:
        return cls(domain, codomain, tuple(fn(x) for x in domain.elements))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.int64)

    def __call__(self, x: int) -> int:
        return self.map[self.domain.check_element(x)]

    def describe(self) -> str:
        """'0->0 1->1 2->0'"""
        return " ".join(f"{x}->{v}" for x, v in enumerate(self.map))


@dataclass(frozen=True)
class MorphismKind:
    mono: bool
    epi: bool

    @property
    def iso(self) -> bool:
        return self.mono and self.epi

    def flags(self) -> list[str]:
        return [name for name in ("mono", "epi", "iso") if getattr(self, name)]


def identity_morphism(s: FinStructure) -> Morphism:
    return Morphism(s, s, tuple(s.elements))


def is_homomorphism(psi: Morphism) -> AxiomVerdict:
    """
    psi(f(a_1^m)) = f'(psi(a_1), ..., psi(a_m)) on every m-tuple, then the same
    for g on every n-tuple. lhs is the pushed-forward value, rhs the image-side one.
    """
    images = psi.as_array()
    pairs = zip(psi.domain.operations(), psi.codomain.operations())
    for (name, op), (_, op2) in pairs:
        hit = first_violation(
            iter_tuple_blocks(psi.domain.k, op.arity),
            lambda cols, op=op, op2=op2: (
                images[op.eval_many(cols)],
                op2.eval_many(images[cols]),
            ),
        )
        if hit is not None:
            args, lhs, rhs = hit
            return AxiomVerdict.fail(
                Witness(law="homomorphism", operation=name, args=args, lhs=lhs, rhs=rhs)
            )
    return AxiomVerdict.ok()


def require_homomorphism(psi: Morphism) -> None:
    verdict = is_homomorphism(psi)
    if not verdict.holds:
        raise NotAHomomorphismError(
            f"{psi.describe()} is not a homomorphism: {verdict.witness.describe()}"
        )


def classify_morphism(psi: Morphism) -> MorphismKind:
    require_homomorphism(psi)
    distinct = len(set(psi.map))
    return MorphismKind(mono=distinct == psi.domain.k, epi=distinct == psi.codomain.k)
