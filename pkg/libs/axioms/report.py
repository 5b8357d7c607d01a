# libs/axioms/report.py
from __future__ import annotations

from dataclasses import dataclass

from libs.axioms.verdict import AxiomVerdict


@dataclass(frozen=True)
class ClassificationReport:
    """
    Every axiom flag of one structure.

    distributive: position t -> verdict of t-distributivity of g over f
    t_snr:        positions t where (R, f, g) is a t-(m,n)-seminearring
    right / left: t = 1 / t = n
    """

    f_associative: AxiomVerdict
    f_commutative: AxiomVerdict
    g_associative: AxiomVerdict
    distributive: dict[int, AxiomVerdict]
    t_snr: frozenset[int]
    is_right_snr: bool
    is_left_snr: bool
    f_identities: frozenset[int]
    g_zeros: frozenset[int]
    absorbing_zeros: frozenset[int]
    g_identities: frozenset[int]
    is_semiring: bool

    @property
    def distributive_positions(self) -> frozenset[int]:
        return frozenset(t for t, v in self.distributive.items() if v.holds)

    @property
    def fully_distributive(self) -> bool:
        return all(v.holds for v in self.distributive.values())

    @property
    def f_commutative_semigroup(self) -> bool:
        """(R, f) is an m-commutative semigroup."""
        return self.f_associative.holds and self.f_commutative.holds

    @property
    def t_snr_with_absorbing_zero(self) -> frozenset[int]:
        return self.t_snr if self.absorbing_zeros else frozenset()

    def verdicts(self) -> dict[str, AxiomVerdict]:
        """Named verdicts in report order."""
        out: dict[str, AxiomVerdict] = {
            "f_associative": self.f_associative,
            "f_commutative": self.f_commutative,
            "g_associative": self.g_associative,
        }
        for t in sorted(self.distributive):
            out[f"distributive_{t}"] = self.distributive[t]
        return out
