# libs/io/report_models.py
"""
Report payload shared by the JSON and the human renderers.

Every command that inspects a structure builds one ReportPayload; `--json`
dumps it and the plain renderer formats the very same object, so both
outputs agree on every verdict and witness value.
"""
from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from pydantic import BaseModel, Field

from libs.axioms.report import ClassificationReport
from libs.axioms.verdict import AxiomVerdict, Witness
from libs.carrier.structure import FinStructure


class WitnessModel(BaseModel):
    verdict: str = Field(..., description="name of the failing verdict")
    law: str
    operation: str | None = None
    positions: list[int] = Field(default_factory=list)
    args: list[int]
    lhs: int
    rhs: int | None = None
    details: dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_witness(cls, verdict: str, w: Witness) -> WitnessModel:
        return cls(verdict=verdict, **w.to_dict())


class ReportPayload(BaseModel):
    name: str
    k: int
    m: int
    n: int
    verdicts: dict[str, bool] = Field(default_factory=dict)
    witnesses: list[WitnessModel] = Field(default_factory=list)
    sets: dict[str, Any] = Field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


def build_payload(
    s: FinStructure,
    verdicts: Mapping[str, AxiomVerdict | bool] | None = None,
    sets: Mapping[str, Any] | None = None,
) -> ReportPayload:
    flags: dict[str, bool] = {}
    witnesses: list[WitnessModel] = []
    for name, verdict in (verdicts or {}).items():
        if isinstance(verdict, AxiomVerdict):
            flags[name] = verdict.holds
            if verdict.witness is not None:
                witnesses.append(WitnessModel.from_witness(name, verdict.witness))
        else:
            flags[name] = bool(verdict)
    return ReportPayload(
        name=s.name,
        k=s.k,
        m=s.m,
        n=s.n,
        verdicts=flags,
        witnesses=witnesses,
        sets=dict(sets or {}),
    )


def _sorted(xs) -> list[int]:
    return sorted(int(x) for x in xs)


def classification_payload(s: FinStructure, report: ClassificationReport) -> ReportPayload:
    verdicts: dict[str, AxiomVerdict | bool] = dict(report.verdicts())
    verdicts.update(
        {
            "f_commutative_semigroup": report.f_commutative_semigroup,
            "fully_distributive": report.fully_distributive,
            "right_snr": report.is_right_snr,
            "left_snr": report.is_left_snr,
            "semiring": report.is_semiring,
        }
    )
    sets = {
        "distributive_positions": _sorted(report.distributive_positions),
        "t_snr": _sorted(report.t_snr),
        "t_snr_with_absorbing_zero": _sorted(report.t_snr_with_absorbing_zero),
        "f_identities": _sorted(report.f_identities),
        "g_zeros": _sorted(report.g_zeros),
        "absorbing_zeros": _sorted(report.absorbing_zeros),
        "g_identities": _sorted(report.g_identities),
    }
    return build_payload(s, verdicts, sets)
