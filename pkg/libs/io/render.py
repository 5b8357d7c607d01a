# libs/io/render.py
from __future__ import annotations

from typing import Any

from libs.io.report_models import ReportPayload, WitnessModel


def _fmt_value(value: Any) -> str:
    if isinstance(value, list):
        if all(isinstance(v, int) for v in value):
            return "{" + ",".join(str(v) for v in value) + "}"
        return "[" + ", ".join(_fmt_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return " ".join(f"{k}={_fmt_value(v)}" for k, v in value.items())
    return str(value)


def _fmt_row(value: Any) -> str:
    # 子集列表：每行一个，逗号分隔
    if isinstance(value, list) and all(isinstance(v, int) for v in value):
        return ",".join(str(v) for v in value)
    return _fmt_value(value)


def render_witness(w: WitnessModel) -> str:
    op = f" {w.operation}" if w.operation else ""
    pos = f" at {','.join(str(p) for p in w.positions)}" if w.positions else ""
    args = "(" + ",".join(str(a) for a in w.args) + ")"
    if w.rhs is None:
        body = f"image {w.lhs} escapes"
    else:
        body = f"{w.lhs} != {w.rhs}"
    extra = "".join(f" {k}={_fmt_value(v)}" for k, v in w.details.items())
    return f"{w.law}{op}{pos} args={args}: {body}{extra}"


def render_payload(payload: ReportPayload) -> str:
    lines = [f"structure {payload.name}  k={payload.k} m={payload.m} n={payload.n}"]
    if payload.verdicts:
        width = max(len(name) for name in payload.verdicts)
        by_verdict = {w.verdict: w for w in payload.witnesses}
        lines.append("verdicts")
        for name, holds in payload.verdicts.items():
            line = f"  {name:<{width}}  {'holds' if holds else 'FAILS'}"
            if name in by_verdict:
                line += f"  {render_witness(by_verdict[name])}"
            lines.append(line)
    if payload.sets:
        width = max(len(name) for name in payload.sets)
        lines.append("sets")
        for name, value in payload.sets.items():
            if isinstance(value, list) and value and not isinstance(value[0], int):
                lines.append(f"  {name} ({len(value)})")
                lines.extend(f"    {_fmt_row(v)}" for v in value)
            else:
                lines.append(f"  {name:<{width}}  {_fmt_value(value)}")
    return "\n".join(lines) + "\n"
