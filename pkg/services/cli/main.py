# services/cli/main.py
"""
snr command line.

Every command returns a CommandResult instead of printing, so run_command()
can be called from tests and main() only writes and exits.

Exit codes: 0 holds / success, 1 property violated, 2 input or usage error.
"""
from __future__ import annotations

import sys
import uuid
from collections.abc import Sequence
from dataclasses import dataclass

import click

from libs.axioms.engine import classify as classify_structure
from libs.axioms.engine import find_g_identities
from libs.axioms.verdict import AxiomVerdict
from libs.carrier.structure import FinStructure
from libs.config.settings import get_settings
from libs.congruences.congruences import (
    congruence_closure,
    enumerate_congruences,
    is_congruence,
    quotient as quotient_structure,
)
from libs.congruences.partition import Partition
from libs.constructions.factory import build_structure
from libs.constructions.generators import direct_product
from libs.errors import ConfigError, PositionError, SnrError, TheoremViolationError
from libs.ideals.ideals import enumerate_ideals, ideal_closure
from libs.io.render import render_payload
from libs.io.report_models import ReportPayload, build_payload, classification_payload
from libs.io.structure_file import dump_structure, load_structure, serialize_structure
from libs.logging.structured_logger import configure_logging, logger
from libs.morphisms.morphism import classify_morphism
from libs.morphisms.search import find_homomorphisms
from libs.substructures.subalgebras import enumerate_subs, sub_closure
from libs.substructures.subset import Subset
from libs.units.units import units_set, verify_unit_theorems

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    text: str = ""
    error_text: str = ""


def _emit(payload: ReportPayload, as_json: bool, exit_code: int) -> CommandResult:
    text = payload.to_json() + "\n" if as_json else render_payload(payload)
    return CommandResult(exit_code, text)


def _exit_for(ok: bool) -> int:
    return EXIT_OK if ok else EXIT_VIOLATED


structure_file = click.Path(exists=True, dir_okay=False)
json_option = click.option("--json", "as_json", is_flag=True, help="Emit the JSON report.")


# ---------------------------------------------------------------------
# 命令组
# ---------------------------------------------------------------------
@click.group()
def cli() -> None:
    """Finite (m,n)-seminearring toolkit."""


@cli.command()
@click.argument("path", type=structure_file)
@click.option("--position", "-t", type=int, default=None, help="Distributive slot (default n).")
@click.option("--partition", "blocks", default=None, help="Check this partition is a congruence.")
@json_option
def verify(path: str, position: int | None, blocks: str | None, as_json: bool) -> CommandResult:
    """Check the t-(m,n)-seminearring axioms (or a congruence with --partition)."""
    s = load_structure(path)

    if blocks is not None:
        p = Partition.parse(blocks, s.k)
        verdict = is_congruence(s, p)
        payload = build_payload(s, {"congruence": verdict}, {"partition": str(p)})
        return _emit(payload, as_json, _exit_for(verdict.holds))

    t = s.n if position is None else position
    if not 1 <= t <= s.n:
        raise PositionError(f"position {t} outside 1..{s.n}")
    report = classify_structure(s)
    payload = classification_payload(s, report)
    holds = t in report.t_snr
    payload.verdicts[f"snr_at_{t}"] = holds
    return _emit(payload, as_json, _exit_for(holds))


@cli.command()
@click.argument("path", type=structure_file)
@json_option
def classify(path: str, as_json: bool) -> CommandResult:
    """Every axiom verdict, distinguished elements and t-snr positions."""
    s = load_structure(path)
    return _emit(classification_payload(s, classify_structure(s)), as_json, EXIT_OK)


@cli.command()
@click.argument("path", type=structure_file)
@json_option
def subs(path: str, as_json: bool) -> CommandResult:
    """Enumerate all subseminearrings."""
    s = load_structure(path)
    found = [list(sub.elements()) for sub in enumerate_subs(s)]
    return _emit(build_payload(s, sets={"subseminearrings": found}), as_json, EXIT_OK)


@cli.command()
@click.argument("path", type=structure_file)
@click.option(
    "--position", "-t", "positions", type=int, multiple=True,
    help="Only require absorption at these slots (repeatable; default all).",
)
@json_option
def ideals(path: str, positions: tuple[int, ...], as_json: bool) -> CommandResult:
    """Enumerate ideals (or i-ideals with --position)."""
    s = load_structure(path)
    found = [list(i.elements()) for i in enumerate_ideals(s, positions or None)]
    key = "ideals" if not positions else "ideals_at_" + "_".join(
        str(p) for p in sorted(set(positions))
    )
    return _emit(build_payload(s, sets={key: found}), as_json, EXIT_OK)


@cli.command()
@click.argument("path", type=structure_file)
@click.option("--unity", "-e", type=int, default=None, help="Unity to use (default: every g-identity).")
@json_option
def units(path: str, unity: int | None, as_json: bool) -> CommandResult:
    """Units, inverses and the unity theorems, per unity."""
    s = load_structure(path)
    unities = [unity] if unity is not None else sorted(find_g_identities(s))

    verdicts: dict[str, AxiomVerdict] = {}
    sets: dict[str, object] = {"unities": unities}
    for e in unities:
        report = units_set(s, e)
        sets[f"units_{e}"] = sorted(report.units)
        sets[f"inverse_of_{e}"] = {str(x): report.inverse_of[x] for x in sorted(report.units)}
        if report.multiple_inverses:
            sets[f"multiple_inverses_{e}"] = sorted(report.multiple_inverses)
        for name, verdict in verify_unit_theorems(s, e).items():
            verdicts[f"{name}_{e}"] = verdict

    payload = build_payload(s, verdicts, sets)
    ok = bool(unities) and payload.all_hold
    return _emit(payload, as_json, _exit_for(ok))


@cli.command()
@click.argument("source", type=structure_file)
@click.argument("target", type=structure_file)
@click.option("--limit", type=click.IntRange(min=0), default=None, help="Stop after N maps.")
@json_option
def homs(source: str, target: str, limit: int | None, as_json: bool) -> CommandResult:
    """All homomorphisms SOURCE -> TARGET in lexicographic order."""
    s1, s2 = load_structure(source), load_structure(target)
    lines = []
    for psi in find_homomorphisms(s1, s2, limit):
        flags = classify_morphism(psi).flags()
        lines.append(psi.describe() + (f"  [{','.join(flags)}]" if flags else ""))
    payload = build_payload(s1, sets={"target": s2.name, "homomorphisms": lines})
    return _emit(payload, as_json, EXIT_OK)


@cli.command()
@click.argument("path", type=structure_file)
@json_option
def congruences(path: str, as_json: bool) -> CommandResult:
    """Enumerate congruences, finest first."""
    s = load_structure(path)
    found = [str(p) for p in enumerate_congruences(s)]
    return _emit(build_payload(s, sets={"congruences": found}), as_json, EXIT_OK)


@cli.command()
@click.argument("path", type=structure_file)
@click.option("--partition", "blocks", required=True, help="Blocks such as 0,2|1,3.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def quotient(path: str, blocks: str, output: str | None) -> CommandResult:
    """Factor structure by a congruence, as a structure file."""
    s = load_structure(path)
    factor = quotient_structure(s, Partition.parse(blocks, s.k))
    return _write_structure(factor, output)


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    """'0:2,1:3' -> [(0, 2), (1, 3)]"""
    pairs = []
    for item in (t for t in text.replace(" ", "").split(",") if t):
        left, sep, right = item.partition(":")
        if not sep:
            raise SnrError(f"congruence seed {item!r} must look like x:y")
        try:
            pairs.append((int(left), int(right)))
        except ValueError as e:
            raise SnrError(f"congruence seed {item!r} must look like x:y") from e
    return pairs


@cli.command()
@click.argument("path", type=structure_file)
@click.option("--seed", required=True, help="0,2 for sub/ideal; 0:2,1:3 for congruence.")
@click.option(
    "--kind", type=click.Choice(["sub", "ideal", "congruence"]), required=True
)
@json_option
def closure(path: str, seed: str, kind: str, as_json: bool) -> CommandResult:
    """Least subseminearring / ideal / congruence containing the seed."""
    s = load_structure(path)
    if kind == "congruence":
        result: object = str(congruence_closure(s, _parse_pairs(seed)))
    else:
        start = Subset.parse(seed, s.k)
        closed = sub_closure(s, start) if kind == "sub" else ideal_closure(s, start)
        result = list(closed.elements())
    payload = build_payload(s, sets={"seed": seed, f"{kind}_closure": result})
    return _emit(payload, as_json, EXIT_OK)


@cli.command()
@click.argument("kind", type=click.Choice(["powerset", "modring", "affine", "product"]))
@click.argument("args", nargs=-1)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def gen(kind: str, args: tuple[str, ...], output: str | None) -> CommandResult:
    """Generate an example structure (product takes two structure files)."""
    if kind == "product":
        if len(args) != 2:
            raise click.UsageError("gen product takes exactly two structure files")
        s = direct_product(load_structure(args[0]), load_structure(args[1]))
    else:
        try:
            numbers = [int(a) for a in args]
        except ValueError as e:
            raise click.UsageError(f"gen {kind} takes integer arguments") from e
        s = build_structure(kind, numbers)
    return _write_structure(s, output)


def _write_structure(s: FinStructure, output: str | None) -> CommandResult:
    if output is None:
        return CommandResult(EXIT_OK, serialize_structure(s))
    dump_structure(s, output)
    return CommandResult(EXIT_OK, "", f"wrote {s.name} to {output}\n")


# ---------------------------------------------------------------------
# 入口
# ---------------------------------------------------------------------
def run_command(argv: Sequence[str]) -> CommandResult:
    """Dispatch argv (without the program name) and capture the outcome."""
    try:
        rv = cli.main(args=list(argv), prog_name="snr", standalone_mode=False)
    except click.UsageError as e:
        usage = e.ctx.get_usage() + "\n" if e.ctx is not None else ""
        return CommandResult(EXIT_INPUT, "", f"{usage}Error: {e.format_message()}\n")
    except click.ClickException as e:
        return CommandResult(EXIT_INPUT, "", f"Error: {e.format_message()}\n")
    except SnrError as e:
        logger.warning("COMMAND_FAILED", extra={"argv": list(argv), "error": type(e).__name__})
        return CommandResult(EXIT_INPUT, "", f"error: {e}\n")
    except TheoremViolationError as e:
        logger.error("THEOREM_VIOLATION", extra={"argv": list(argv), "error": str(e)})
        return CommandResult(EXIT_VIOLATED, "", f"theorem violated: {e}\n")

    if isinstance(rv, CommandResult):
        return rv
    # --help 等由 click 直接输出
    return CommandResult(rv if isinstance(rv, int) else EXIT_OK)


def main(argv: Sequence[str] | None = None) -> None:
    args = list(sys.argv[1:] if argv is None else argv)
    logger.bind_run(uuid.uuid4().hex, command=args[0] if args else None)
    try:
        configure_logging(get_settings().log_level)
    except ConfigError as e:
        result = CommandResult(EXIT_INPUT, "", f"error: {e}\n")
    else:
        result = run_command(args)
    if result.text:
        sys.stdout.write(result.text)
    if result.error_text:
        sys.stderr.write(result.error_text)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
