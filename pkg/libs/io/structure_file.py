# libs/io/structure_file.py
"""
Plain-text structure files.

    # comment to end of line
    structure B2
    carrier 2
    f 2
    0 1
    1 1
    g 2
    0 0
    0 1
    end

Entry for (a_1, ..., a_r) sits at position sum a_i * k^(r-i). Tokens are
whitespace separated, so line breaks inside a table carry no meaning; the
serializer writes k entries per line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from libs.carrier.optable import OpTable, check_caps
from libs.carrier.structure import FinStructure
from libs.errors import (
    EntryOutOfRangeError,
    StructureFileError,
    StructureSyntaxError,
    WrongEntryCountError,
)

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*\Z")
INTEGER = re.compile(r"-?[0-9]+\Z")


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        for match in re.finditer(r"\S+", body):
            tokens.append(Token(match.group(), lineno, match.start() + 1))
    return tokens


class _Reader:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, expecting: str) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("", 1, 1)
            raise StructureSyntaxError(
                f"unexpected end of input, expected {expecting}",
                last.line,
                last.column + len(last.text),
            )
        self.pos += 1
        return tok

    def keyword(self, word: str) -> Token:
        tok = self.next(f"'{word}'")
        if tok.text != word:
            raise StructureSyntaxError(
                f"expected '{word}', found {tok.text!r}", tok.line, tok.column
            )
        return tok

    def integer(self, what: str) -> int:
        tok = self.next(what)
        if not INTEGER.match(tok.text):
            raise StructureSyntaxError(
                f"expected {what}, found {tok.text!r}", tok.line, tok.column
            )
        return int(tok.text)


def _read_table(reader: _Reader, name: str, k: int) -> OpTable:
    head = reader.keyword(name)
    arity = reader.integer(f"arity of '{name}'")
    if arity < 2:
        raise StructureSyntaxError(
            f"operation '{name}' needs arity >= 2, got {arity}", head.line, head.column
        )
    check_caps(k, arity)

    expected = k**arity
    entries: list[int] = []
    while (tok := reader.peek()) is not None and INTEGER.match(tok.text):
        reader.pos += 1
        value = int(tok.text)
        if not 0 <= value < k:
            raise EntryOutOfRangeError(
                f"entry {value} of '{name}' outside 0..{k - 1}", tok.line, tok.column
            )
        entries.append(value)
        if len(entries) > expected:
            raise WrongEntryCountError(name, expected, len(entries), tok.line, tok.column)
    if len(entries) != expected:
        where = reader.peek() or (reader.tokens[-1] if reader.tokens else head)
        raise WrongEntryCountError(name, expected, len(entries), where.line, where.column)
    return OpTable.from_entries(k, arity, entries)


def parse_structure(text: str) -> FinStructure:
    reader = _Reader(tokenize(text))

    reader.keyword("structure")
    name_tok = reader.next("a structure name")
    if not IDENTIFIER.match(name_tok.text):
        raise StructureSyntaxError(
            f"invalid structure name {name_tok.text!r}", name_tok.line, name_tok.column
        )

    carrier_tok = reader.keyword("carrier")
    k = reader.integer("carrier size")
    if k < 1:
        raise StructureSyntaxError(
            f"carrier size must be >= 1, got {k}", carrier_tok.line, carrier_tok.column
        )

    f = _read_table(reader, "f", k)
    g = _read_table(reader, "g", k)
    reader.keyword("end")

    extra = reader.peek()
    if extra is not None:
        raise StructureSyntaxError(
            f"unexpected {extra.text!r} after 'end'", extra.line, extra.column
        )
    return FinStructure.from_tables(name_tok.text, f, g)


def _table_lines(op: OpTable) -> list[str]:
    k = op.carrier_size
    entries = op.entries()
    return [
        " ".join(str(v) for v in entries[row : row + k])
        for row in range(0, len(entries), k)
    ]


def serialize_structure(s: FinStructure) -> str:
    lines = [f"structure {s.name}", f"carrier {s.k}", f"f {s.m}"]
    lines += _table_lines(s.f)
    lines.append(f"g {s.n}")
    lines += _table_lines(s.g)
    lines.append("end")
    return "\n".join(lines) + "\n"


def load_structure(path: str | Path) -> FinStructure:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise StructureFileError(f"{path}: not valid UTF-8 (byte {e.start})") from e
    except OSError as e:
        raise StructureFileError(f"{path}: {e.strerror or e}") from e
    return parse_structure(text)


def dump_structure(s: FinStructure, path: str | Path) -> None:
    try:
        Path(path).write_text(serialize_structure(s), encoding="utf-8")
    except OSError as e:
        raise StructureFileError(f"{path}: {e.strerror or e}") from e
