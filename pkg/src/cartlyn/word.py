"""Input representation: byte words, integer sequences and alphabet orderings.

Words are plain byte strings compared symbol by symbol; an ordering selects
either the natural code-unit order or its exact reversal. Number sequences
hold signed 64-bit integers. Both reject empty input at construction.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Literal, Union

from .errors import EmptyInputError, MalformedIntegerError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

# 0..255 reversed, used as a comparison key table for the inverted ordering
_INVERT = bytes(255 - c for c in range(256))


class AlphabetOrdering(enum.Enum):
    """Total order on symbols: natural byte order or its reversal."""

    NORMAL = "normal"
    INVERTED = "inverted"

    def key(self, symbol: int) -> int:
        """Sort key of a symbol under this ordering."""
        return symbol if self is AlphabetOrdering.NORMAL else 255 - symbol


NORMAL = AlphabetOrdering.NORMAL
INVERTED = AlphabetOrdering.INVERTED


def compare_symbols(a: int, b: int, ordering: AlphabetOrdering = NORMAL) -> int:
    """Three-way symbol comparison: -1, 0 or 1.

    The inverted ordering reverses every strict outcome of the normal one
    and leaves equality untouched.
    """
    ka, kb = ordering.key(a), ordering.key(b)
    return (ka > kb) - (ka < kb)


def compare_words(u: bytes, v: bytes, ordering: AlphabetOrdering = NORMAL) -> int:
    """Three-way lexicographic comparison of two byte strings.

    A proper prefix compares smaller than its extensions under both
    orderings. The word bytes are never modified; the inverted case keys
    the comparison through a translation table.
    """
    if ordering is NORMAL:
        ku, kv = u, v
    else:
        ku, kv = u.translate(_INVERT), v.translate(_INVERT)
    return (ku > kv) - (ku < kv)


@dataclass(frozen=True)
class Word:
    """Non-empty sequence of byte symbols."""

    symbols: bytes

    def __post_init__(self):
        if not isinstance(self.symbols, bytes):
            object.__setattr__(self, "symbols", bytes(self.symbols))
        if len(self.symbols) == 0:
            raise EmptyInputError("word must contain at least one symbol")

    @property
    def n(self) -> int:
        return len(self.symbols)

    def factor(self, first: int, last: int) -> bytes:
        """Bytes of the inclusive factor [first, last]."""
        return self.symbols[first : last + 1]

    def to_text(self) -> str:
        return self.symbols.decode("latin-1")

    @classmethod
    def from_text(cls, text: str) -> "Word":
        return cls(text.encode("utf-8"))


@dataclass(frozen=True)
class NumSeq:
    """Non-empty sequence of signed 64-bit integers.

    The virtual sentinel that compares below every value lives at position
    n inside the algorithms; it is never stored, so the full 64-bit range
    remains usable.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) == 0:
            raise EmptyInputError("number sequence must contain at least one value")

    @property
    def n(self) -> int:
        return len(self.values)


_TOKEN_SPLIT = re.compile(rb"[,\s]+")
_INT_TOKEN = re.compile(rb"[+-]?[0-9]+\Z")


def ingest(raw: bytes, mode: Literal["text", "integers"]) -> Union[Word, NumSeq]:
    """Build a Word or NumSeq from raw input bytes.

    Text mode keeps bytes verbatim apart from trimming one trailing
    newline. Integer mode accepts signed decimal tokens separated by
    commas and/or whitespace.
    """
    if mode == "text":
        if raw.endswith(b"\n"):
            raw = raw[:-1]
        if not raw:
            raise EmptyInputError("empty text input")
        return Word(raw)
    if mode == "integers":
        tokens = [t for t in _TOKEN_SPLIT.split(raw) if t]
        if not tokens:
            raise EmptyInputError("no integer tokens in input")
        values = []
        for tok in tokens:
            if not _INT_TOKEN.match(tok):
                raise MalformedIntegerError(f"not a signed decimal integer: {tok!r}")
            v = int(tok)
            if not INT64_MIN <= v <= INT64_MAX:
                raise MalformedIntegerError(f"outside signed 64-bit range: {tok!r}")
            values.append(v)
        return NumSeq(tuple(values))
    raise ValueError(f"unknown ingest mode: {mode!r}")


def serialize(value: Union[Word, NumSeq]) -> bytes:
    """Canonical byte form; inverse of ingest on canonical inputs."""
    if isinstance(value, Word):
        return value.symbols
    return ",".join(str(v) for v in value.values).encode("ascii")
