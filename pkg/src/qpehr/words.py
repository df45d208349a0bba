"""Packed words: sequences over ``1..m`` using every letter."""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import InputError, ParseError


class PackedWord(tuple):
    """Immutable packed word; construction validates the letter set."""

    def __new__(cls, letters: Iterable[int] = ()):
        w = super().__new__(cls, (int(x) for x in letters))
        if set(w) != set(range(1, len(set(w)) + 1)):
            raise InputError(f"not a packed word: {tuple(w)}")
        return w

    @property
    def max(self) -> int:
        return max(self, default=0)

    def sort_key(self):
        return (len(self), tuple(self))

    def term_text(self) -> str:
        return "1" if not self else str(self)

    def to_json(self) -> list:
        return list(self)

    def __str__(self) -> str:
        if self.max > 9:
            return "(" + ",".join(map(str, self)) + ")"
        return "(" + "".join(map(str, self)) + ")"

    def __repr__(self) -> str:
        return f"PackedWord({str(self)})"


def pack(word: Sequence[int]) -> PackedWord:
    rank = {v: i + 1 for i, v in enumerate(sorted(set(word)))}
    return PackedWord(rank[v] for v in word)


_WORD = re.compile(r"\s*\(?\s*([0-9,\s]*)\)?\s*$")


def parse_word(text: str) -> PackedWord:
    """Accept ``(122)``, ``122``, ``(1,2,2,10)`` or ``()``."""
    m = _WORD.match(text)
    if not m:
        raise ParseError("expected a packed word like (122)", text, 0)
    body = m.group(1).strip()
    if not body:
        return PackedWord()
    if "," in body:
        parts = [p.strip() for p in body.split(",")]
    else:
        parts = list(body.replace(" ", ""))
    try:
        return PackedWord(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None
