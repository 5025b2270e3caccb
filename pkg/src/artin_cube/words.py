"""Group words as tuples of ``(generator, +1 | -1)`` letters.

Text form: space-separated tokens ``s``, ``s^-1`` or ``s^k``; ``1`` or the
empty string is the identity.
"""

from __future__ import annotations

import re
from typing import Iterable

Letter = tuple[str, int]
Word = tuple[Letter, ...]

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^([+-]?\d+))?$")


def parse_word(text: str | Iterable) -> Word:
    if not isinstance(text, str):
        return tuple((s, int(e)) for s, e in text)
    out: list[Letter] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad word token {tok!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        sign = 1 if power > 0 else -1
        out.extend([(name, sign)] * abs(power))
    return tuple(out)


def format_word(word: Word) -> str:
    """Compact text form, collapsing runs into powers (``s^2 t^-1``)."""
    parts = []
    for name, power in syllables(word):
        parts.append(name if power == 1 else f"{name}^{power}")
    return " ".join(parts)


def syllables(word: Word) -> list[tuple[str, int]]:
    out: list[list] = []
    for name, e in word:
        if out and out[-1][0] == name:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([name, e])
    return [(n, p) for n, p in out]


def power(name: str, n: int) -> Word:
    return ((name, 1 if n > 0 else -1),) * abs(n)


def inverse(word: Word) -> Word:
    return tuple((s, -e) for s, e in reversed(word))


def free_reduce(word: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for s, e in word:
        if out and out[-1] == (s, -e):
            out.pop()
        else:
            out.append((s, e))
    return tuple(out)


def multiply(*words: Word) -> Word:
    return free_reduce(x for w in words for x in w)
