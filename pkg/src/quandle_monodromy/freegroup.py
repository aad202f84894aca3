"""Words in a free group on generators x_1, x_2, ...

A word is a tuple of nonzero ints: ``j`` stands for x_j and ``-j`` for x_j^-1.
All functions here return freely reduced words.
"""

from __future__ import annotations

import re
from typing import Iterable

Word = tuple[int, ...]

_LETTER = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def reduce_word(letters: Iterable[int]) -> Word:
    out: list[int] = []
    for a in letters:
        if a == 0:
            raise ValueError("0 is not a generator")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse(w: Word) -> Word:
    return tuple(-a for a in reversed(w))


def multiply(*words: Word) -> Word:
    out: list[int] = []
    for w in words:
        for a in w:
            if out and out[-1] == -a:
                out.pop()
            else:
                out.append(a)
    return tuple(out)


def power(w: Word, k: int) -> Word:
    if k < 0:
        w, k = inverse(w), -k
    return multiply(*([w] * k))


def conjugate(w: Word, by: Word) -> Word:
    """Return by^-1 w by."""
    return multiply(inverse(by), w, by)


def substitute(w: Word, images: dict[int, Word]) -> Word:
    """Apply the endomorphism x_j -> images[j] (missing generators are fixed)."""
    parts = []
    for a in w:
        img = images.get(abs(a), (abs(a),))
        parts.append(img if a > 0 else inverse(img))
    return multiply(*parts)


def parse_word(text: str) -> Word:
    """Parse ``"x2^-1 x1 x2"``; the empty string (or ``"1"``/``"e"``) is the identity."""
    text = text.strip()
    if text in ("", "1", "e"):
        return ()
    letters: list[int] = []
    for tok in text.split():
        m = _LETTER.match(tok)
        if m is None:
            raise ValueError(f"bad free group letter {tok!r}")
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if gen < 1:
            raise ValueError(f"generator index must be positive: {tok!r}")
        letters.extend([gen if exp > 0 else -gen] * abs(exp))
    return reduce_word(letters)


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in w)
