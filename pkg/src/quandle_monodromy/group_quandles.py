"""Quandles carried by groups.

Conjugation quandles of permutation groups, the quandles of nontrivial
cyclic permutations and of transpositions used for branched covers, the
seventeen element genus-two quotient inside Z/10 × S_6, and the free quandle
realised as conjugates of generators in a free group.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Any

from . import freegroup as fg
from .core import FiniteQuandle, table_quandle
from .perm import Permutation, symmetric_group


def conj_op(x: Any, y: Any) -> Any:
    """``x ▷ y = y^-1 x y``."""
    return ~y * x * y


def conj_op_inv(x: Any, y: Any) -> Any:
    """``x ⊵ y = y x y^-1``."""
    return y * x * ~y


def _perm_sort_key(p: Permutation) -> tuple:
    return (max((len(c) for c in p.cycles), default=1), p.cycles)


def conjugation_quandle(elements: list[Permutation]) -> FiniteQuandle:
    """Tabulate conjugation on a union of conjugacy classes of S_d."""
    elements = sorted(set(elements), key=_perm_sort_key)
    d = elements[0].degree if elements else 0
    return table_quandle(elements, conj_op, embedding_identity=Permutation.identity(d), embed=True)


def build_symmetric_conjugation_quandle(d: int) -> FiniteQuandle:
    """The whole group S_d under conjugation."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return conjugation_quandle(list(symmetric_group(d)))


def cyclic_permutations(d: int) -> list[Permutation]:
    return [p for p in symmetric_group(d) if p.is_cyclic()]


def transpositions(d: int) -> list[Permutation]:
    return [Permutation.from_cycles(d, [(a, b)])
            for a, b in itertools.combinations(range(1, d + 1), 2)]


def build_cyclic_class_quandle(d: int) -> FiniteQuandle:
    """Nontrivial cyclic permutations of {1..d} (one cycle of length >= 2) under conjugation."""
    if d < 2:
        raise ValueError("cyclic class quandle needs d >= 2")
    return conjugation_quandle(cyclic_permutations(d))


def build_transposition_quandle(d: int) -> FiniteQuandle:
    if d < 2:
        raise ValueError("transposition quandle needs d >= 2")
    return conjugation_quandle(transpositions(d))


@dataclass(frozen=True)
class ResiduePerm:
    """Element of Z/m × S_d with componentwise product."""

    residue: int
    perm: Permutation
    modulus: int = 10

    def __mul__(self, other: ResiduePerm) -> ResiduePerm:
        return ResiduePerm((self.residue + other.residue) % self.modulus,
                           self.perm * other.perm, self.modulus)

    def __invert__(self) -> ResiduePerm:
        return ResiduePerm(-self.residue % self.modulus, ~self.perm, self.modulus)

    def __str__(self) -> str:
        p = "e" if self.perm.is_identity() else str(self.perm)
        return f"({self.residue},{p})"


def build_genus2_quotient() -> FiniteQuandle:
    """Seventeen element quotient of the genus-two Dehn quandle.

    Carrier ``{(0,e), (2,e)} ∪ {(1,(a b))}`` in Z/10 × S_6 under conjugation.
    The residue coordinate is central, so only the permutation part moves.
    """
    e = Permutation.identity(6)
    elems = [ResiduePerm(0, e), ResiduePerm(2, e)]
    elems += [ResiduePerm(1, t) for t in transpositions(6)]
    return table_quandle(elems, conj_op, embedding_identity=ResiduePerm(0, e), embed=True)


# -- free quandle -------------------------------------------------------------


@dataclass(frozen=True)
class FreeQuandleElement:
    """The conjugate ``w^-1 x_i w`` in the free group.

    Canonical form: ``w`` is freely reduced and does not start with
    ``x_i^{±1}``; two elements are equal iff their canonical forms are.
    """

    generator: int
    conjugator: fg.Word = ()

    def __post_init__(self) -> None:
        if self.generator < 1:
            raise ValueError("generator index must be positive")
        w = fg.reduce_word(self.conjugator)
        i = self.generator
        k = 0
        while k < len(w) and abs(w[k]) == i:
            k += 1
        object.__setattr__(self, "conjugator", w[k:])

    def as_word(self) -> fg.Word:
        return fg.conjugate((self.generator,), self.conjugator)

    def __str__(self) -> str:
        return f"{fg.format_word(self.conjugator) if self.conjugator else ''} @ {self.generator}".strip()

    @classmethod
    def parse(cls, text: str) -> FreeQuandleElement:
        """Parse ``"x2^-1 x1 x2 @ 1"`` (conjugator word, ``@``, generator index)."""
        m = re.fullmatch(r"\s*(.*?)\s*@\s*(\d+)\s*", text)
        if m is None:
            raise ValueError(f"bad free quandle element {text!r}")
        return cls(int(m.group(2)), fg.parse_word(m.group(1)))


def free_quandle_op(a: FreeQuandleElement, b: FreeQuandleElement) -> FreeQuandleElement:
    """``a ▷ b``: conjugate a's embedded word by b's embedded word."""
    return FreeQuandleElement(a.generator, fg.multiply(a.conjugator, b.as_word()))


def free_quandle_op_inv(a: FreeQuandleElement, b: FreeQuandleElement) -> FreeQuandleElement:
    return FreeQuandleElement(a.generator, fg.multiply(a.conjugator, fg.inverse(b.as_word())))


def free_generator(i: int) -> FreeQuandleElement:
    return FreeQuandleElement(i)
