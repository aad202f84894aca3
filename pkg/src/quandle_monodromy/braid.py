"""Artin braid groups, cords and L-cords.

Braid equality is decided by the (faithful) Artin action on the free group
F_n: ``σ_i`` sends ``x_i -> x_i x_{i+1} x_i^-1`` and ``x_{i+1} -> x_i``.  The
map from braids to automorphisms is a homomorphism, so the images of a
word are obtained by substituting the current images into each letter's
formula, left to right.

A cord in the n-punctured disk is modelled by its braid, a conjugate
``w^-1 σ_i w`` of a positive generator.  The disk twist about a cord acts on
other cords by conjugation with that braid (``a ▷ b = b^-1 a b``).  The
mirror convention ``b a b^-1`` gives an isomorphic quandle with ▷ and ⊵
swapped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from . import freegroup as fg
from .core import AugmentedQuandle, StructuralError

Letter = tuple[int, int]  # (generator index i, exponent ±1)

_TOKEN = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


def _free_reduce(word) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for i, e in word:
        if out and out[-1] == (i, -e):
            out.pop()
        else:
            out.append((i, e))
    return tuple(out)


@lru_cache(maxsize=65536)
def _action(n: int, word: tuple[Letter, ...]) -> tuple[fg.Word, ...]:
    imgs = [(j,) for j in range(1, n + 1)]
    for i, e in word:
        a, b = imgs[i - 1], imgs[i]
        if e > 0:
            imgs[i - 1], imgs[i] = fg.multiply(a, b, fg.inverse(a)), a
        else:
            imgs[i - 1], imgs[i] = b, fg.multiply(fg.inverse(b), a, b)
    return tuple(imgs)


@dataclass(frozen=True)
class Braid:
    """Element of B_n given by a word of ``(i, ±1)`` letters.

    ``==`` and ``hash`` are semantic (via :func:`artin_action`); ``*`` is
    concatenation.
    """

    n: int
    word: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        word = []
        for i, e in self.word:
            if not 1 <= i < self.n or e not in (1, -1):
                raise ValueError(f"bad letter ({i}, {e}) for B_{self.n}")
            word.append((int(i), int(e)))
        object.__setattr__(self, "word", _free_reduce(word))

    @classmethod
    def generator(cls, n: int, i: int, e: int = 1) -> Braid:
        return cls(n, ((i, 1 if e > 0 else -1),) * abs(e))

    @classmethod
    def parse(cls, text: str, n: int) -> Braid:
        """Parse ``"s1 s2^-1 s1"``; ``"s2^3"`` repeats a letter.  Empty means identity."""
        word = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if m is None:
                raise ValueError(f"bad braid letter {tok!r}")
            i = int(m.group(1))
            k = int(m.group(2)) if m.group(2) is not None else 1
            word.extend([(i, 1 if k > 0 else -1)] * abs(k))
        return cls(n, tuple(word))

    def __str__(self) -> str:
        return " ".join(f"s{i}" if e > 0 else f"s{i}^-1" for i, e in self.word)

    def __repr__(self) -> str:
        return f"Braid({self.n}, {str(self)!r})"

    def __len__(self) -> int:
        return len(self.word)

    def _check(self, other: Braid) -> None:
        if not isinstance(other, Braid) or other.n != self.n:
            raise ValueError("braids on different strand counts")

    def __mul__(self, other: Braid) -> Braid:
        self._check(other)
        return Braid(self.n, self.word + other.word)

    def __invert__(self) -> Braid:
        return Braid(self.n, tuple((i, -e) for i, e in reversed(self.word)))

    def __pow__(self, k: int) -> Braid:
        base = self if k >= 0 else ~self
        return Braid(self.n, base.word * abs(k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Braid):
            return NotImplemented
        self._check(other)
        return artin_action(self) == artin_action(other)

    def __hash__(self) -> int:
        return hash((self.n, artin_action(self)))


def artin_action(b: Braid) -> tuple[fg.Word, ...]:
    """Images of ``x_1..x_n`` under the automorphism of F_n induced by ``b``."""
    return _action(b.n, b.word)


def braid_eq(a: Braid, b: Braid) -> bool:
    if a.n != b.n:
        raise ValueError("strand count mismatch")
    return artin_action(a) == artin_action(b)


def full_twist(n: int) -> Braid:
    """``Δ² = (σ_1 σ_2 ... σ_{n-1})^n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return Braid(n, tuple((i, 1) for i in range(1, n)) * n)


# -- cords ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Cord:
    """A conjugate ``w^-1 σ_i^sign w`` of a braid generator, with its witness.

    ``braid`` defaults to the braid spelled by the witness; it may be given
    separately (e.g. read from a file), in which case :meth:`witness_ok`
    verifies it.  Equality and hashing use the braid, semantically.
    """

    conjugator: Braid
    generator: int
    sign: int = 1
    braid: Braid = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        n = self.conjugator.n
        if not 1 <= self.generator < n:
            raise ValueError(f"generator {self.generator} out of range for B_{n}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be ±1")
        if self.braid is None:
            object.__setattr__(self, "braid", self.witness_braid())
        elif self.braid.n != n:
            raise ValueError("strand count mismatch between braid and witness")

    @property
    def n(self) -> int:
        return self.conjugator.n

    @classmethod
    def standard(cls, n: int, i: int) -> Cord:
        """The cord whose braid is ``σ_i``."""
        return cls(Braid(n), i)

    @classmethod
    def from_braid(cls, b: Braid) -> Cord:
        """Recover a witness when ``b`` is spelled literally as ``u^-1 σ_i^±1 u``."""
        w = b.word
        if len(w) % 2 == 1:
            k = len(w) // 2
            head, (i, e), tail = w[:k], w[k], w[k + 1:]
            if head == tuple((j, -s) for j, s in reversed(tail)):
                return cls(Braid(b.n, tail), i, e, braid=b)
        raise StructuralError(f"braid {b} is not visibly a conjugate of a generator; give a witness")

    def witness_braid(self) -> Braid:
        c = self.conjugator
        return ~c * Braid.generator(c.n, self.generator, self.sign) * c

    def witness_ok(self) -> bool:
        return self.braid == self.witness_braid()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cord):
            return NotImplemented
        return self.braid == other.braid

    def __hash__(self) -> int:
        return hash(self.braid)

    def __str__(self) -> str:
        return f"({self.conjugator}, {self.generator})"


def cord_op(a: Cord, b: Cord) -> Cord:
    """``a ▷ b = b^-1 a b``; the witness conjugator becomes ``w_a · b``."""
    return Cord(a.conjugator * b.braid, a.generator, a.sign)


def cord_op_inv(a: Cord, b: Cord) -> Cord:
    return Cord(a.conjugator * ~b.braid, a.generator, a.sign)


def augment_cord(c: Cord | LCord) -> Braid:
    """Augmentation into the braid group: the cord's braid, or ``β^λ`` for an L-cord."""
    if isinstance(c, LCord):
        return c.cord.braid ** c.label
    return c.braid


@dataclass(frozen=True)
class LCord:
    """A cord labelled by a nonzero integer."""

    cord: Cord
    label: int = 1

    def __post_init__(self) -> None:
        if self.label == 0:
            raise StructuralError("L-cord labels must be nonzero")

    @property
    def n(self) -> int:
        return self.cord.n

    def witness_ok(self) -> bool:
        """The augmented braid equals ``w^-1 σ_i^label w`` for the stored witness."""
        c = self.cord
        w = c.conjugator
        expected = ~w * Braid.generator(c.n, c.generator, c.sign * self.label) * w
        return augment_cord(self) == expected

    def __str__(self) -> str:
        return f"({self.cord.conjugator}, {self.cord.generator}, {self.label})"


def lcord_op(a: LCord, b: LCord) -> LCord:
    """``(α, l) ▷ (β, λ) = (β^-λ α β^λ, l)``."""
    g = augment_cord(b)
    return LCord(Cord(a.cord.conjugator * g, a.cord.generator, a.cord.sign), a.label)


def lcord_op_inv(a: LCord, b: LCord) -> LCord:
    g = augment_cord(b)
    return LCord(Cord(a.cord.conjugator * ~g, a.cord.generator, a.cord.sign), a.label)


def _cord_key(c: Cord) -> tuple:
    return artin_action(c.braid)


def cord_augmented(n: int) -> AugmentedQuandle:
    """Cord quandle of the n-punctured disk, augmented in B_n (acting by conjugation)."""
    return AugmentedQuandle(
        rhd=cord_op, lhd=cord_op_inv, ell=augment_cord,
        act=lambda q, g: Cord(q.conjugator * g, q.generator, q.sign),
        identity=Braid(n), key=_cord_key, name=f"cords:{n}")


def lcord_augmented(n: int) -> AugmentedQuandle:
    return AugmentedQuandle(
        rhd=lcord_op, lhd=lcord_op_inv, ell=augment_cord,
        act=lambda q, g: LCord(Cord(q.cord.conjugator * g, q.cord.generator, q.cord.sign), q.label),
        identity=Braid(n), key=lambda q: (q.label, _cord_key(q.cord)), name=f"lcords:{n}")
