"""Permutations of {1..d} in one-line notation.

Composition is left to right: ``(f * g)(i) = g(f(i))``, matching
concatenation of monodromy paths.  With this convention ``~y * x * y``
relabels the cycles of ``x`` by ``y``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_cycles(cls, d: int, cycles: list[tuple[int, ...]]) -> Permutation:
        img = list(range(1, d + 1))
        seen: set[int] = set()
        for c in cycles:
            for a in c:
                if not 1 <= a <= d:
                    raise ValueError(f"point {a} outside 1..{d}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycle notation")
                seen.add(a)
            for a, b in zip(c, c[1:] + c[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, d: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` or ``"e"`` is the identity."""
        text = text.strip()
        if text in ("", "e", "()"):
            return cls.identity(d)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", text):
            raise ValueError(f"bad cycle notation {text!r}")
        cycles = [tuple(int(a) for a in re.split(r"[\s,]+", body.strip()))
                  for body in re.findall(r"\(([^)]*)\)", text)]
        return cls.from_cycles(d, cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        img = other.images
        return Permutation._unchecked(tuple([img[a - 1] for a in self.images]))

    def __invert__(self) -> Permutation:
        inv = [0] * self.degree
        for i, a in enumerate(self.images, 1):
            inv[a - 1] = i
        return Permutation._unchecked(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else ~self
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(a == i for i, a in enumerate(self.images, 1))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen: set[int] = set()
        out = []
        for i in range(1, self.degree + 1):
            if i in seen:
                continue
            c = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                c.append(j)
                seen.add(j)
                j = self(j)
            if len(c) > 1:
                out.append(tuple(c))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    def is_cyclic(self) -> bool:
        """Exactly one cycle of length at least two."""
        return len(self.cycles) == 1

    def is_transposition(self) -> bool:
        return self.cycle_type() == (2,)

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def symmetric_group(d: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, d + 1)):
        yield Permutation(p)


def generated_subgroup_is_transitive(gens: list[Permutation], d: int) -> bool:
    if d <= 1:
        return True
    reached = {1}
    stack = [1]
    while stack:
        i = stack.pop()
        for g in gens:
            for j in (g(i), (~g)(i)):
                if j not in reached:
                    reached.add(j)
                    stack.append(j)
    return len(reached) == d
