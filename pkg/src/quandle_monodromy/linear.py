"""Quandles from linear algebra over Z and Z/m.

Vectors are tuples of Python ints.  Over Z/m they are kept reduced to
``0..m-1``; over Z (modulus 0) arithmetic is exact and unbounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import FiniteQuandle

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RingSpec:
    """Z when ``modulus == 0``, otherwise Z/modulus."""

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError("modulus must be 0 (for Z) or at least 2")

    @property
    def finite(self) -> bool:
        return self.modulus > 0

    def reduce(self, a: int) -> int:
        return a % self.modulus if self.modulus else a

    def vec(self, v: Sequence[int]) -> Vector:
        return tuple(self.reduce(a) for a in v)

    def is_unit(self, a: int) -> bool:
        if self.modulus == 0:
            return a in (1, -1)
        return _gcd(a, self.modulus) == 1

    def inverse(self, a: int) -> int:
        if not self.is_unit(a):
            raise ValueError(f"{a} is not a unit")
        return a if self.modulus == 0 else pow(a, -1, self.modulus)

    def elements(self) -> range:
        if not self.finite:
            raise ValueError("Z is infinite")
        return range(self.modulus)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _det(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([row[:j] + row[j + 1:] for row in M[1:]])
               for j in range(n) if M[0][j])


def _adjugate(M: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(M)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [list(r[:j]) + list(r[j + 1:]) for k, r in enumerate(M) if k != i]
            adj[j][i] = (-1) ** (i + j) * _det(minor)
    return adj


def _matvec(M: Matrix, v: Vector) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in M]


# -- Alexander quandles ---------------------------------------------------------


class AlexanderQuandle:
    """``x ▷ y = T(x - y) + y`` and ``x ⊵ y = T^-1(x - y) + y`` on R^k."""

    def __init__(self, T: Sequence[Sequence[int]], ring: RingSpec = RingSpec()):
        self.ring = ring
        T = tuple(tuple(ring.reduce(a) for a in row) for row in T)
        k = len(T)
        if k == 0 or any(len(r) != k for r in T):
            raise ValueError("T must be a non-empty square matrix")
        det = _det(T)
        if not ring.is_unit(det):
            raise ValueError(f"T is not invertible over {ring} (det {det})")
        dinv = ring.inverse(ring.reduce(det))
        self.T = T
        self.T_inv = tuple(tuple(ring.reduce(dinv * a) for a in row) for row in _adjugate(T))
        self.dim = k

    def op(self, x: Vector, y: Vector) -> Vector:
        return alexander_op(x, y, self.T, self.ring)

    def op_inv(self, x: Vector, y: Vector) -> Vector:
        return alexander_op(x, y, self.T_inv, self.ring)

    def elements(self) -> list[Vector]:
        return [tuple(v) for v in itertools.product(self.ring.elements(), repeat=self.dim)]

    def to_finite(self) -> FiniteQuandle:
        return _tabulate(self.elements(), self.op)


def alexander_op(x: Vector, y: Vector, T: Matrix, ring: RingSpec = RingSpec()) -> Vector:
    d = [a - b for a, b in zip(x, y)]
    return ring.vec(a + b for a, b in zip(_matvec(T, d), y))


def dihedral_quandle(n: int) -> FiniteQuandle:
    """Z/n with ``x ▷ y = 2y - x``."""
    if n < 1:
        raise ValueError("n must be positive")
    return FiniteQuandle(n, [[(2 * y - x) % n for y in range(n)] for x in range(n)])


# -- alternating quandles ----------------------------------------------------------


@dataclass(frozen=True)
class AlternatingForm:
    matrix: Matrix
    ring: RingSpec = RingSpec()

    def __post_init__(self) -> None:
        ring = self.ring
        M = tuple(tuple(ring.reduce(a) for a in row) for row in self.matrix)
        k = len(M)
        if any(len(r) != k for r in M):
            raise ValueError("form matrix must be square")
        for i in range(k):
            if M[i][i] != 0:
                raise ValueError("form must be alternating (zero diagonal)")
            for j in range(i):
                if ring.reduce(M[i][j] + M[j][i]) != 0:
                    raise ValueError("form must be antisymmetric")
        object.__setattr__(self, "matrix", M)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def symplectic(cls, g: int, ring: RingSpec = RingSpec()) -> AlternatingForm:
        """Standard intersection form on a_1, b_1, ..., a_g, b_g with <a_i, b_i> = 1."""
        if g < 1:
            raise ValueError("genus must be at least 1")
        M = [[0] * (2 * g) for _ in range(2 * g)]
        for i in range(g):
            M[2 * i][2 * i + 1] = 1
            M[2 * i + 1][2 * i] = -1
        return cls(tuple(tuple(r) for r in M), ring)

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(f"vectors must have dimension {self.dim}")
        return self.ring.reduce(sum(x[i] * self.matrix[i][j] * y[j]
                                    for i in range(self.dim) for j in range(self.dim)
                                    if self.matrix[i][j]))

    def to_json(self) -> dict:
        return {"modulus": self.ring.modulus, "matrix": [list(r) for r in self.matrix]}

    @classmethod
    def from_json(cls, data: dict) -> AlternatingForm:
        return cls(tuple(tuple(r) for r in data["matrix"]), RingSpec(data.get("modulus", 0)))


def alternating_op(x: Vector, y: Vector, form: AlternatingForm) -> Vector:
    """``x ▷ y = x + <x,y> y``."""
    c = form.pair(x, y)
    return form.ring.vec(a + c * b for a, b in zip(x, y))


def alternating_op_inv(x: Vector, y: Vector, form: AlternatingForm) -> Vector:
    c = form.pair(x, y)
    return form.ring.vec(a - c * b for a, b in zip(x, y))


def reduce_mod_negation(v: Sequence[int], ring: RingSpec = RingSpec()) -> Vector:
    """Canonical representative of the orbit {v, -v}.

    Over Z the first nonzero coordinate is made positive; over Z/m the
    lexicographically smaller of v and -v (entries in 0..m-1) is chosen.
    """
    v = ring.vec(v)
    neg = ring.vec(-a for a in v)
    if ring.finite:
        return min(v, neg)
    for a in v:
        if a:
            return v if a > 0 else neg
    return v


class AlternatingQuandle:
    """R^k with ``x ▷ y = x + <x,y> y``; ``reduced=True`` passes to {±1}-orbits."""

    def __init__(self, form: AlternatingForm, reduced: bool = False):
        self.form = form
        self.ring = form.ring
        self.reduced = reduced

    def _norm(self, v: Vector) -> Vector:
        return reduce_mod_negation(v, self.ring) if self.reduced else v

    def element(self, v: Sequence[int]) -> Vector:
        return self._norm(self.ring.vec(v))

    def op(self, x: Vector, y: Vector) -> Vector:
        return self._norm(alternating_op(x, y, self.form))

    def op_inv(self, x: Vector, y: Vector) -> Vector:
        return self._norm(alternating_op_inv(x, y, self.form))

    def elements(self) -> list[Vector]:
        vecs = (tuple(v) for v in itertools.product(self.ring.elements(), repeat=self.form.dim))
        if not self.reduced:
            return list(vecs)
        return sorted({reduce_mod_negation(v, self.ring) for v in vecs})

    def to_finite(self) -> FiniteQuandle:
        return _tabulate(self.elements(), self.op)


def homology_quandle(g: int, ring: RingSpec = RingSpec(), reduced: bool = False) -> AlternatingQuandle:
    """H_1 of the closed genus-g surface with its intersection form.

    ``reduced=False`` gives the R-homology quandle; ``reduced=True`` the
    R-homology Dehn quandle (classes up to sign).
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    return AlternatingQuandle(AlternatingForm.symplectic(g, ring), reduced=reduced)


def slope_to_homology(s) -> Vector:
    """Class in HD_Z(T^2) of a torus curve: slope y/x -> ±(x, y), I -> 0.

    With the standard form (<(1,0),(0,1)> = 1) this intertwines the slope
    operation ▷ with the alternating ▷ (not ⊵).
    """
    from .torus import Slope

    if not isinstance(s, Slope):
        return (0, 0)
    return reduce_mod_negation((s.x, s.y))


def _tabulate(elements: list[Vector], op) -> FiniteQuandle:
    pos = {v: i for i, v in enumerate(elements)}
    rhd = [[pos[op(x, y)] for y in elements] for x in elements]
    labels = tuple(",".join(map(str, v)) for v in elements)
    return FiniteQuandle(len(elements), rhd, labels=labels)
