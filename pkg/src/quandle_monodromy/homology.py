"""Rack and quandle homology of finite quandles.

Chains in degree n are formal sums of n-tuples of elements, indexed in
lexicographic order.  The boundary is

    ∂(x_1..x_n) = Σ_{i=2..n} (-1)^i [ (x_1..x̂_i..x_n)
                                      - (x_1 ▷ x_i, .., x_{i-1} ▷ x_i, x_{i+1}..x_n) ]

with ∂_1 = 0.  Quandle homology is the homology of the quotient by the
degenerate tuples (some x_j = x_{j+1}).  Groups are read off Smith normal
forms computed exactly over Z.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .core import FiniteQuandle

DEFAULT_MAX_DEGREE = 4
MAX_CHAIN_SIZE = 10**6

THEORIES = ("rack", "quandle")

SparseColumns = list[dict[int, int]]


class CapacityError(ValueError):
    """Requested degree or chain size exceeds the configured bound."""


# -- chain complexes -----------------------------------------------------------------


def _tuples(k: int, n: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(k), repeat=n)


def _index(t: Sequence[int], k: int) -> int:
    i = 0
    for a in t:
        i = i * k + a
    return i


def is_degenerate(t: Sequence[int]) -> bool:
    return any(a == b for a, b in zip(t, t[1:]))


def _rack_columns(Q: FiniteQuandle, n: int) -> SparseColumns:
    """Columns of ∂_n (one dict row -> coefficient per n-tuple)."""
    k, r = Q.n, Q.rhd
    cols: SparseColumns = []
    for t in _tuples(k, n):
        col: dict[int, int] = {}
        for i in range(1, n):  # 0-based position of x_i for i = 2..n
            s = 1 if (i + 1) % 2 == 0 else -1
            xi = t[i]
            face = t[:i] + t[i + 1:]
            moved = tuple(r[a][xi] for a in t[:i]) + t[i + 1:]
            a, b = _index(face, k), _index(moved, k)
            if a != b:
                col[a] = col.get(a, 0) + s
                col[b] = col.get(b, 0) - s
        cols.append({row: v for row, v in col.items() if v})
    return cols


def _basis(k: int, n: int, theory: str) -> list[tuple[int, ...]]:
    ts = list(_tuples(k, n))
    if theory == "quandle":
        ts = [t for t in ts if not is_degenerate(t)]
    return ts


def boundary_columns(Q: FiniteQuandle, n: int, theory: str = "rack") -> tuple[SparseColumns, int]:
    """Sparse ∂_n in the chosen theory, as (columns, number of rows)."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if theory not in THEORIES:
        raise ValueError(f"theory must be one of {THEORIES}")
    k = Q.n
    cols = _rack_columns(Q, n)
    if theory == "rack":
        return cols, k ** (n - 1)
    rows = _basis(k, n - 1, theory)
    row_pos = {_index(t, k): i for i, t in enumerate(rows)}
    out = []
    for t in _basis(k, n, theory):
        col = cols[_index(t, k)]
        out.append({row_pos[r]: v for r, v in col.items() if r in row_pos})
    return out, len(rows)


def _dense(cols: SparseColumns, nrows: int) -> np.ndarray:
    M = np.zeros((nrows, len(cols)), dtype=np.int64)
    for j, col in enumerate(cols):
        for i, v in col.items():
            M[i, j] = v
    return M


def rack_boundary(Q: FiniteQuandle, n: int) -> np.ndarray:
    """Dense matrix of ∂_n: rows (n-1)-tuples, columns n-tuples, both lexicographic."""
    return _dense(*boundary_columns(Q, n, "rack"))


def quandle_boundary(Q: FiniteQuandle, n: int) -> np.ndarray:
    """∂_n on the quotient by degenerate tuples (rows and columns nondegenerate)."""
    return _dense(*boundary_columns(Q, n, "quandle"))


@dataclass
class DegenerateSubcomplex:
    degree: int
    basis: list[tuple[int, ...]]
    stable: bool
    quotient_boundary: np.ndarray


def quandle_subcomplex(Q: FiniteQuandle, n: int) -> DegenerateSubcomplex:
    """Degenerate n-tuples, whether ∂ maps them into degenerate chains, and the quotient ∂_n."""
    if n < 2:
        raise ValueError("degenerate tuples start in degree 2")
    k = Q.n
    cols = _rack_columns(Q, n)
    basis = [t for t in _tuples(k, n) if is_degenerate(t)]
    row_tuples = list(_tuples(k, n - 1))
    stable = all(is_degenerate(row_tuples[r]) for t in basis for r in cols[_index(t, k)])
    return DegenerateSubcomplex(n, basis, stable, quandle_boundary(Q, n))


@dataclass
class ChainComplex:
    quandle: FiniteQuandle
    theory: str
    ranks: list[int]
    boundaries: dict[int, np.ndarray] = field(default_factory=dict)

    def is_complex(self) -> bool:
        """``∂_{n-1} ∂_n == 0`` for every consecutive pair of stored boundaries."""
        for n in sorted(self.boundaries):
            if n - 1 in self.boundaries:
                prod = self.boundaries[n - 1].astype(object) @ self.boundaries[n].astype(object)
                if np.any(prod != 0):
                    return False
        return True


def chain_complex(Q: FiniteQuandle, max_degree: int, theory: str = "rack") -> ChainComplex:
    _guard(Q, max_degree, max_degree)
    ranks = [len(_basis(Q.n, n, theory)) for n in range(max_degree + 1)]
    bds = {n: _dense(*boundary_columns(Q, n, theory)) for n in range(1, max_degree + 1)}
    return ChainComplex(Q, theory, ranks, bds)


# -- Smith normal form ----------------------------------------------------------------


@dataclass
class SmithForm:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` (positive) and the rank."""

    factors: list[int]

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.factors if d > 1]


def _to_columns(M) -> tuple[SparseColumns, int]:
    if isinstance(M, tuple) and len(M) == 2 and isinstance(M[0], list):
        return M
    A = np.asarray(M, dtype=object)
    if A.ndim != 2:
        A = A.reshape(0, 0) if A.size == 0 else A.reshape(1, -1)
    nrows, ncols = A.shape
    cols = [{i: int(A[i, j]) for i in range(nrows) if A[i, j] != 0} for j in range(ncols)]
    return cols, nrows


def smith_normal_form(M) -> SmithForm:
    """Invariant factors of an integer matrix (dense array/list, or ``(columns, nrows)``).

    Sparse elimination over exact Python ints.  Each step pivots on a
    nonzero entry of least absolute value (ties broken by the smallest
    row-length × column-length product), reduces its column and row by
    Euclidean steps until both are clear, and records the pivot.  The
    resulting diagonal is then put into divisibility order.
    """
    cols, _ = _to_columns(M)
    rows: dict[int, dict[int, int]] = {}
    where: dict[int, set[int]] = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = int(v)
                where.setdefault(j, set()).add(i)

    def put(i: int, j: int, v: int) -> None:
        if v:
            rows[i][j] = v
            where.setdefault(j, set()).add(i)
        else:
            rows[i].pop(j, None)
            s = where.get(j)
            if s is not None:
                s.discard(i)
                if not s:
                    del where[j]

    def row_sub(i: int, r: int, q: int) -> None:
        ri = rows[i]
        for j, v in list(rows[r].items()):
            put(i, j, ri.get(j, 0) - q * v)

    diag: list[int] = []
    while where:
        best = None
        for j, rs in where.items():
            for i in rs:
                v = abs(rows[i][j])
                score = (v, len(rows[i]) * len(rs))
                if best is None or score < best[0]:
                    best = (score, i, j)
                    if score == (1, 1):
                        break
            if best and best[0] == (1, 1):
                break
        _, r, c = best
        while True:
            p = rows[r][c]
            dirty = False
            for i in [i for i in where[c] if i != r]:
                q = rows[i][c] // p
                if q:
                    row_sub(i, r, q)
                if rows[i].get(c):
                    dirty = True
            if dirty:
                r = min(where[c], key=lambda i: abs(rows[i][c]))
                continue
            for j in [j for j in rows[r] if j != c]:
                q = rows[r][j] // p
                if q:
                    put(r, j, rows[r][j] - q * p)
                if rows[r].get(j):
                    dirty = True
            if dirty:
                c = min(rows[r], key=lambda j: abs(rows[r][j]))
                continue
            break
        diag.append(abs(rows[r][c]))
        put(r, c, 0)
        del rows[r]
    return SmithForm(_divisibility_chain(diag))


def _divisibility_chain(diag: list[int]) -> list[int]:
    ones = [d for d in diag if d == 1]
    rest = sorted(d for d in diag if d != 1)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = math.gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return ones + sorted(rest)


def smith_decomposition(M: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Dense Smith form with transforms: returns ``(U, D, V)`` with ``U M V = D``.

    U and V are unimodular; D is diagonal with ``d_1 | d_2 | ...`` and
    nonnegative entries.  Intended for small matrices.
    """
    A = [[int(v) for v in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i: int, k: int) -> None:
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j: int, k: int) -> None:
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(dst: int, src: int, q: int) -> None:  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            low = [(abs(A[i][t]), i) for i in range(t + 1, m) if A[i][t]]
            if low:
                swap_rows(t, min(low)[1])
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            low = [(abs(A[t][j]), j) for j in range(t + 1, n) if A[t][j]]
            if low:
                swap_cols(t, min(low)[1])
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is not None:
                add_row(t, bad[0], 1)
                continue
            break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return U, A, V


# -- homology ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def _guard(Q: FiniteQuandle, n: int, max_degree: int) -> None:
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > max_degree:
        raise CapacityError(f"degree {n} exceeds the bound {max_degree}")
    if Q.n ** (n + 1) > MAX_CHAIN_SIZE:
        raise CapacityError(f"|Q|^{n + 1} = {Q.n ** (n + 1)} exceeds {MAX_CHAIN_SIZE}")


def homology(Q: FiniteQuandle, n: int, theory: str = "rack",
             max_degree: int = DEFAULT_MAX_DEGREE) -> HomologyGroup:
    """``H_n = ker ∂_n / im ∂_{n+1}`` for the rack or quandle complex."""
    if theory not in THEORIES:
        raise ValueError(f"theory must be one of {THEORIES}")
    _guard(Q, n, max_degree)
    dn_cols, _ = boundary_columns(Q, n, theory)
    up = boundary_columns(Q, n + 1, theory)
    kernel = len(dn_cols) - smith_normal_form((dn_cols, 0)).rank
    snf = smith_normal_form(up)
    return HomologyGroup(kernel - snf.rank, tuple(snf.torsion))
