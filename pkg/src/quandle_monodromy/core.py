"""Finite quandles as operation tables, plus the augmented quandle contract.

Elements of a :class:`FiniteQuandle` are the dense indices ``0..n-1``; labels
are display metadata only.  ``rhd[x][y]`` is ``x ▷ y`` and ``lhd[x][y]`` is
``x ⊵ y``.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Hashable, Iterable, Sequence

MAX_VIOLATIONS = 100

IDEMPOTENCE = "idempotence"
RIGHT_INVERSE = "right-inverse"
SELF_DISTRIBUTIVITY = "self-distributivity"


class StructuralError(ValueError):
    """Input data is malformed (as opposed to well-formed but failing a law)."""


@dataclass(frozen=True)
class FiniteQuandle:
    """Operation tables on ``{0, ..., n-1}``.

    ``lhd`` is derived from ``rhd`` when omitted.  Construction fails with
    :class:`StructuralError` if an entry is out of range or a column of
    ``rhd`` is not a bijection (so ``⊵`` cannot exist).  The quandle axioms
    themselves are *not* enforced here; see :func:`check_axioms`.

    ``embedding`` optionally records a group realisation: a pair
    ``(elements, identity)`` where ``elements[i]`` is a group element and
    ``i ▷ j`` is conjugation ``elements[j]^-1 * elements[i] * elements[j]``.
    It is used to build the natural augmentation (see :func:`augment`).
    """

    n: int
    rhd: tuple[tuple[int, ...], ...]
    lhd: tuple[tuple[int, ...], ...] = None  # type: ignore[assignment]
    labels: tuple[str, ...] | None = None
    embedding: tuple[tuple[Any, ...], Any] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        rhd = _as_table(self.rhd, n, "rhd")
        object.__setattr__(self, "rhd", rhd)
        if self.lhd is None:
            object.__setattr__(self, "lhd", _invert_columns(rhd, n))
        else:
            object.__setattr__(self, "lhd", _as_table(self.lhd, n, "lhd"))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise StructuralError(f"expected {n} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return self.n

    def op(self, x: int, y: int) -> int:
        return self.rhd[x][y]

    def op_inv(self, x: int, y: int) -> int:
        return self.lhd[x][y]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def restrict(self, subset: Iterable[int]) -> FiniteQuandle:
        """The table restricted to a closed subset, reindexed in increasing order."""
        elems = sorted(set(subset))
        pos = {x: i for i, x in enumerate(elems)}
        try:
            rhd = [[pos[self.rhd[x][y]] for y in elems] for x in elems]
        except KeyError:
            raise ValueError("subset is not closed under ▷") from None
        labels = tuple(self.label(x) for x in elems) if self.labels else None
        emb = None
        if self.embedding is not None:
            emb = (tuple(self.embedding[0][x] for x in elems), self.embedding[1])
        return FiniteQuandle(len(elems), rhd, labels=labels, embedding=emb)

    def relabel(self, perm: Sequence[int]) -> FiniteQuandle:
        """Transport the structure along the bijection ``x -> perm[x]``."""
        n = self.n
        inv = [0] * n
        for x, px in enumerate(perm):
            inv[px] = x
        rhd = [[perm[self.rhd[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
        labels = tuple(self.label(inv[a]) for a in range(n)) if self.labels else None
        return FiniteQuandle(n, rhd, labels=labels)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"format": 1, "n": self.n, "rhd": [list(r) for r in self.rhd]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> FiniteQuandle:
        try:
            n = data["n"]
            rhd = data["rhd"]
        except (KeyError, TypeError):
            raise StructuralError("quandle JSON needs 'n' and 'rhd'") from None
        if not isinstance(n, int) or n < 0:
            raise StructuralError("'n' must be a non-negative integer")
        return cls(n, rhd, labels=data.get("labels"))


def _as_table(table: Any, n: int, name: str) -> tuple[tuple[int, ...], ...]:
    try:
        rows = [tuple(row) for row in table]
    except TypeError:
        raise StructuralError(f"{name} is not a table") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructuralError(f"{name} must be {n}x{n}")
    for r in rows:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise StructuralError(f"{name} entry {v!r} out of range 0..{n - 1}")
    return tuple(rows)


def _invert_columns(rhd: tuple[tuple[int, ...], ...], n: int) -> tuple[tuple[int, ...], ...]:
    lhd = [[-1] * n for _ in range(n)]
    for y in range(n):
        for x in range(n):
            z = rhd[x][y]
            if lhd[z][y] != -1:
                raise StructuralError(f"column {y} of rhd is not a bijection")
            lhd[z][y] = x
    return tuple(tuple(r) for r in lhd)


def load_quandle(path: str | Path) -> FiniteQuandle:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path}: invalid JSON ({exc})") from None
    return FiniteQuandle.from_json(data)


def table_quandle(elements: Sequence[Hashable], op: Callable[[Any, Any], Any],
                  labels: Sequence[str] | None = None,
                  embedding_identity: Any = None, embed: bool = False) -> FiniteQuandle:
    """Tabulate ``op`` on a finite carrier closed under it."""
    pos = {e: i for i, e in enumerate(elements)}
    if len(pos) != len(elements):
        raise ValueError("duplicate elements")
    rhd = []
    for x in elements:
        row = []
        for y in elements:
            z = op(x, y)
            if z not in pos:
                raise ValueError(f"carrier not closed: {x} ▷ {y} = {z}")
            row.append(pos[z])
        rhd.append(row)
    if labels is None:
        labels = [str(e) for e in elements]
    emb = (tuple(elements), embedding_identity) if embed else None
    return FiniteQuandle(len(elements), rhd, labels=tuple(labels), embedding=emb)


# -- axioms -----------------------------------------------------------------


@dataclass
class AxiomReport:
    passed: bool
    violations: list[tuple[str, tuple]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"format": 1, "passed": self.passed,
                "violations": [[name, list(w)] for name, w in self.violations]}


def check_axioms(Q: FiniteQuandle) -> AxiomReport:
    """Exhaustively check idempotence, right-invertibility and self-distributivity."""
    n, r, l = Q.n, Q.rhd, Q.lhd
    bad: list[tuple[str, tuple]] = []

    def add(name: str, witness: tuple) -> bool:
        bad.append((name, witness))
        return len(bad) >= MAX_VIOLATIONS

    full = False
    for x in range(n):
        if r[x][x] != x and (full := add(IDEMPOTENCE, (x,))):
            break
    if not full:
        for x, y in itertools.product(range(n), repeat=2):
            if (l[r[x][y]][y] != x or r[l[x][y]][y] != x) and (full := add(RIGHT_INVERSE, (x, y))):
                break
    if not full:
        for x, y, z in itertools.product(range(n), repeat=3):
            if r[r[x][y]][z] != r[r[x][z]][r[y][z]] and add(SELF_DISTRIBUTIVITY, (x, y, z)):
                break
    return AxiomReport(not bad, bad)


def is_quandle(Q: FiniteQuandle) -> bool:
    return check_axioms(Q).passed


# -- homomorphisms ----------------------------------------------------------


@dataclass(frozen=True)
class QuandleHom:
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __len__(self) -> int:
        return len(self.map)

    def then(self, other: QuandleHom) -> QuandleHom:
        """Composite: apply self, then other."""
        return QuandleHom(tuple(other.map[v] for v in self.map))


def is_hom(f: Sequence[int], src: FiniteQuandle, tgt: FiniteQuandle) -> bool:
    m = f.map if isinstance(f, QuandleHom) else f
    if len(m) != src.n:
        return False
    return all(m[src.rhd[x][y]] == tgt.rhd[m[x]][m[y]]
               for x in range(src.n) for y in range(src.n))


def enumerate_homs(src: FiniteQuandle, tgt: FiniteQuandle) -> list[QuandleHom]:
    """All quandle homomorphisms ``src -> tgt`` in lexicographic order of their maps.

    Backtracks on the smallest unassigned source element; every assignment
    is closed under the values it forces (``f(x ▷ y) = f(x) ▷ f(y)``) before
    branching again, and a clash prunes the branch.
    """
    n, m = src.n, tgt.n
    sr, tr = src.rhd, tgt.rhd
    out: list[QuandleHom] = []

    def propagate(f: list[int], assigned: list[int]) -> bool:
        queue = list(assigned)
        done = [x for x in range(n) if f[x] >= 0 and x not in assigned]
        while queue:
            a = queue.pop()
            for b in done + [a]:
                for x, y in ((a, b), (b, a)):
                    z, v = sr[x][y], tr[f[x]][f[y]]
                    if f[z] < 0:
                        f[z] = v
                        queue.append(z)
                    elif f[z] != v:
                        return False
            done.append(a)
        return True

    def search(f: list[int]) -> None:
        try:
            x = f.index(-1)
        except ValueError:
            out.append(QuandleHom(tuple(f)))
            return
        for v in range(m):
            g = list(f)
            g[x] = v
            if propagate(g, [x]):
                search(g)

    if n == 0:
        return [QuandleHom(())]
    search([-1] * n)
    return out


def count_homs(src: FiniteQuandle, tgt: FiniteQuandle) -> int:
    return len(enumerate_homs(src, tgt))


def is_isomorphism(f: Sequence[int], src: FiniteQuandle, tgt: FiniteQuandle) -> bool:
    m = f.map if isinstance(f, QuandleHom) else f
    return src.n == tgt.n and sorted(m) == list(range(tgt.n)) and is_hom(m, src, tgt)


# -- generation and constructions ------------------------------------------


def subquandle_generated(Q: FiniteQuandle, seed: Iterable[int]) -> frozenset[int]:
    """Smallest subset containing ``seed`` closed under ▷ and ⊵."""
    S = set(seed)
    for x in S:
        if not 0 <= x < Q.n:
            raise ValueError(f"element {x} not in quandle")
    frontier = list(S)
    while frontier:
        new = []
        members = list(S)
        for a in frontier:
            for b in members:
                for z in (Q.rhd[a][b], Q.rhd[b][a], Q.lhd[a][b], Q.lhd[b][a]):
                    if z not in S:
                        S.add(z)
                        new.append(z)
        frontier = new
    return frozenset(S)


def orbits(Q: FiniteQuandle) -> list[frozenset[int]]:
    """Orbits of the right-translation (inner) action."""
    seen: set[int] = set()
    out = []
    for x in range(Q.n):
        if x in seen:
            continue
        orb = {x}
        stack = [x]
        while stack:
            a = stack.pop()
            for y in range(Q.n):
                for z in (Q.rhd[a][y], Q.lhd[a][y]):
                    if z not in orb:
                        orb.add(z)
                        stack.append(z)
        seen |= orb
        out.append(frozenset(orb))
    return out


def trivial_quandle(k: int) -> FiniteQuandle:
    return FiniteQuandle(k, [[x] * k for x in range(k)])


def achiral_double(Q: FiniteQuandle) -> FiniteQuandle:
    """Quandle on ``Q × {+, -}``: ``(x,σ) ▷ (y,-) = (x ▷ y, σ)``, ``(x,σ) ▷ (y,+) = (x ⊵ y, σ)``.

    Index ``x`` is ``(x, +)`` and ``n + x`` is ``(x, -)``.
    """
    if not is_quandle(Q):
        raise ValueError("achiral_double needs a quandle")
    n = Q.n
    rhd = [[0] * (2 * n) for _ in range(2 * n)]
    for s in (0, 1):
        for x in range(n):
            for t in (0, 1):
                for y in range(n):
                    z = Q.lhd[x][y] if t == 0 else Q.rhd[x][y]
                    rhd[s * n + x][t * n + y] = s * n + z
    labels = tuple(f"{Q.label(x)}{sign}" for sign in "+-" for x in range(n))
    return FiniteQuandle(2 * n, rhd, labels=labels)


# -- augmented quandles ------------------------------------------------------


@dataclass(frozen=True)
class AugmentedQuandle:
    """A quandle with a group acting on the right and an augmentation into it.

    Group elements must support ``*`` (product), ``~`` (inverse) and ``==``;
    ``identity`` is the neutral element.  ``act(q, g)`` is ``q · g``.
    ``elements`` lists the carrier when it is finite; ``key`` maps elements
    to hashable canonical keys (identity by default).
    """

    rhd: Callable[[Any, Any], Any]
    lhd: Callable[[Any, Any], Any]
    ell: Callable[[Any], Any]
    act: Callable[[Any, Any], Any]
    identity: Any
    elements: tuple | None = None
    key: Callable[[Any], Hashable] = lambda q: q
    name: str = ""

    @property
    def finite(self) -> bool:
        return self.elements is not None

    def product(self, entries: Iterable[Any]) -> Any:
        """Ordered product ``ell(q_0) * ell(q_1) * ...``."""
        g = self.identity
        for q in entries:
            g = g * self.ell(q)
        return g


def augment(Q: FiniteQuandle) -> AugmentedQuandle:
    """Natural augmentation of a finite quandle.

    With a group embedding, ``ell`` is the inclusion and the group acts by
    conjugation.  Otherwise ``ell(q)`` is the right translation ``x -> x ▷ q``
    as a permutation of the carrier, acting by evaluation.  Results are
    cached per table and embedding.
    """
    try:
        return _augment_cached(Q, Q.embedding)
    except TypeError:  # unhashable group elements
        return _augment(Q)


@functools.lru_cache(maxsize=256)
def _augment_cached(Q: FiniteQuandle, embedding: Any) -> AugmentedQuandle:
    return _augment(Q)


def _augment(Q: FiniteQuandle) -> AugmentedQuandle:
    from .perm import Permutation

    idx = range(Q.n)
    if Q.embedding is not None:
        elems, ident = Q.embedding
        pos = {e: i for i, e in enumerate(elems)}
        return AugmentedQuandle(
            rhd=Q.op, lhd=Q.op_inv, ell=lambda q: elems[q],
            act=lambda q, g: pos[~g * elems[q] * g],
            identity=ident, elements=tuple(idx), name="conjugation")
    translations = [Permutation(tuple(Q.rhd[x][q] + 1 for x in idx)) for q in idx]
    return AugmentedQuandle(
        rhd=Q.op, lhd=Q.op_inv, ell=lambda q: translations[q],
        act=lambda q, g: g(q + 1) - 1,
        identity=Permutation.identity(Q.n), elements=tuple(idx), name="inner")


FIXED_POINT = "fixed-point"
EQUIVARIANCE = "equivariance"
ACTION_HOM = "action-homomorphism"


def check_augmentation(A: AugmentedQuandle, quandle_sample: Iterable[Any],
                       group_sample: Iterable[Any]) -> AxiomReport:
    """Check ``q·ell(q) = q``, ``ell(q·g) = g^-1 ell(q) g`` and that ``q -> q·g`` is a hom."""
    qs = list(quandle_sample)
    gs = list(group_sample)
    bad: list[tuple[str, tuple]] = []

    def add(name: str, witness: tuple) -> None:
        if len(bad) < MAX_VIOLATIONS:
            bad.append((name, witness))

    for q in qs:
        if A.act(q, A.ell(q)) != q:
            add(FIXED_POINT, (q,))
    for q in qs:
        for g in gs:
            if A.ell(A.act(q, g)) != ~g * A.ell(q) * g:
                add(EQUIVARIANCE, (q, g))
    for g in gs:
        for p in qs:
            for q in qs:
                if A.act(A.rhd(p, q), g) != A.rhd(A.act(p, g), A.act(q, g)):
                    add(ACTION_HOM, (p, q, g))
    return AxiomReport(not bad, bad)
