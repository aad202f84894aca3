"""Monodromy tuples: validation, Hurwitz moves and counting invariants.

A monodromy tuple lists the images of an ordered free generating set of
nooses (entry 0 innermost).  The quandle of the punctured base is modelled
as free on these generators, so a tuple *is* a quandle homomorphism from
the free quandle.  "Ordered product" always means
``ell(e_0) * ell(e_1) * ... * ell(e_{m-1})`` in the augmentation group.

Modes:

``cover``
    entries are permutations of ``{1..d}``; carrier ℭ_d, or 𝔗_d when ``simple``.
``braid``
    entries are {1,2,3}-cords in B_d; closure is ``product == Δ^{2k}``.
``lefschetz``
    entries are signed torus slopes; closure over the sphere is
    ``product == identity`` in SL(2, Z).
``quandle``
    an arbitrary :class:`AugmentedQuandle` supplied by the caller.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Any, Iterable, Sequence

from . import braid as br
from .core import (AugmentedQuandle, FiniteQuandle, StructuralError, augment,
                   enumerate_homs, subquandle_generated)
from .group_quandles import (FreeQuandleElement, build_cyclic_class_quandle,
                             build_transposition_quandle, conj_op, conj_op_inv)
from .perm import Permutation, generated_subgroup_is_transitive
from .torus import I, IDENTITY, SignedSlope, achiral_slope_augmented, parse_slope, signed_twist

MODES = ("cover", "braid", "lefschetz", "quandle")
BASES = ("disk", "sphere")
BRAID_LABELS = (1, 2, 3)


@dataclass(frozen=True)
class MonodromyTuple:
    mode: str
    entries: tuple
    base: str = "disk"
    degree: int = 0
    k: int = 1
    simple: bool = False
    achiral: bool = False
    carrier_override: AugmentedQuandle | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise StructuralError(f"unknown mode {self.mode!r}")
        if self.base not in BASES:
            raise StructuralError(f"unknown base {self.base!r}")
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.mode == "quandle" and self.carrier_override is None:
            raise StructuralError("mode 'quandle' needs an explicit carrier")

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def carrier(self) -> AugmentedQuandle:
        if self.carrier_override is not None:
            return self.carrier_override
        if self.mode == "cover":
            return permutation_carrier(self.degree, self.simple)
        if self.mode == "braid":
            return br.lcord_augmented(self.degree)
        return achiral_slope_augmented()

    def with_entries(self, entries: Iterable[Any]) -> MonodromyTuple:
        return replace(self, entries=tuple(entries))

    def key(self) -> tuple:
        kf = self.carrier.key
        return tuple(kf(e) for e in self.entries)

    def product(self) -> Any:
        return self.carrier.product(self.entries)


@lru_cache(maxsize=None)
def permutation_carrier(d: int, simple: bool = False) -> AugmentedQuandle:
    """ℭ_d (or 𝔗_d) augmented in S_d by inclusion, S_d acting by conjugation."""
    if d < 2:
        raise StructuralError("branched covers need d >= 2")
    Q = build_transposition_quandle(d) if simple else build_cyclic_class_quandle(d)
    return AugmentedQuandle(
        rhd=conj_op, lhd=conj_op_inv, ell=lambda q: q,
        act=lambda q, g: ~g * q * g, identity=Permutation.identity(d),
        elements=Q.embedding[0], name=("transposition" if simple else "cyclic") + f":{d}")


@lru_cache(maxsize=None)
def _carrier_table(d: int, simple: bool) -> FiniteQuandle:
    return build_transposition_quandle(d) if simple else build_cyclic_class_quandle(d)


# -- validation ---------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Any = None) -> None:
        self.checks.append(Check(name, bool(passed), witness))

    def to_json(self) -> dict:
        return {"format": 1, "valid": self.valid,
                "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness}
                           for c in self.checks]}


def validate_branched_cover(entries: Sequence[Permutation], d: int, base: str = "disk",
                            simple: bool = False, require_connected: bool = False) -> ValidationReport:
    """Membership in ℭ_d / 𝔗_d, closure over the sphere, optional transitivity."""
    for i, p in enumerate(entries):
        if not isinstance(p, Permutation) or p.degree != d:
            raise StructuralError(f"entry {i} is not a permutation of 1..{d}")
        if not (p.is_transposition() if simple else p.is_cyclic()):
            kind = "transposition" if simple else "nontrivial cyclic permutation"
            raise StructuralError(f"entry {i} = {p} is not a {kind}")
    rep = ValidationReport()
    rep.add("membership", True)
    if base == "sphere":
        prod = Permutation.identity(d)
        for p in entries:
            prod = prod * p
        rep.add("sphere-closure", prod.is_identity(), str(prod))
    if require_connected:
        rep.add("transitive", generated_subgroup_is_transitive(list(entries), d))
    return rep


def validate_braid_monodromy(entries: Sequence[br.LCord], n: int, k: int = 1,
                             projective: bool = False) -> ValidationReport:
    """Labels in {1,2,3}, conjugacy witnesses, and ``product == Δ^{2k}``."""
    for i, c in enumerate(entries):
        if not isinstance(c, br.LCord) or c.n != n:
            raise StructuralError(f"entry {i} is not an L-cord in B_{n}")
        if c.label == 0 or abs(c.label) > 3:
            raise StructuralError(f"entry {i} has label {c.label} outside ±{{1,2,3}}")
    rep = ValidationReport()
    bad_labels = [i for i, c in enumerate(entries) if c.label not in BRAID_LABELS]
    rep.add("labels", not bad_labels, bad_labels or None)
    bad_witness = [i for i, c in enumerate(entries) if not (c.cord.sign == 1 and c.witness_ok())]
    rep.add("conjugate-witness", not bad_witness, bad_witness or None)
    prod = br.Braid(n)
    for c in entries:
        prod = prod * br.augment_cord(c)
    # full_twist is Δ², so Δ^{2k} is its k-th power
    rep.add("closure", prod == br.full_twist(n) ** k, str(prod))
    if projective:
        rep.add("projective", k == 1, k)
    return rep


def validate_lefschetz(entries: Sequence[SignedSlope], base: str = "disk",
                       achiral: bool = False) -> ValidationReport:
    """Chirality and, over the sphere, ``prod M_{q_i}^{s_i} == identity``."""
    for i, q in enumerate(entries):
        if not isinstance(q, SignedSlope):
            raise StructuralError(f"entry {i} is not a signed slope")
        if q.slope is I:
            raise StructuralError(f"entry {i} is the contractible class")
    rep = ValidationReport()
    if not achiral:
        neg = [i for i, q in enumerate(entries) if q.sign != 1]
        rep.add("chirality", not neg, neg or None)
    if base == "sphere":
        prod = IDENTITY
        for q in entries:
            prod = prod * signed_twist(q)
        rep.add("sphere-closure", prod == IDENTITY, prod.rows)
    return rep


def validate(t: MonodromyTuple, require_connected: bool = False,
             projective: bool = False) -> ValidationReport:
    if t.mode == "cover":
        return validate_branched_cover(t.entries, t.degree, t.base, t.simple, require_connected)
    if t.mode == "braid":
        return validate_braid_monodromy(t.entries, t.degree, t.k, projective)
    if t.mode == "lefschetz":
        return validate_lefschetz(t.entries, t.base, t.achiral)
    rep = ValidationReport()
    if t.carrier.elements is not None:
        keys = {t.carrier.key(e) for e in t.carrier.elements}
        missing = [i for i, e in enumerate(t.entries) if t.carrier.key(e) not in keys]
        if missing:
            raise StructuralError(f"entries {missing} are not in the carrier")
    rep.add("membership", True)
    if t.base == "sphere":
        prod = t.product()
        rep.add("sphere-closure", prod == t.carrier.identity, str(prod))
    return rep


# -- Hurwitz moves -------------------------------------------------------------


def hurwitz_move(t: MonodromyTuple, i: int, direction: str = "right") -> MonodromyTuple:
    """Right: ``(.., a, b, ..) -> (.., b, a ▷ b, ..)``; left is its inverse: ``(.., b ⊵ a, a, ..)``."""
    if not 0 <= i < len(t) - 1:
        raise IndexError(f"position {i} out of range for a tuple of length {len(t)}")
    C = t.carrier
    e = list(t.entries)
    a, b = e[i], e[i + 1]
    if direction == "right":
        e[i], e[i + 1] = b, C.rhd(a, b)
    elif direction == "left":
        e[i], e[i + 1] = C.lhd(b, a), a
    else:
        raise ValueError("direction must be 'left' or 'right'")
    return t.with_entries(e)


def rotate(t: MonodromyTuple) -> MonodromyTuple:
    """Cyclic rotation ``(a_0, a_1, ..) -> (a_1, .., a_0)``."""
    if len(t) < 2:
        return t
    return t.with_entries(t.entries[1:] + t.entries[:1])


def conjugate_tuple(t: MonodromyTuple, g: Any) -> MonodromyTuple:
    C = t.carrier
    return t.with_entries(C.act(q, g) for q in t.entries)


@dataclass
class HurwitzOrbit:
    members: list[MonodromyTuple]
    truncated: bool

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def keys(self) -> set[tuple]:
        return {m.key() for m in self.members}


def hurwitz_orbit(t: MonodromyTuple, max_size: int = 10_000, rotations: bool = False,
                  conjugation: bool = False) -> HurwitzOrbit:
    """Breadth-first closure under Hurwitz moves (and optionally rotation / global conjugation).

    Global conjugation uses the group generated by ``ell`` of the carrier and
    needs a finite carrier.  Stops with ``truncated=True`` once ``max_size``
    tuples have been found.
    """
    C = t.carrier
    conjugators: list = []
    if conjugation:
        if C.elements is None:
            raise ValueError("global conjugation needs a finite carrier")
        conjugators = [C.ell(q) for q in C.elements]
    seen = {t.key(): t}
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        nbrs = []
        for i in range(len(cur) - 1):
            nbrs.append(hurwitz_move(cur, i, "right"))
            nbrs.append(hurwitz_move(cur, i, "left"))
        if rotations:
            nbrs.append(rotate(cur))
        nbrs.extend(conjugate_tuple(cur, g) for g in conjugators)
        for nb in nbrs:
            key = nb.key()
            if key in seen:
                continue
            if len(seen) >= max_size:
                return HurwitzOrbit(list(seen.values()), True)
            seen[key] = nb
            queue.append(nb)
    return HurwitzOrbit(list(seen.values()), False)


# -- counting invariants ---------------------------------------------------------


def _as_augmented(target: FiniteQuandle | AugmentedQuandle) -> AugmentedQuandle:
    A = augment(target) if isinstance(target, FiniteQuandle) else target
    if A.elements is None:
        raise ValueError("counting needs a finite target")
    return A


def _closure_required(t: MonodromyTuple) -> bool:
    return t.base == "sphere" and t.mode != "braid"


def counting_invariant(t: MonodromyTuple, target: FiniteQuandle | AugmentedQuandle) -> int:
    """Number of homs from the free quandle on ``len(t)`` generators to ``target``
    that pass the closure condition of t's mode.

    Over the sphere (cover, lefschetz and quandle modes) the ordered product
    of augmentations must be the identity; otherwise every assignment counts.
    Braid-mode closure (Δ^{2k}) has no analogue in a finite target and is
    not imposed.
    """
    A = _as_augmented(target)
    m = len(t)
    if not _closure_required(t):
        return len(A.elements) ** m
    return _closed_count(A, m)


@lru_cache(maxsize=1024)
def _closed_count(A: AugmentedQuandle, m: int) -> int:
    # DP over partial products; only the distribution of products matters
    states: dict[Any, int] = {A.identity: 1}
    ells = [A.ell(q) for q in A.elements]
    for _ in range(m):
        nxt: dict[Any, int] = {}
        for g, c in states.items():
            for h in ells:
                gh = g * h
                nxt[gh] = nxt.get(gh, 0) + c
        states = nxt
    return states.get(A.identity, 0)


def carrier_table(t: MonodromyTuple) -> tuple[FiniteQuandle, list[int]]:
    """Finite table of t's carrier and the indices of t's entries in it."""
    if t.mode == "cover":
        Q = _carrier_table(t.degree, t.simple)
        pos = {p: i for i, p in enumerate(Q.embedding[0])}
        return Q, [pos[p] for p in t.entries]
    C = t.carrier
    if C.elements is None:
        raise ValueError("carrier is not finite")
    elems = list(C.elements)
    keys = [C.key(q) for q in elems]
    pos = {k: i for i, k in enumerate(keys)}
    rhd = [[pos[C.key(C.rhd(x, y))] for y in elems] for x in elems]
    return FiniteQuandle(len(elems), rhd), [pos[C.key(q)] for q in t.entries]


@lru_cache(maxsize=4096)
def _sub_homs(Q: FiniteQuandle, sub: frozenset, Y: FiniteQuandle) -> tuple[tuple[int, ...], list]:
    elems = sorted(sub)
    return tuple(elems), [h.map for h in enumerate_homs(Q.restrict(elems), Y)]


def coloring_invariant(t: MonodromyTuple, target: FiniteQuandle) -> int:
    """Homs ``f`` from the subquandle generated by t's entries to ``target``
    such that ``f(t)`` passes the closure condition of t's mode.

    Hurwitz moves preserve the generated subquandle and commute with ``f``,
    so this is constant on Hurwitz orbits.
    """
    Q, idx = carrier_table(t)
    sub = subquandle_generated(Q, idx)
    elems, homs = _sub_homs(Q, sub, target)
    where = {x: i for i, x in enumerate(elems)}
    cols = [where[x] for x in idx]
    if not _closure_required(t):
        return len(homs)
    A = augment(target)
    count = 0
    for f in homs:
        if A.product(f[c] for c in cols) == A.identity:
            count += 1
    return count


# -- tuples as homomorphisms of the free quandle ----------------------------------


@dataclass(frozen=True)
class FreeQuandleHom:
    """The hom from the free quandle on generators x_1..x_m determined by the images of the x_i.

    ``w^-1 x_i w`` maps to ``images[i-1] · ell(w)``, where ``ell`` on a free
    group word multiplies the augmentations of the generator images.
    """

    carrier: AugmentedQuandle
    images: tuple
    template: MonodromyTuple | None = None

    def group_image(self, word: Sequence[int]) -> Any:
        A = self.carrier
        g = A.identity
        for a in word:
            h = A.ell(self.images[abs(a) - 1])
            g = g * (h if a > 0 else ~h)
        return g

    def __call__(self, x: FreeQuandleElement) -> Any:
        if not 1 <= x.generator <= len(self.images):
            raise ValueError(f"generator x{x.generator} outside 1..{len(self.images)}")
        return self.carrier.act(self.images[x.generator - 1], self.group_image(x.conjugator))


def hom_from_tuple(t: MonodromyTuple) -> FreeQuandleHom:
    return FreeQuandleHom(t.carrier, t.entries, t)


def tuple_from_hom(h: FreeQuandleHom) -> MonodromyTuple:
    if h.template is None:
        return MonodromyTuple("quandle", h.images, carrier_override=h.carrier)
    return h.template.with_entries(h.images)


# -- file format ---------------------------------------------------------------------


def _parse_entry(mode: str, raw: Any, n: int) -> Any:
    if mode == "cover":
        if not isinstance(raw, str):
            raise StructuralError(f"cover entries are cycle strings, got {raw!r}")
        return Permutation.parse(raw, n)
    if mode == "braid":
        if not isinstance(raw, dict):
            raise StructuralError(f"braid entries are objects, got {raw!r}")
        label = int(raw.get("label", 1))
        if "generator" in raw:
            conj = br.Braid.parse(raw.get("conjugator", ""), n)
            explicit = br.Braid.parse(raw["braid"], n) if "braid" in raw else None
            cord = br.Cord(conj, int(raw["generator"]), braid=explicit)
        elif "braid" in raw:
            cord = br.Cord.from_braid(br.Braid.parse(raw["braid"], n))
        else:
            raise StructuralError("braid entry needs 'generator' (and 'conjugator') or 'braid'")
        return br.LCord(cord, label)
    if mode == "lefschetz":
        if isinstance(raw, str):
            slope, sign = parse_slope(raw), 1
        elif isinstance(raw, dict):
            slope, sign = parse_slope(raw["slope"]), int(raw.get("sign", 1))
        else:
            raise StructuralError(f"bad lefschetz entry {raw!r}")
        if slope is I:
            raise StructuralError("the contractible class is not a vanishing cycle")
        return SignedSlope(slope, sign)
    raise StructuralError(f"mode {mode!r} has no file format")


def _format_entry(mode: str, e: Any) -> Any:
    if mode == "cover":
        return str(e)
    if mode == "braid":
        c = e.cord
        return {"conjugator": str(c.conjugator), "generator": c.generator,
                "label": e.label, "braid": str(c.braid)}
    return {"slope": str(e.slope), "sign": e.sign}


def tuple_from_json(data: dict) -> MonodromyTuple:
    try:
        mode = data["mode"]
        n = int(data["d_or_strands"])
        raw = data["entries"]
    except (KeyError, TypeError, ValueError):
        raise StructuralError("tuple JSON needs 'mode', 'd_or_strands' and 'entries'") from None
    if mode not in ("cover", "braid", "lefschetz"):
        raise StructuralError(f"unknown mode {mode!r}")
    try:
        entries = tuple(_parse_entry(mode, r, n) for r in raw)
    except StructuralError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise StructuralError(f"bad entry: {exc}") from None
    return MonodromyTuple(mode, entries, base=data.get("base", "disk"), degree=n,
                          k=int(data.get("k", 1)), simple=bool(data.get("simple", False)),
                          achiral=bool(data.get("achiral", False)))


def tuple_to_json(t: MonodromyTuple) -> dict:
    out = {"format": 1, "mode": t.mode, "base": t.base, "d_or_strands": t.degree,
           "entries": [_format_entry(t.mode, e) for e in t.entries]}
    if t.mode == "braid":
        out["k"] = t.k
    if t.mode == "cover":
        out["simple"] = t.simple
    if t.mode == "lefschetz":
        out["achiral"] = t.achiral
    return out


def load_tuple(path: str | Path) -> MonodromyTuple:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path}: invalid JSON ({exc})") from None
    return tuple_from_json(data)

