"""Built-in quandles by name.

Grammar::

    trivial:<k>                    k-element trivial quandle
    conj:S<n>                      the symmetric group S_n under conjugation
    cyclic:<d>                     nontrivial cyclic permutations of 1..d
    transposition:<d>              transpositions of 1..d
    dihedral:<n>                   Z/n with x ▷ y = 2y - x
    alexander:<m>:<T>              (Z/m)^k with x ▷ y = T(x - y) + y; T is a JSON
                                   matrix such as [[1,1],[0,1]] or a scalar
    alternating:<g>:<m>            (Z/m)^{2g} with the intersection form
    reduced-alternating:<g>:<m>    the same up to sign
    torus-dehn                     Dehn quandle of the torus (infinite)
    genus2-quotient                17-element genus-two quotient
    achiral:<name>                 achiral double of another catalog quandle
"""

from __future__ import annotations

import json
import re

from .core import FiniteQuandle, StructuralError, achiral_double, trivial_quandle
from .group_quandles import (build_cyclic_class_quandle, build_genus2_quotient,
                             build_symmetric_conjugation_quandle, build_transposition_quandle)
from .linear import AlexanderQuandle, RingSpec, dihedral_quandle, homology_quandle

TORUS_DEHN = "torus-dehn"

# Finite instances exercised by the catalog listing and the axiom suite.
DEFAULT_CATALOG = (
    "trivial:1", "trivial:2", "trivial:3", "trivial:4",
    "conj:S3", "conj:S4",
    "cyclic:2", "cyclic:3", "cyclic:4",
    "transposition:2", "transposition:3", "transposition:4", "transposition:5",
    "transposition:6",
    "dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6", "dihedral:7",
    "alexander:5:2", "alexander:7:3", "alexander:3:[[1,1],[0,1]]", "alexander:2:[[0,1],[1,1]]",
    "alternating:1:2", "alternating:1:3", "alternating:1:5",
    "reduced-alternating:1:3", "reduced-alternating:1:4", "reduced-alternating:1:5",
    "genus2-quotient",
    "achiral:trivial:2", "achiral:dihedral:3", "achiral:transposition:4",
    "achiral:reduced-alternating:1:3",
)


class CatalogError(StructuralError):
    pass


def _int(s: str, what: str) -> int:
    if not re.fullmatch(r"\d+", s):
        raise CatalogError(f"{what} must be a non-negative integer, got {s!r}")
    return int(s)


def resolve(name: str) -> FiniteQuandle:
    """Build the finite quandle named by ``name``."""
    head, _, rest = name.partition(":")
    try:
        if head == "trivial":
            return trivial_quandle(_int(rest, "k"))
        if head == "conj":
            m = re.fullmatch(r"S(\d+)", rest)
            if not m:
                raise CatalogError("use conj:S<n>")
            return build_symmetric_conjugation_quandle(int(m.group(1)))
        if head == "cyclic":
            return build_cyclic_class_quandle(_int(rest, "d"))
        if head == "transposition":
            return build_transposition_quandle(_int(rest, "d"))
        if head == "dihedral":
            return dihedral_quandle(_int(rest, "n"))
        if head == "alexander":
            m_s, _, t_s = rest.partition(":")
            T = json.loads(t_s)
            if isinstance(T, int):
                T = [[T]]
            return AlexanderQuandle(T, RingSpec(_int(m_s, "m"))).to_finite()
        if head in ("alternating", "reduced-alternating"):
            g_s, _, m_s = rest.partition(":")
            m = _int(m_s, "m")
            if m == 0:
                raise CatalogError("only finite rings can be tabulated")
            Q = homology_quandle(_int(g_s, "g"), RingSpec(m), reduced=head.startswith("reduced"))
            return Q.to_finite()
        if head == "genus2-quotient" and not rest:
            return build_genus2_quotient()
        if head == "achiral":
            return achiral_double(resolve(rest))
        if head == TORUS_DEHN:
            raise CatalogError("torus-dehn is infinite; only sampled checks are available")
    except CatalogError:
        raise
    except (ValueError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot build {name!r}: {exc}") from None
    raise CatalogError(f"unknown quandle name {name!r}")


def catalog(max_size: int | None = None) -> dict[str, FiniteQuandle]:
    out = {}
    for name in DEFAULT_CATALOG:
        Q = resolve(name)
        if max_size is None or Q.n <= max_size:
            out[name] = Q
    return out
