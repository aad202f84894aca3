"""Finite and infinite quandles, monodromy tuples and quandle homology."""

from .core import (AugmentedQuandle, AxiomReport, FiniteQuandle, QuandleHom, StructuralError,
                   achiral_double, augment, check_axioms, count_homs, enumerate_homs,
                   is_quandle, load_quandle, subquandle_generated, trivial_quandle)
from .catalog import catalog, resolve
from .homology import CapacityError, homology, smith_normal_form
from .monodromy import (MonodromyTuple, coloring_invariant, counting_invariant, hurwitz_move,
                        hurwitz_orbit, load_tuple, validate)

__version__ = "0.1.0"

__all__ = [
    "AugmentedQuandle", "AxiomReport", "CapacityError", "FiniteQuandle", "MonodromyTuple",
    "QuandleHom", "StructuralError", "achiral_double", "augment", "catalog", "check_axioms",
    "coloring_invariant", "count_homs", "counting_invariant", "enumerate_homs", "homology",
    "hurwitz_move", "hurwitz_orbit", "is_quandle", "load_quandle", "load_tuple", "resolve",
    "smith_normal_form", "subquandle_generated", "trivial_quandle", "validate",
]
