import itertools

import pytest

from quandle_monodromy.core import check_axioms
from quandle_monodromy.linear import (AlexanderQuandle, AlternatingForm, RingSpec, alexander_op,
                                      alternating_op, alternating_op_inv, dihedral_quandle,
                                      homology_quandle, reduce_mod_negation, slope_to_homology)
from quandle_monodromy.torus import I, Slope, slope_op, slopes_up_to


def test_identity_T_is_trivial():
    Q = AlexanderQuandle([[1, 0], [0, 1]], RingSpec(3))
    els = Q.elements()
    assert all(Q.op(x, y) == x for x in els for y in els)


def test_scalar_minus_one_mod_three():
    assert alexander_op((1,), (0,), ((-1,),), RingSpec(3)) == (2,)


def test_alexander_fixes_diagonal():
    Q = AlexanderQuandle([[2]], RingSpec(5))
    for y in Q.elements():
        assert Q.op(y, y) == y


def test_non_invertible_T_rejected():
    with pytest.raises(ValueError):
        AlexanderQuandle([[2]], RingSpec(4))
    with pytest.raises(ValueError):
        AlexanderQuandle([[1, 1], [1, 1]], RingSpec(0))


@pytest.mark.parametrize("T,m", [([[2]], 5), ([[3]], 7), ([[1, 1], [0, 1]], 3), ([[0, 1], [1, 1]], 2),
                                 ([[2, 1], [1, 1]], 4)])
def test_alexander_quandles_pass(T, m):
    Q = AlexanderQuandle(T, RingSpec(m))
    F = Q.to_finite()
    assert check_axioms(F).passed
    for x, y in itertools.product(Q.elements(), repeat=2):
        assert Q.op_inv(Q.op(x, y), y) == x


def test_dihedral_is_alexander_minus_one():
    for n in range(3, 8):
        assert dihedral_quandle(n).rhd == AlexanderQuandle([[-1]], RingSpec(n)).to_finite().rhd


# -- alternating forms -----------------------------------------------------------------------


def test_form_validation():
    with pytest.raises(ValueError):
        AlternatingForm(((1, 0), (0, 0)))
    with pytest.raises(ValueError):
        AlternatingForm(((0, 1), (1, 0)))
    # over Z/2 symmetric and antisymmetric agree
    AlternatingForm(((0, 1), (1, 0)), RingSpec(2))


def test_form_json_round_trip():
    f = AlternatingForm.symplectic(2, RingSpec(5))
    assert AlternatingForm.from_json(f.to_json()) == f


def test_alternating_op_examples():
    f = AlternatingForm.symplectic(1)
    assert f.pair((1, 0), (0, 1)) == 1
    assert alternating_op((1, 0), (0, 1), f) == (1, 1)
    assert alternating_op((3, -2), (3, -2), f) == (3, -2)
    assert alternating_op_inv((1, 1), (0, 1), f) == (1, 0)


def test_expanded_self_distributivity_identity_mod_three():
    f = AlternatingForm.symplectic(1, RingSpec(3))
    vecs = list(itertools.product(range(3), repeat=2))
    count = 0
    for x, y, z in itertools.product(vecs, repeat=3):
        lhs = alternating_op(alternating_op(x, y, f), z, f)
        rhs = alternating_op(alternating_op(x, z, f), alternating_op(y, z, f), f)
        p = f.pair
        expanded = tuple((x[i] + p(x, y) * y[i] + p(x, z) * z[i] + p(x, y) * p(y, z) * z[i]) % 3
                         for i in range(2))
        assert lhs == rhs == expanded
        count += 1
    assert count == 729


def test_reduce_mod_negation():
    assert reduce_mod_negation((1, 0)) == (1, 0)
    assert reduce_mod_negation((-1, 2)) == (1, -2)
    assert reduce_mod_negation((0, 0)) == (0, 0)
    assert reduce_mod_negation((0, -3)) == (0, 3)
    assert reduce_mod_negation((2, 1), RingSpec(3)) == reduce_mod_negation((1, 2), RingSpec(3))


def test_homology_quandles_mod_three():
    HQ = homology_quandle(1, RingSpec(3)).to_finite()
    HD = homology_quandle(1, RingSpec(3), reduced=True)
    assert HQ.n == 9 and check_axioms(HQ).passed
    els = HD.elements()
    assert len(els) == 5 and check_axioms(HD.to_finite()).passed


def test_reduced_operation_is_well_defined():
    HQ = homology_quandle(1, RingSpec(5))
    HD = homology_quandle(1, RingSpec(5), reduced=True)
    neg = lambda v: tuple((-a) % 5 for a in v)
    for x, y in itertools.product(HQ.elements(), repeat=2):
        assert HQ.op(neg(x), y) == neg(HQ.op(x, y))
        assert HQ.op(x, neg(y)) == HQ.op(x, y)
        assert HD.op(HD.element(x), HD.element(y)) == HD.element(HQ.op(x, y))


def test_genus_two_homology_quandle_passes():
    assert check_axioms(homology_quandle(2, RingSpec(2)).to_finite()).passed


# -- slopes into homology -----------------------------------------------------------------------


def test_slope_to_homology_examples():
    assert slope_to_homology(I) == (0, 0)
    assert slope_to_homology(Slope(1, 0)) == (1, 0)
    assert slope_to_homology(Slope(0, 1)) == (0, 1)


def test_slope_to_homology_is_an_injective_hom():
    HD = homology_quandle(1, reduced=True)
    slopes = slopes_up_to(5)
    images = {slope_to_homology(s) for s in slopes}
    assert len(images) == len(slopes)
    for a, b in itertools.product(slopes, repeat=2):
        assert slope_to_homology(slope_op(a, b)) == HD.op(slope_to_homology(a), slope_to_homology(b))
