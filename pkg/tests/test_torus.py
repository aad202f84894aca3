import itertools
import math
import random

import pytest

import oracles
from quandle_monodromy.core import check_augmentation
from quandle_monodromy.torus import (CONJUGATION_EXPONENT, I, IDENTITY, SignedSlope, SL2Matrix, Slope,
                                     achiral_slope_augmented, check_slope_axioms,
                                     matrix_act_on_slope, parse_slope, signed_twist,
                                     slope_from_matrix, slope_op, slope_op_inv, slopes_up_to,
                                     torus_dehn_augmented, twist_matrix)

A = SL2Matrix.from_rows([[1, 1], [0, 1]])
B = SL2Matrix.from_rows([[1, 0], [-1, 1]])


def S(text):
    return parse_slope(text)


def test_slope_canonical_form():
    assert Slope(-1, 2) == Slope(1, -2) and str(Slope(-1, 2)) == "-2/1"
    assert Slope(0, -1) == Slope(0, 1) and str(Slope(0, 1)) == "1/0"
    with pytest.raises(ValueError):
        Slope(2, 4)
    assert S("I") is I and S(" 3 / -2 ") == Slope(2, -3)


def test_contractible_rules():
    for q in [I, *slopes_up_to(3)]:
        assert slope_op(q, I) == q and slope_op_inv(q, I) == q
        assert slope_op(I, q) is I and slope_op_inv(I, q) is I


def test_example_operation():
    assert slope_op(S("0/1"), S("1/0")) == S("1/1")


def _rational_oracle(p, q, sign):
    """The printed rational formula, evaluated on raw numerators and denominators."""
    u, v, x, y = p.x, p.y, q.x, q.y
    num = v - sign * v * x * y + sign * u * y * y
    den = u + sign * u * x * y - sign * v * x * x
    g = math.gcd(num, den)
    return (num // g, den // g) if den > 0 or (den == 0 and num > 0) else (-num // g, -den // g)


def test_operation_matches_printed_formula():
    for p, q in itertools.product(slopes_up_to(4), repeat=2):
        r, s = slope_op(p, q), slope_op_inv(p, q)
        assert (r.y, r.x) == _rational_oracle(p, q, 1)
        assert (s.y, s.x) == _rational_oracle(p, q, -1)


def test_axioms_on_small_height_and_sample():
    rep = check_slope_axioms(4, sample=300, sample_height=40, seed=1)
    assert rep.passed, rep.violations[:3]


# -- matrices -----------------------------------------------------------------------------


def test_standard_twist_matrices():
    assert twist_matrix(S("0/1")) == A
    assert twist_matrix(S("1/0")) == B
    assert twist_matrix(I) == IDENTITY


def test_twist_matrices_have_trace_two():
    for q in slopes_up_to(6):
        M = twist_matrix(q)
        assert M.trace == 2 and M.a * M.d - M.b * M.c == 1


def test_slope_from_matrix_inverts_twist_matrix():
    assert slope_from_matrix(A) == S("0/1")
    assert slope_from_matrix(IDENTITY) is I
    for q in slopes_up_to(7):
        assert slope_from_matrix(twist_matrix(q)) == q
    assert slope_from_matrix(SL2Matrix(0, -1, 1, 0)) is None
    assert slope_from_matrix(SL2Matrix(1, 0, 1, 1)) is None


def test_shape_verdict_for_2_1_minus1_0():
    M = [[2, 1], [-1, 0]]
    # independent search over coprime (x, y) for the twist shape
    hits = [(x, y) for x in range(0, 6) for y in range(-6, 7)
            if math.gcd(x, y) == 1 and [[1 - x * y, x * x], [-y * y, 1 + x * y]] == M]
    assert hits == [(1, -1)]
    assert slope_from_matrix(SL2Matrix.from_rows(M)) == S("-1/1")


def test_matrix_action():
    assert matrix_act_on_slope(S("1/0"), A) == S("1/1")
    for q in slopes_up_to(3):
        assert matrix_act_on_slope(q, IDENTITY) == q
    assert matrix_act_on_slope(I, A) is I


def test_matrix_group_laws():
    rng = random.Random(5)
    mats = [A, B, ~A, ~B]
    for _ in range(50):
        g = IDENTITY
        for _ in range(rng.randint(0, 6)):
            g = g * rng.choice(mats)
        assert (g * ~g) == IDENTITY
        assert g.rows == oracles.matmul(g.rows, IDENTITY.rows)
    assert (A ** 3).rows == oracles.matpow(A.rows, 3) and A ** -2 == ~A * ~A


@pytest.mark.parametrize("eps,holds", [(-1, True), (1, False)])
def test_conjugation_exponent(eps, holds):
    slopes = [I, *slopes_up_to(5)]
    ok = all(twist_matrix(slope_op(p, q)) == twist_matrix(q) ** eps * twist_matrix(p) * twist_matrix(q) ** -eps
             for p, q in itertools.product(slopes, repeat=2))
    assert ok is holds
    assert CONJUGATION_EXPONENT == -1


# -- augmentation ----------------------------------------------------------------------------


def test_torus_augmentation_laws():
    Aug = torus_dehn_augmented()
    sample = [I, *slopes_up_to(5)]
    rep = check_augmentation(Aug, sample, [A, B, ~A, A * B])
    assert rep.passed, rep.violations[:3]
    for p, q in itertools.product(slopes_up_to(4), repeat=2):
        assert Aug.act(p, Aug.ell(q)) == slope_op(p, q)


def test_achiral_augmentation_laws():
    Aug = achiral_slope_augmented()
    sample = [SignedSlope(q, s) for q in slopes_up_to(3) for s in (1, -1)]
    assert check_augmentation(Aug, sample, [A, B, ~B]).passed
    for p, q in itertools.product(sample, repeat=2):
        assert Aug.act(p, Aug.ell(q)) == Aug.rhd(p, q)
        assert Aug.lhd(Aug.rhd(p, q), q) == p
    p, q = SignedSlope(S("0/1")), SignedSlope(S("1/0"))
    assert Aug.rhd(p, q).slope == slope_op(p.slope, q.slope)
    assert signed_twist(SignedSlope(S("0/1"), -1)) == ~A
