import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from quandle_monodromy.core import (EQUIVARIANCE, FIXED_POINT, IDEMPOTENCE, AugmentedQuandle,
                                    FiniteQuandle, QuandleHom, StructuralError, achiral_double,
                                    augment, check_augmentation, check_axioms, count_homs,
                                    enumerate_homs, is_hom, is_isomorphism, is_quandle,
                                    load_quandle, orbits, subquandle_generated, trivial_quandle)
from quandle_monodromy.catalog import catalog, resolve
from quandle_monodromy.group_quandles import (build_cyclic_class_quandle,
                                              build_transposition_quandle, conj_op)
from quandle_monodromy.linear import dihedral_quandle
from quandle_monodromy.perm import Permutation, symmetric_group


def test_one_element_quandle_passes():
    assert check_axioms(FiniteQuandle(1, [[0]])).passed


def test_transpositions_of_s3_pass():
    Q = build_transposition_quandle(3)
    assert check_axioms(Q).passed
    assert oracles.axiom_violations(Q.rhd) == []


def test_idempotence_violation_reported_with_witness():
    # 0 ▷ 0 = 1, 1 ▷ 0 = 0; columns are bijections so only idempotence fails
    Q = FiniteQuandle(2, [[1, 1], [0, 0]])
    rep = check_axioms(Q)
    assert not rep.passed
    assert (IDEMPOTENCE, (0,)) in rep.violations


def test_report_matches_oracle_on_random_tables():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        cols = [rng.sample(range(n), n) for _ in range(n)]
        rhd = [[cols[y][x] for y in range(n)] for x in range(n)]
        Q = FiniteQuandle(n, rhd)
        assert check_axioms(Q).passed == (oracles.axiom_violations(rhd) == [])


def test_violations_are_capped():
    n = 6
    rhd = [[(x + 1) % n for _ in range(n)] for x in range(n)]
    rep = check_axioms(FiniteQuandle(n, rhd))
    assert not rep.passed and len(rep.violations) <= 100


@pytest.mark.parametrize("rhd", [[[0, 1]], [[0, 3], [1, 1]], [[0, 0], [0, 1]], "x"])
def test_malformed_tables_are_structural_errors(rhd):
    with pytest.raises(StructuralError):
        FiniteQuandle(2, rhd)


def test_inverse_operation_round_trips():
    for Q in catalog(max_size=30).values():
        for x, y in itertools.product(range(Q.n), repeat=2):
            assert Q.op_inv(Q.op(x, y), y) == x
            assert Q.op(Q.op_inv(x, y), y) == x


def test_json_round_trip(tmp_path):
    Q = resolve("dihedral:5")
    path = tmp_path / "q.json"
    path.write_text(json.dumps(Q.to_json()))
    R = load_quandle(path)
    assert R.rhd == Q.rhd and Q.to_json()["format"] == 1


def test_invalid_json_file_is_structural(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(StructuralError):
        load_quandle(path)


# -- homomorphisms ---------------------------------------------------------------------


@pytest.mark.parametrize("m", [1, 3, 6])
def test_one_element_source_has_m_homs(m):
    assert count_homs(FiniteQuandle(1, [[0]]), trivial_quandle(m)) == m
    assert count_homs(FiniteQuandle(1, [[0]]), resolve(f"dihedral:{max(m, 3)}")) == max(m, 3)


def test_dihedral_three_self_homs():
    Q = dihedral_quandle(3)
    homs = enumerate_homs(Q, Q)
    assert len(homs) == 9
    assert [h.map for h in homs] == oracles.brute_homs(Q.rhd, Q.rhd)


@pytest.mark.parametrize("src,tgt", [("dihedral:3", "transposition:4"), ("transposition:3", "conj:S3"),
                                     ("trivial:2", "dihedral:5"), ("cyclic:3", "dihedral:3"),
                                     ("dihedral:4", "alternating:1:2")])
def test_enumerate_homs_matches_brute_force(src, tgt):
    S, T = resolve(src), resolve(tgt)
    assert [h.map for h in enumerate_homs(S, T)] == oracles.brute_homs(S.rhd, T.rhd)


@pytest.mark.parametrize("src,tgt", [("dihedral:3", "transposition:4"), ("cyclic:3", "conj:S4"),
                                     ("dihedral:4", "alternating:1:2"), ("trivial:2", "dihedral:5")])
def test_homs_also_preserve_inverse_operation(src, tgt):
    # only ▷ is imposed during enumeration
    S, T = resolve(src), resolve(tgt)
    homs = [h.map for h in enumerate_homs(S, T)]
    assert homs
    for f in homs:
        assert all(f[S.op_inv(x, y)] == T.op_inv(f[x], f[y]) for x in range(S.n) for y in range(S.n))


def test_hom_count_invariant_under_relabeling():
    rng = random.Random(3)
    S, T = resolve("transposition:3"), resolve("transposition:4")
    base = count_homs(S, T)
    for _ in range(5):
        p = list(range(T.n))
        rng.shuffle(p)
        q = list(range(S.n))
        rng.shuffle(q)
        assert count_homs(S.relabel(q), T.relabel(p)) == base


def test_hom_composition_and_isomorphism():
    Q = dihedral_quandle(5)
    f = QuandleHom(tuple((2 * x) % 5 for x in range(5)))
    g = QuandleHom(tuple((x + 1) % 5 for x in range(5)))
    assert is_hom(f.map, Q, Q) and is_hom(g.map, Q, Q)
    assert is_hom(f.then(g).map, Q, Q)
    assert is_isomorphism(f.map, Q, Q)
    assert not is_isomorphism((0,) * 5, Q, Q)


# -- generation and orbits ---------------------------------------------------------------


def test_subquandle_of_all_is_all():
    Q = resolve("conj:S3")
    assert subquandle_generated(Q, range(Q.n)) == frozenset(range(Q.n))


def test_three_cycle_generates_only_itself():
    Q = build_cyclic_class_quandle(3)
    c = Q.index("(1 2 3)")
    assert subquandle_generated(Q, [c]) == frozenset([c])
    assert Q.n == 5


def test_two_transpositions_generate_s3_transpositions():
    Q = build_transposition_quandle(3)
    assert subquandle_generated(Q, [Q.index("(1 2)"), Q.index("(2 3)")]) == frozenset(range(3))


@pytest.mark.parametrize("name", ["dihedral:3", "dihedral:4", "dihedral:6", "trivial:4", "conj:S4",
                                  "reduced-alternating:1:4", "genus2-quotient"])
def test_orbits_match_union_find(name):
    Q = resolve(name)
    assert len(orbits(Q)) == oracles.orbit_count(Q.rhd)


# -- achiral double ------------------------------------------------------------------------


def test_achiral_double_of_point_is_trivial_pair():
    D = achiral_double(FiniteQuandle(1, [[0]]))
    assert D.rhd == trivial_quandle(2).rhd


@pytest.mark.parametrize("name", ["dihedral:3", "transposition:4", "alternating:1:2", "cyclic:3"])
def test_achiral_double_properties(name):
    Q = resolve(name)
    D = achiral_double(Q)
    n = Q.n
    assert D.n == 2 * n and check_axioms(D).passed
    for x, y in itertools.product(range(n), repeat=2):
        # second arguments labelled "-" reproduce ▷ on the first sheet
        assert D.op(x, n + y) == Q.op(x, y)
        assert D.op(n + x, n + y) == n + Q.op(x, y)
    for y in range(n):
        assert D.op(y, y) == y


def test_achiral_double_rejects_non_quandle():
    with pytest.raises(ValueError):
        achiral_double(FiniteQuandle(2, [[1, 1], [0, 0]]))


# -- augmentation ----------------------------------------------------------------------------


def _s3_conjugation(act):
    S3 = list(symmetric_group(3))
    return AugmentedQuandle(rhd=conj_op, lhd=lambda x, y: y * x * ~y, ell=lambda q: q, act=act,
                            identity=Permutation.identity(3), elements=tuple(S3)), S3


def test_conjugation_augmentation_passes_on_s3():
    A, S3 = _s3_conjugation(lambda q, g: ~g * q * g)
    assert check_augmentation(A, S3, S3).passed


def test_wrong_sided_action_is_caught():
    # acting on the wrong side keeps q·ell(q) = q but breaks equivariance
    A, S3 = _s3_conjugation(lambda q, g: g * q * ~g)
    rep = check_augmentation(A, S3, S3)
    names = {name for name, _ in rep.violations}
    assert not rep.passed and EQUIVARIANCE in names and FIXED_POINT not in names


@pytest.mark.parametrize("name", ["dihedral:3", "dihedral:5", "trivial:3", "transposition:4", "conj:S3",
                                  "alternating:1:3", "genus2-quotient"])
def test_natural_augmentation(name):
    Q = resolve(name)
    A = augment(Q)
    group = {A.identity}
    frontier = [A.identity]
    gens = [A.ell(q) for q in range(Q.n)]
    while frontier and len(group) < 200:
        g = frontier.pop()
        for h in gens:
            if g * h not in group:
                group.add(g * h)
                frontier.append(g * h)
    assert check_augmentation(A, range(Q.n), list(group)[:40]).passed
    for p, q in itertools.product(range(Q.n), repeat=2):
        assert A.act(p, A.ell(q)) == Q.op(p, q)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(catalog(max_size=12))), st.data())
def test_right_inverse_property(name, data):
    Q = resolve(name)
    x = data.draw(st.integers(0, Q.n - 1))
    y = data.draw(st.integers(0, Q.n - 1))
    assert Q.op_inv(Q.op(x, y), y) == x == Q.op(Q.op_inv(x, y), y)
    assert is_quandle(Q)
