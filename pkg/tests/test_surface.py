from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from sasaki5.catalog import catalog_surface
from sasaki5.surface import (FAMILY_BASES, DataNotEncoded, QDivisor, SurfaceError, WeilClass,
                             anticanonical_index, blow_up, d_invariant, family_name, family_surface,
                             genus, h2_restriction_index, hirzebruch, intersect, is_ample,
                             is_log_del_pezzo, local_classes, non_generated_points,
                             parse_family_name, pic_lattice, projective_plane, quadric,
                             self_intersection_K, surface_from_name, surface_from_spec, weighted_p2,
                             weil_group, weil_mod_pic)
from sasaki5.abelian import FiniteAbelianGroup


@pytest.mark.parametrize("n, D, g", [(3, (2, 6), 2), (2, (2, 5), 2), (5, (2, 10), 4)])
def test_genus_on_hirzebruch(n, D, g):
    S = hirzebruch(n)
    assert genus(S, S.cls(*D)) == g


@pytest.mark.parametrize("n, residual, value", [(3, (F(2, 5), F(1, 5)), -1), (5, (F(2, 3), F(1, 3)), -3)])
def test_residual_classes_fail_on_E(n, residual, value):
    S = hirzebruch(n)
    cert = is_ample(S, residual)
    assert not cert.ample
    assert cert.violating_curve == "E"
    assert cert.violating_value == value


def test_ample_class_accepted():
    S = hirzebruch(1)
    cert = is_ample(S, (1, 2))
    assert cert.ample and cert.self_intersection == 3


@pytest.mark.parametrize("name, K2", [("P^2", 9), ("P^1xP^1", 8), ("F_2", 8), ("Q", 8), ("S_5", 5),
                                      ("P(1,2,3)", 6), ("P(1,1,3)", F(25, 3)), ("B_{3111}P^2", 3),
                                      ("B_{22}P^1xP^1", 4), ("B_{4}Q", 4)])
def test_canonical_degree(name, K2):
    assert self_intersection_K(surface_from_name(name)) == K2


@pytest.mark.parametrize("name, wp, d", [("Q", [2], 4), ("P(1,2,3)", [6], 6), ("S_5", [5], 5),
                                         ("B_{3111}P^2", [3], 1), ("B_{22}P^1xP^1", [2, 2], 2),
                                         ("B_{33}P^2", [3, 3], 3)])
def test_weil_mod_pic_and_index(name, wp, d):
    S = surface_from_name(name)
    assert weil_mod_pic(S) == FiniteAbelianGroup.from_orders(wp)
    assert d_invariant(S) == d
    assert h2_restriction_index(S, S.K() * -1) == d


def test_b3111_canonical_class():
    S = surface_from_name("B_{3111}P^2")
    assert S.canonical == (-3, 3, 1, 1, 1)
    assert weil_group(S) == FiniteAbelianGroup(5)


def test_log_del_pezzo():
    assert is_log_del_pezzo(projective_plane()).ample
    assert is_log_del_pezzo(hirzebruch(1)).ample
    assert not is_log_del_pezzo(hirzebruch(2)).ample
    S = projective_plane()
    assert is_log_del_pezzo(S, QDivisor.of((S.cls(1), F(1, 2)))).ample
    assert not is_log_del_pezzo(S, QDivisor.of((S.cls(2), F(3, 4)), (S.cls(2), F(3, 4)))).ample
    with pytest.raises(SurfaceError):
        is_log_del_pezzo(S, QDivisor.of((S.cls(1), F(1))))


def test_weighted_p2_local_data():
    S = weighted_p2(1, 1, 3)
    assert [p.order for p in S.sing_points] == [3]
    assert genus(S, S.cls(6)) == 2
    assert genus(weighted_p2(1, 1, 5), WeilClass((10,))) == 4
    with pytest.raises(SurfaceError):
        weighted_p2(2, 4, 1)


def test_blow_up_local_classes():
    S = blow_up(projective_plane(), (3, 2))
    names = [p.name for p in S.sing_points]
    assert names == ["q_E1", "q_E2"]
    assert local_classes(S, S.cls(0, 1, 1)) == (1, 1)
    assert [p.name for p in non_generated_points(S, S.cls(1, 3, 1))] == ["q_E1"]
    assert S.pairing[1][1] == F(-1, 3)


def test_pic_lattice_is_cartier():
    S = surface_from_name("B_{4}Q")
    for v in pic_lattice(S):
        assert local_classes(S, v) == (0, 0)


def test_family_names_roundtrip():
    for base in FAMILY_BASES:
        for ws in [(), (1,), (2, 1), (3, 3, 1)]:
            name = family_name(base, ws)
            assert parse_family_name(name) == (base, tuple(sorted(ws, reverse=True)))
    assert family_name("P2", (12, 1)) == "B_{12,1}P^2"


def test_surface_from_spec_variants():
    assert surface_from_spec({"kind": "Hirzebruch", "n": 3}).name == "F_3"
    S = surface_from_spec({"kind": "WeightedBlowup", "base": {"kind": "ProjectivePlane"}, "weights": [3, 1]})
    assert S.name == "B_{31}P^2"
    assert surface_from_spec("catalog:3A2").name == "3A2"
    with pytest.raises(SurfaceError):
        surface_from_spec({"kind": "Nonsense"})


def test_metadata_rows_refuse_numerics():
    S = catalog_surface("A8")
    with pytest.raises(DataNotEncoded):
        weil_mod_pic(S)


def test_anticanonical_index():
    assert anticanonical_index(projective_plane()) == 3
    assert anticanonical_index(quadric()) == 2
    assert anticanonical_index(weighted_p2(1, 2, 3)) == 6


@pytest.mark.parametrize("rid, weil, wp, K2, orders", [
    ("A3+2A1", (1, [2]), [2, 4], 4, [2, 4, 2]),
    ("A5+A1", (1, [2]), [6], 3, [2, 6]),
    ("3A2", (1, [3]), [3, 3], 3, [3, 3, 3]),
    ("4A2", (1, [3, 3]), [3, 3], 1, [3, 3, 3, 3]),
])
def test_lattice_surfaces(rid, weil, wp, K2, orders):
    S = catalog_surface(rid)
    assert weil_group(S) == FiniteAbelianGroup.from_orders(weil[1], weil[0])
    assert weil_mod_pic(S) == FiniteAbelianGroup.from_orders(wp)
    assert self_intersection_K(S) == K2
    assert sorted(p.order for p in S.sing_points) == sorted(orders)


def test_a3_2a1_needs_odd_lines_which_double_the_middle_class():
    S = catalog_surface("A3+2A1")
    L1, L2 = S.curve("L1"), S.curve("L2")
    assert local_classes(S, L1) == (1, 1, 0)
    assert local_classes(S, L2) == (0, 3, 1)
    assert local_classes(S, L1 + L2) == (1, 0, 1)


def test_3a2_models_agree():
    a = catalog_surface("3A2")
    b = catalog_surface("3A2-direct")
    assert weil_group(a) == weil_group(b)
    assert weil_mod_pic(a) == weil_mod_pic(b)
    assert self_intersection_K(a) == self_intersection_K(b)


classes = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 5), classes, classes, classes)
def test_pairing_bilinear_symmetric(n, a, b, c):
    S = hirzebruch(n)
    ab = tuple(x + y for x, y in zip(a, b))
    assert intersect(S, ab, c) == intersect(S, a, c) + intersect(S, b, c)
    assert intersect(S, a, b) == intersect(S, b, a)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(FAMILY_BASES)), st.lists(st.integers(1, 4), max_size=3))
def test_adjunction_parity_on_smooth_classes(base, ws):
    # D.(D+K) is even for Cartier D; pi^*H and the E_i with m_i = 1 are Cartier
    S = family_surface(base, ws)
    base_rank = S.rank - len(ws)
    for i in range(S.rank):
        v = [0] * S.rank
        v[i] = 1
        if local_classes(S, v) == (0,) * len(S.sing_points) and i < base_rank:
            DK = [x + k for x, k in zip(v, S.canonical)]
            assert intersect(S, v, DK) % 2 == 0
