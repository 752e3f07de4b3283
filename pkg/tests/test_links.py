import time
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from sasaki5.abelian import FiniteAbelianGroup
from sasaki5.links import (BPExponents, characteristic_zero_count, cross_check, link_h2,
                           link_homology, milnor_number, monodromy, wang_determinant)
from sasaki5.seifert import BranchDivisor, SeifertData
from sasaki5.surface import weighted_p2


@pytest.mark.parametrize("exps, group", [
    ((6, 6, 2, 5), FiniteAbelianGroup.power(5, 4)),
    ((10, 10, 2, 3), FiniteAbelianGroup.power(3, 8)),
])
def test_known_links_fast(exps, group):
    t = time.perf_counter()
    H = link_h2(BPExponents(exps))
    assert time.perf_counter() - t < 5
    assert H == group


def test_weighted_input():
    e = BPExponents.from_weights([5, 5, 15, 6], 30)
    assert e.exponents == (6, 6, 2, 5)
    with pytest.raises(ValueError):
        BPExponents((6, 6, 2, 5), (5, 5, 15, 7), 30)
    with pytest.raises(ValueError):
        BPExponents((1, 2))


@pytest.mark.parametrize("exps, group", [
    ((2, 3, 5), FiniteAbelianGroup()),            # Poincare sphere
    ((2, 2, 7), FiniteAbelianGroup(0, (7,))),     # lens space L(7, 6)
    ((2, 2, 2, 2), FiniteAbelianGroup(1)),        # unit tangent bundle of S^3
    ((2, 2, 2, 3), FiniteAbelianGroup()),
])
def test_classical_links(exps, group):
    assert link_homology(BPExponents(exps)) == group


def test_double_cover_link():
    assert link_h2(BPExponents((6, 6, 2, 4))) == FiniteAbelianGroup(5, (2, 2, 2, 2))


def test_cross_checks_agree():
    e = BPExponents((6, 6, 2, 5))
    Y = SeifertData(weighted_p2(1, 1, 3), (-1,), (BranchDivisor((6,), 2, 1, 5),))
    assert cross_check(e, Y).agree
    e = BPExponents((10, 10, 2, 3))
    Y = SeifertData(weighted_p2(1, 1, 5), (-3,), (BranchDivisor((10,), 4, 1, 3),))
    cc = cross_check(e, Y)
    assert cc.agree and cc.to_dict()["link_torsion"] == "(Z/3)^8"


exps_st = st.lists(st.integers(2, 5), min_size=2, max_size=4)
small_exps_st = st.lists(st.integers(2, 4), min_size=2, max_size=4)


@settings(max_examples=40, deadline=None)
@given(small_exps_st)
def test_permutation_invariance(exps):
    base = link_homology(BPExponents(exps))
    for p in set(permutations(exps)):
        assert link_homology(BPExponents(p)) == base


@settings(max_examples=60, deadline=None)
@given(exps_st)
def test_determinant_identity(exps):
    e = BPExponents(exps)
    H = link_homology(e)
    d = wang_determinant(e)
    if H.free_rank:
        assert d == 0
    else:
        assert abs(d) == H.order


@settings(max_examples=60, deadline=None)
@given(exps_st)
def test_free_rank_is_eigenvalue_one_multiplicity(exps):
    e = BPExponents(exps)
    assert link_homology(e).free_rank == characteristic_zero_count(e)
    h = monodromy(e)
    assert len(h) == milnor_number(e)
