import json
import random
from fractions import Fraction as F
from pathlib import Path

import pytest
from hypothesis import assume, given, settings, strategies as st

from sasaki5.klt import (KLT, NOT_DETERMINED, CurveGerm, GermError, KltQuery, germ_bound, klt_bound,
                         klt_threshold_scan, newton_distance, newton_klt, qualifying_factors)

ORACLE = json.loads((Path(__file__).parent / "data" / "lct_oracle.json").read_text())


def germ(name):
    return CurveGerm.from_rows(ORACLE[name]["germ"])


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_threshold_matches_resolution_oracle(name):
    assert klt_threshold_scan(germ(name)) == F(ORACLE[name]["lct"])


@pytest.mark.parametrize("name, value", [("cusp", F(5, 6)), ("node", F(1)), ("double_branch", F(1, 2))])
def test_pinned_thresholds(name, value):
    assert F(ORACLE[name]["lct"]) == value
    g = germ(name)
    assert newton_klt(KltQuery(1, value - F(1, 1000), g)).klt
    assert not newton_klt(KltQuery(1, value, g)).klt


def test_double_branch_uses_one_change():
    v = newton_klt(KltQuery(1, F(1, 3), germ("double_branch")))
    changes = [s.change for s in v.trace if s.change]
    assert changes == ["y -> y + 1 x^2"]


def test_unique_factor_on_double_branch():
    fs = qualifying_factors(germ("double_branch").as_dict())
    assert len(fs) == 1 and (fs[0].u, fs[0].v, fs[0].e) == (1, 2, 2)


def test_bound_examples():
    assert klt_bound(F(9, 7), F(3, 7), 7) == F(10, 9)
    assert klt_bound(F(4, 3), F(2, 3), 3) == F(3, 4) + F(1, 2)
    assert klt_bound(F(4, 3), F(2, 3), 3) > 1
    with pytest.raises(ValueError):
        klt_bound(0, 1, 1)


def test_elliptic_threshold_on_p2():
    # (C.D)_p = 9/n, mult = 3/n: c = 1 is covered exactly for n >= 7
    covered = [n for n in range(1, 40) if klt_bound(F(9, n), F(3, n), n) > 1]
    assert covered == list(range(7, 40))


def test_small_mult_limit():
    # the 1/mult term wins once mult is small
    assert klt_bound(F(2), F(1, 1000), 1) == 1000


def test_input_errors():
    with pytest.raises(GermError):
        newton_klt(KltQuery(1, F(1, 2), CurveGerm.from_rows([[0, 0, 1, 1], [1, 1, 1, 1]])))
    with pytest.raises(GermError):
        CurveGerm.from_rows([[0, 1, 0, 1]])
    with pytest.raises(GermError):
        CurveGerm.from_rows([[0, 1]])
    with pytest.raises(GermError):
        KltQuery(0, F(1), germ("cusp"))


def test_one_axis_support_is_handled():
    # y^3: D is a triple smooth branch along C itself
    v = newton_klt(KltQuery(1, F(1, 4), CurveGerm.from_rows([[0, 3, 1, 1]])))
    assert v.klt
    v = newton_klt(KltQuery(1, F(1, 2), CurveGerm.from_rows([[0, 3, 1, 1]])))
    assert v.verdict == NOT_DETERMINED


def random_germ(rng):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        i, j = rng.randint(0, 5), rng.randint(0, 4)
        if (i, j) != (0, 0):
            terms[(i, j)] = F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
    # D must meet C = (y = 0) properly
    terms.setdefault((rng.randint(1, 6), 0), F(1))
    return CurveGerm.from_dict(terms)


def test_soundness_on_100_random_germs():
    rng = random.Random(20260101)
    failures = []
    for _ in range(100):
        g = random_germ(rng)
        n, m = rng.randint(1, 4), rng.randint(1, 3)
        b = germ_bound(KltQuery(n, F(0), g, m))
        c = b * F(rng.randint(1, 99), 100) if b is not None else None
        if c is None:
            continue
        v = newton_klt(KltQuery(n, c, g, m))
        if not v.klt:
            failures.append((g.to_rows(), n, m, c, v.reason))
    assert not failures


small_germs = st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 4)),
                              st.sampled_from([F(-2), F(-1), F(1, 2), F(1), F(3)]), min_size=1, max_size=4)


@settings(max_examples=150, deadline=None)
@given(small_germs, st.integers(1, 3), st.integers(1, 20), st.integers(1, 20))
def test_monotone_in_c(terms, n, a, b):
    terms.pop((0, 0), None)
    assume(terms)
    g = CurveGerm.from_dict(terms)
    c1, c2 = sorted([F(a, 10), F(b, 10)])
    if newton_klt(KltQuery(n, c2, g)).klt:
        assert newton_klt(KltQuery(n, c1, g)).klt


@settings(max_examples=150, deadline=None)
@given(small_germs, st.integers(1, 4), st.integers(1, 20))
def test_substitution_consistency(terms, n, a):
    terms.pop((0, 0), None)
    assume(terms)
    g = CurveGerm.from_dict(terms)
    c = F(a, 12)
    direct = newton_klt(KltQuery(n, c, g))
    pre = newton_klt(KltQuery(1, c, g.substitute_cover(n)))
    assert direct.verdict == pre.verdict


def test_newton_distance_examples():
    assert newton_distance([(0, 2), (3, 0)]) == F(6, 5)
    assert newton_distance([(1, 1)]) == 1


def test_verdict_serialization():
    v = newton_klt(KltQuery(1, F(1, 2), germ("cusp")))
    d = v.to_dict()
    assert d["verdict"] == KLT and d["threshold"] == "5/6"
    assert json.loads(json.dumps(d)) == d
    assert "trace" not in v.to_dict(trace=False)
