import pytest

from sasaki5 import catalog
from sasaki5.abelian import FiniteAbelianGroup
from sasaki5.catalog import (bundle_existence_from_metadata, enumerate_blowup_families,
                             singularity_orders, smooth_classes, three_a2_admissible_set)
from sasaki5.catalog.groups import group_from_element_orders, load_groups


def test_table1_suite_passes():
    r = catalog.verify_table1(jobs=2)
    assert r.passed, r.text()
    assert r.summary["filter survivors"] == 19


def test_table2_suite_passes():
    r = catalog.verify_table2(jobs=2)
    assert r.passed, r.text()
    assert [row.row for row in r.rows] == [row["id"] for row in catalog.table2()]


def test_equations_and_families_pass():
    assert catalog.verify_equations().passed
    assert catalog.verify_families().passed


@pytest.mark.parametrize("deg, count", [(1, 1), (2, 2), (3, 4), (4, 7)])
def test_blowup_counts(deg, count):
    assert len(enumerate_blowup_families(deg)) == count


def test_singularity_orders():
    assert singularity_orders("A5+A2+A1") == [6, 3, 2]
    assert singularity_orders("4A2") == [3, 3, 3, 3]


def test_nonabelian_groups():
    groups = load_groups()
    assert {n: g.order for n, g in groups.items()} == {"G8": 8, "G16": 16, "G27": 27}
    assert not any(g.is_abelian() for g in groups.values())
    assert groups["G8"].abelianization() == FiniteAbelianGroup.from_orders([2, 2])
    assert groups["G27"].abelianization() == FiniteAbelianGroup.from_orders([3, 3])


def test_group_from_element_orders():
    # Z/2 + Z/4: orders 1, 2, 2, 2, 4, 4, 4, 4
    assert group_from_element_orders([1, 2, 2, 2, 4, 4, 4, 4]) == FiniteAbelianGroup.from_orders([2, 4])


@pytest.mark.parametrize("rid", ["A8", "A7+A1", "A7"])
def test_metadata_rows_have_no_generating_class(rid):
    row = next(r for r in catalog.table2() if r["id"] == rid)
    exists, embeddings = bundle_existence_from_metadata(row)
    assert embeddings >= 1 and not exists


def test_a5a1_line_generates_both():
    S = catalog.catalog_surface("A5+A1")
    assert smooth_classes(S)


def test_4a2_weil_mod_pic_is_the_tetracode():
    S = catalog.catalog_surface("4A2")
    assert smooth_classes(S) == []


def test_3a2_computed_set():
    # both models give u = 0, v != 0 (mod 3)
    assert three_a2_admissible_set() == {(0, 1), (0, 2)}
    assert three_a2_admissible_set(catalog.catalog_surface("3A2-direct")) == {(0, 1), (0, 2)}


def test_report_serializes():
    import json
    r = catalog.verify_equations()
    d = r.to_dict()
    assert json.loads(json.dumps(d, sort_keys=True)) == d


def test_unknown_row():
    with pytest.raises(KeyError):
        catalog.catalog_surface("E8")
