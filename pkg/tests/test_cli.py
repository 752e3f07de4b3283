import json

import pytest

from sasaki5.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_link_homology(capsys):
    code, out, _ = run(capsys, "link-homology", "6", "6", "2", "5")
    assert code == 0
    assert "rank 0, torsion (Z/5)^4" in out


def test_link_homology_with_weights(capsys):
    code, out, _ = run(capsys, "link-homology", "6", "6", "2", "5", "--weights", "5", "5", "15", "6",
                       "--degree", "30", "--format", "json")
    assert code == 0
    assert json.loads(out)["homology"] == {"free_rank": 0, "torsion": [5, 5, 5, 5]}


def test_klt_bound(capsys):
    code, out, _ = run(capsys, "klt-bound", "9/7", "3/7", "7")
    assert code == 0
    assert "min{7/9+1/3, 7/3} = 10/9" in out
    assert "c=1 is admissible" in out


def test_klt_newton(capsys, tmp_path):
    p = tmp_path / "cusp.json"
    p.write_text(json.dumps({"n": 1, "c": "1/2", "germ": [[0, 2, 1, 1], [3, 0, -1, 1]]}))
    code, out, _ = run(capsys, "klt-newton", "--input", str(p), "--trace", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["verdict"] == "klt" and d["threshold"] == "5/6" and d["trace"]


def test_surface_show_class(capsys):
    code, out, _ = run(capsys, "surface-show", "F_3", "--class", "2/5,1/5")
    assert code == 0
    assert "not ample: E has intersection -1" in out


def test_seifert_check(capsys, tmp_path):
    p = tmp_path / "y.json"
    p.write_text(json.dumps({"surface": "P(1,1,3)", "B": [-1],
                             "branch": [{"D": [6], "genus": 2, "b": 1, "m": 5}]}))
    code, out, _ = run(capsys, "seifert-check", "--input", str(p), "--format", "json")
    assert code == 0
    assert json.loads(out)["tors_h2"] == "(Z/5)^4"


def test_catalog_verify_table2(capsys):
    code, out, _ = run(capsys, "catalog-verify", "table2", "--jobs", "3")
    assert code == 0
    assert out.count("PASS ") == 16


def test_catalog_verify_reports_failure(capsys):
    code, out, _ = run(capsys, "catalog-verify", "smooth-bundles")
    assert code == 1
    assert "FAIL 3A2" in out


def test_catalog_enumerate(capsys):
    code, out, _ = run(capsys, "catalog-enumerate", "blowups", "--format", "json")
    assert code == 0 and json.loads(out)["total"] == 39


@pytest.mark.parametrize("argv", [
    ["klt-newton", "--germ", "[[0, 2"],
    ["klt-newton", "--germ", "[[0, 0, 1, 1]]"],
    ["klt-bound", "x", "1", "1"],
    ["link-homology", "1", "2"],
    ["surface-show", "B_{2}Nowhere"],
    ["surface-show", "--input", "/nonexistent.json"],
    ["no-such-command"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2


def test_json_error_location(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"surface": "P^2",\n "B": [1,]}')
    code, _, err = run(capsys, "seifert-check", "--input", str(p))
    assert code == 2 and f"{p}:2:" in err


def test_json_output_is_deterministic(capsys):
    outs = [run(capsys, "catalog-verify", "equations", "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    d = json.loads(outs[0])
    assert json.dumps(d, sort_keys=True, indent=2) + "\n" == outs[0]
