import json
from pathlib import Path

import jsonschema
import pytest

from symhom.algebra import trunc_poly
from symhom.cli import main

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "docs" / "result.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return doc


def test_count(capsys):
    assert run(capsys, "count", "6", "4") == (0, "1663200\n", "")


def test_poincare_text(capsys):
    code, out, _ = run(capsys, "sym", "--p", "5", "--poincare", "--char", "0")
    assert code == 0 and out == "120*t^5+272*t^4+t^3\n"


def test_hs_preset(capsys):
    doc = run_json(capsys, "hs", "--preset", "trunc_poly(2)", "--degree", "both")
    assert doc["hs0"] == {"free": 2, "torsion": []}
    assert doc["hs1"] == {"free": 0, "torsion": [2, 2]}
    code, out, _ = run(capsys, "hs", "--preset", "trunc_poly(2)")
    assert "hs1: (Z/2)^2" in out


def test_hs_from_file(tmp_path, capsys):
    path = tmp_path / "a.json"
    path.write_text(json.dumps(trunc_poly([3, 2]).to_json()))
    doc = run_json(capsys, "hs", "--algebra", str(path), "--degree", "1")
    assert doc["hs1"] == {"free": 2, "torsion": [2] * 11 + [6]}
    assert "hs0" not in doc


@pytest.mark.parametrize("argv", [
    ("enumerate", "2", "2", "--epi"),
    ("compose", "[[4,0],[],[2,3],[1]]", "[[1,6,0],[7,4],[],[3],[2,5]]"),
    ("factor", "[[2,3],[],[1],[],[0]]"),
    ("sym", "--p", "3", "--homology"),
    ("sym", "--p", "3", "--verify-chessboard"),
    ("hs", "--preset", "abelian_group(2,2)", "--layered"),
    ("hs", "--preset", "trunc_poly(3)", "--action"),
    ("free-monoid-layers", "--from", "0", "--to", "4"),
    ("cyclic-compare", "--preset", "trunc_poly(2)"),
    ("count", "3", "2"),
    ("sym", "--p", "2", "--poincare", "--char", "3"),
])
def test_json_output_validates(capsys, argv):
    run_json(capsys, *argv)


def test_factor_and_compose_values(capsys):
    doc = run_json(capsys, "factor", "[[2,3],[],[1],[],[0]]")
    assert doc == {"epi": "[[2,3],[1],[0]]", "mono": "[[0],[],[1],[],[2]]"}
    doc = run_json(capsys, "compose", "[[],[3,0,2],[1]]", "[[0],[2,4,1],[],[3]]")
    assert doc["result"] == "[[],[3,0],[2,4,1]]"


def test_layered_and_free_monoid_values(capsys):
    doc = run_json(capsys, "hs", "--preset", "abelian_group(2,2)", "--layered")
    assert all(v["hs1"]["torsion"] == [2, 2, 2] for v in doc["layers"].values())
    doc = run_json(capsys, "free-monoid-layers", "--from", "0", "--to", "3")
    assert [doc["layers"][str(m)]["torsion"] for m in range(4)] == [[], [], [2], [2]]


def test_text_output_is_deterministic(capsys):
    a = run(capsys, "hs", "--preset", "trunc_poly(3)", "--action")
    b = run(capsys, "hs", "--preset", "trunc_poly(3)", "--action")
    assert a == b and a[0] == 0
    assert "relations (Hermite basis): [[2, 0, 0], [0, 2, 0], [0, 0, 1]]" in a[1]


@pytest.mark.parametrize("argv", [
    ("count", "1"),
    ("bogus",),
    ("sym", "--p", "3"),
    ("hs", "--preset", "nope(2)"),
    ("hs", "--algebra", "/nonexistent/file.json"),
    ("free-monoid-layers", "--from", "3", "--to", "1"),
    ("count", "1", "1", "--threads", "0"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


@pytest.mark.parametrize("argv,name", [
    (("compose", "[[0]]", "[[0],[1]]"), "ArityMismatch"),
    (("compose", "[[0],[0]]", "[[0]]"), "InvalidMorphism"),
    (("sym", "--p", "3", "--poincare", "--char", "4"), "CompositeCharacteristic"),
    (("sym", "--p", "3", "--homology", "--degree", "5"), "DegreeOutOfRange"),
    (("hs", "--preset", "matrix_ring(2)", "--layered"), "UngradedAlgebra"),
])
def test_computation_errors_exit_3(capsys, argv, name):
    code, out, err = run(capsys, *argv)
    assert code == 3 and out == ""
    assert err.startswith(name + ":")


def test_bad_algebra_file_is_a_computation_error(tmp_path, capsys):
    doc = trunc_poly([2]).to_json()
    doc["unit"] = [0, 1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "hs", "--algebra", str(path))
    assert code == 3 and err.startswith("NotUnital:")


def test_cache_dir_from_environment(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SYMHOM_CACHE_DIR", str(tmp_path))
    first = run(capsys, "sym", "--p", "3", "--poincare")
    assert list(tmp_path.glob("*.json"))
    assert run(capsys, "sym", "--p", "3", "--poincare") == first


def test_verbose_logs_to_stderr(capsys):
    code, out, err = run(capsys, "sym", "--p", "2", "--poincare", "--verbose", "--threads", "2")
    assert code == 0 and out == "2*t^2+t\n"
    assert '"threads": 2' in err and "symhom.jobs:" in err
    code, out, err = run(capsys, "sym", "--p", "2", "--poincare")
    assert err == ""


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "symhom", "count", "2", "1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "24"
