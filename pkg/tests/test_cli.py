import json

import pytest

from scrollar.bundle import BundleLattice
from scrollar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out) if out.strip() else None


def test_scrollar_plane_model(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("y^2 - (x^3 - x)\n")
    code, data = run_json(capsys, "scrollar", "--model", str(f))
    assert code == 0
    assert data["type"] == [2]


def test_malformed_model(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("y^2 -")
    code, out, err = run(capsys, "scrollar", "--model", str(f))
    assert code == 2 and "offset 5" in err


def test_singular_bundle_json(tmp_path, capsys):
    f = tmp_path / "b.json"
    f.write_text(json.dumps({"rank": 2, "finite": [["1", "1"], ["1", "1"]], "infinity": [["1", "0"], ["0", "1"]]}))
    code, out, err = run(capsys, "inflate", "--bundle", str(f), "--point", "0", "--vectors", "1,0")
    assert code == 2 and "finite chart basis singular" in err


def test_inflate(tmp_path, capsys):
    f = tmp_path / "b.json"
    f.write_text(json.dumps(BundleLattice.standard((-1, -1)).to_json()))
    code, data = run_json(capsys, "inflate", "--bundle", str(f), "--point", "0", "--vectors", "1,0")
    assert code == 0 and data["law_holds"]
    assert data["after"]["type"] == [-1, 0]


def test_pinch_and_kummer(capsys):
    code, data = run_json(capsys, "pinch", "--degrees", "2,3,5")
    assert code == 0 and data["type"] == [2, 3, 5]
    code, data = run_json(capsys, "kummer", "--d", "3", "--p", "x^4+x+1")
    assert data["type"] == [2, 3]


def test_pinch_mod_p(capsys):
    code, data = run_json(capsys, "--char", "10007", "pinch", "--degrees", "1,2")
    assert code == 0 and data["type"] == [1, 2]


def test_global_flag_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "filtration", "--rank", "3", "--degree", "0", "--gap", "2")
    assert json.loads(out)["degrees"] == [-4, -2, 6]


def test_small_commands(capsys):
    assert run_json(capsys, "dims", "--d", "3", "--g", "7", "--gy", "2")[1]["hurwitz_dim"] == 6
    _, m = run_json(capsys, "maroni", "--type", "1,3", "--d", "3", "--g", "2", "--gy", "0")
    assert m["codim"] == 1 and m["maroni_dim"] == 7
    _, r = run_json(capsys, "lingen", "--d", "3", "--trials", "40")
    assert r["rank"] == 6 and r["full"]
    _, t = run_json(capsys, "rnc", "--a", "0,1,2", "--b", "1,1,1")
    assert t["report"]["transverse"]
    # pair keys in the JSON are 1-indexed
    assert t["lingen"]["1,0"]["1,2"] == "1" and t["lingen"]["1,0"]["2,1"] == "0"


def test_miranda(capsys):
    code, data = run_json(capsys, "miranda", "--a1", "1", "--a2", "3")
    assert code == 0 and data["realizable"] is False
    code, data = run_json(capsys, "miranda", "--a1", "1", "--a2", "2", "--construct")
    assert code == 0 and data["witness"]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "unknown"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "--char", "4", "dims", "--d", "3", "--g", "1", "--gy", "0")
    assert code == 2


def test_text_rendering(capsys):
    code, out, _ = run(capsys, "kummer", "--d", "2", "--p", "x^3-x")
    assert code == 0 and "type: [2]" in out and "p_a: 1" in out


def test_verify_deterministic(capsys):
    a = run(capsys, "verify", "lingen", "--seed", "7", "--json")
    b = run(capsys, "verify", "lingen", "--seed", "7", "--json")
    assert a[0] == 0 and a[1] == b[1]
    c = run(capsys, "verify", "lingen", "--seed", "8", "--json")
    assert c[1] != a[1]
