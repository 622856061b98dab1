import json
import os
import subprocess
import sys

import pytest

from liecp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_product(capsys):
    code, out, _ = run(capsys, "product", "--type", "A", "--rank", "1", "--left", "1", "--right", "1")
    assert code == 0 and out.strip() == '{"[2]":1,"[0]":1}'


def test_product_list_format(capsys):
    code, out, _ = run(capsys, "product", "--type", "A", "--rank", "2",
                       "--left", "1,0", "--right", "0,1", "--format", "list")
    assert json.loads(out) == [{"highest": [1, 1], "mult": 1}, {"highest": [0, 0], "mult": 1}] or \
        sorted(map(json.dumps, json.loads(out))) == sorted(
            map(json.dumps, [{"highest": [1, 1], "mult": 1}, {"highest": [0, 0], "mult": 1}]))


def test_borel(capsys):
    code, out, _ = run(capsys, "borel", "--type", "G", "--rank", "2")
    assert code == 0 and "rank(lambda_B) = 2 = dim h : PASS" in out


def test_borel_dump(capsys):
    code, out, _ = run(capsys, "borel", "--type", "A", "--rank", "1", "--dump-matrix")
    blob = out[:out.rindex("}") + 1]
    assert code == 0 and json.loads(blob)["matrix"] == [["0", "0"], ["2", "0"]]


def test_sl2_table_markdown(capsys):
    code, out, _ = run(capsys, "sl2-table", "--markdown")
    assert code == 0 and out.startswith("| row |") and "| G_2 | G2 | short |" in out


def test_sl2_table_json(capsys):
    code, out, _ = run(capsys, "sl2-table")
    assert code == 0 and len(json.loads(out)) > 50


def test_sl2_embed(capsys):
    code, out, _ = run(capsys, "sl2-embed", "--type", "C", "--rank", "3", "--class", "long")
    assert code == 0
    assert "k0=8 k1=4 k2=1 k3=0" in out and "21 = 11 + 2*(4+1+0) : PASS" in out


def test_sl2_embed_missing_class(capsys):
    code, _, err = run(capsys, "sl2-embed", "--type", "E", "--rank", "6", "--class", "short")
    assert code == 1 and "NoSuchRootClass" in err


def test_charpoly_and_linearize(capsys):
    code, out, _ = run(capsys, "charpoly", "--type", "A", "--rank", "1", "--highest", "2", "--expand")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 3 and data["expanded"] == "z0^3 - 4*z0*z1^2"
    code, out, _ = run(capsys, "linearize", "--type", "A", "--rank", "1", "--highest", "1")
    assert json.loads(out) == [{"coords": [-1], "mult": 1}, {"coords": [1], "mult": 1}] or \
        {tuple(e["coords"]) for e in json.loads(out)} == {(1,), (-1,)}


def test_decompose_file(tmp_path, capsys):
    path = tmp_path / "gamma.json"
    path.write_text(json.dumps([{"coords": [2], "mult": 1}, {"coords": [0], "mult": 2},
                                {"coords": [-2], "mult": 1}]))
    code, out, _ = run(capsys, "decompose", "--type", "A", "--rank", "1", str(path))
    assert code == 0
    assert {tuple(e["highest"]): e["mult"] for e in json.loads(out)} == {(2,): 1, (0,): 1}


def test_decompose_rejects_non_character(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps([{"coords": [1], "mult": 1}]))
    code, _, err = run(capsys, "decompose", "--type", "A", "--rank", "1", str(path))
    assert code == 1 and "NotACharacter" in err


def test_unsupported_type(capsys):
    code, _, err = run(capsys, "rootsys", "--type", "D", "--rank", "2")
    assert code == 1 and "UnsupportedType" in err


def test_rootsys(capsys):
    code, out, _ = run(capsys, "rootsys", "--type", "C", "--rank", "2")
    assert code == 0 and json.loads(out)["rank"] == 2


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify-sl2", "--m", "4")
    assert code == 0 and out.rstrip().endswith("PASS") and out.count("z0^5") == 2
    code, out, _ = run(capsys, "verify-basechange", "--m", "2", "--seed", "5", "--trials", "3")
    assert code == 0 and out.count("PASS") == 3


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["charpoly", "--type", "A", "--rank", "1", "--highest", "x"])
    assert exc.value.code == 2


def test_dim_cap_flag(capsys, monkeypatch):
    monkeypatch.delenv("LIECP_DIM_CAP", raising=False)
    code, _, err = run(capsys, "--dim-cap", "3", "charpoly", "--type", "A", "--rank", "1",
                       "--highest", "5")
    assert code == 1 and "DimensionCapExceeded" in err
    assert "LIECP_DIM_CAP" not in os.environ


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "liecp", "product", "--type", "B", "--rank", "2",
           "--left", "1,0", "--right", "0,1"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
