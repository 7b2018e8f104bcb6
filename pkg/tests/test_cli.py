import json

import pytest

from kronmult.cli import Config, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kron_sum_squares(capsys):
    code, out, _ = run(capsys, "kron", "s:3", "--sum-squares")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "11" and lines[1].startswith("identity holds")


def test_kron_modes(capsys):
    assert run(capsys, "kron", "s:3", "--avg")[1].startswith("11/27")
    assert "K = 1" in run(capsys, "kron", "s:4", "--max")[1]
    assert run(capsys, "kron", "s:3", "--triple", "2", "2", "2")[1].strip() == "1"
    code, _, err = run(capsys, "--table-cap", "3", "kron", "s:4", "--max")
    assert code == 2 and "table_cap" in err


def test_kron_from_table_file(capsys, tmp_path):
    path = tmp_path / "s4.tbl"
    assert run(capsys, "table", "s:4", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "kron", str(path), "--sum-squares")
    assert code == 0 and out.splitlines()[0] == "43"


def test_group(capsys):
    code, out, _ = run(capsys, "group", "s:4", "classes")
    assert code == 0 and len(out.splitlines()) == 2 + 5
    code, out, _ = run(capsys, "--format", "json", "group", "s:3")
    stats = json.loads(out)
    assert (stats["k"], stats["b"], stats["epsilon"]) == (3, 2, "1/2")


def test_induce(capsys, tmp_path):
    code, out, _ = run(capsys, "induce", "--parent", "s:3", "--sub", "s:2", "--matrix")
    assert out.split("\n")[:3] == ["1 0", "0 1", "1 1"]
    code, out, _ = run(capsys, "induce", "--parent", "s:3", "--sub", "s:2", "--sum-squares")
    assert out.splitlines()[0] == "4"
    gens = tmp_path / "d4.txt"
    gens.write_text("# dihedral of the square\n(1 2 3 4)\n(1 3)\n")
    code, out, _ = run(capsys, "induce", "--parent", "s:4", "--gens", str(gens), "--max")
    assert code == 0 and out.startswith("C = 1")
    code, _, err = run(capsys, "induce", "--parent", "a:4", "--gens", str(gens))
    assert code == 2 and "error" in err


def test_sn_stats(capsys):
    code, out, _ = run(capsys, "sn", "stats", "--n", "13")
    assert code == 0 and "f=6" in out and "429" in out
    code, out, _ = run(capsys, "sn", "stats", "--range", "3..5", "--emit", "csv")
    assert out.splitlines()[0].startswith("n,p,b") and len(out.splitlines()) == 4


def test_verify_json(capsys):
    code, out, err = run(capsys, "verify", "--targets", "s:3", "prod(s:3,c:2)", "--checks",
                         "lemma7_2,burnside", "--format", "json")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert json.loads(lines[0])["counts"]["holds"] == 4
    assert "checking s:3" in err  # progress goes to stderr only


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--targets", "s:3", "--checks", "gr_center")[0] == 1
    assert run(capsys, "verify", "--targets", "s:3", "--checks", "nope")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "sn", "stats")[0] == 2


def test_classdata(capsys, tmp_path):
    path = tmp_path / "toy.txt"
    path.write_text("group toy\norder 6\nclasses 3\ncentralizers 6 2 3\n")
    code, out, _ = run(capsys, "classdata", str(path))
    assert code == 0 and "A = 11" in out
    code, _, err = run(capsys, "classdata", str(path), "--report")
    assert code == 2 and "194" in err
    path.write_text("group toy\norder 6\nclasses 3\ncentralizers 6 2\n")
    assert run(capsys, "classdata", str(path))[0] == 2


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--check", "spec9_5", "--sweep", "s:3..4")
    assert code == 0 and "factor(s:4)" in out and "observation fails" in out


def test_config(monkeypatch):
    monkeypatch.setenv("MBX_THREADS", "3")
    assert Config().threads == 3
    monkeypatch.delenv("MBX_THREADS")
    assert Config(threads=2).threads == 2
    with pytest.raises(ValueError):
        Config(element_cap=0)
    with pytest.raises(ValueError):
        Config(format="xml")


def test_deterministic_output(capsys):
    argv = ("verify", "--targets", "s:4>s:3", "--format", "json")
    first = run(capsys, *argv)[1].splitlines()
    second = run(capsys, *argv)[1].splitlines()
    assert first[1:] == second[1:]
    assert json.loads(first[0])["digest"] == json.loads(second[0])["digest"]
