import json

import pytest

from qaffine.cli import main


def test_relations_small(capsys):
    assert main(["relations", "--height", "2"]) == 0
    out = capsys.readouterr().out
    assert "overall | - | PASS" in out
    assert "EQ1" in out and "FQ10" in out


def test_pairing_small(capsys):
    assert main(["pairing", "--height", "2"]) == 0
    out = capsys.readouterr().out
    assert "pbw-pairing-diagonal" in out
    assert "pbw-pairing-off-diagonal" in out


def test_rep_json_format(capsys):
    assert main(["rep", "--N", "1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    assert any(r["id"].startswith("closed-form") for r in doc["results"])


def test_rmatrix_n1_and_export(tmp_path, capsys):
    out_file = tmp_path / "r.json"
    assert main(["rmatrix", "--N", "1", "--out", str(out_file)]) == 0
    capsys.readouterr()
    doc = json.loads(out_file.read_text())
    assert doc["rows"] == doc["cols"] == 4
    assert any("A[" in entry for _, _, entry in doc["entries"])


def test_rmatrix_rejects_a_override(capsys):
    assert main(["rmatrix", "--N", "1", "--a", "2"]) == 2
    assert "cannot be overridden" in capsys.readouterr().err


def test_ybe_exact_n1(capsys):
    assert main(["ybe", "--N", "1"]) == 0
    assert "ybe-exact | N=1 | PASS" in capsys.readouterr().out


def test_ybe_exact_rejects_large_n(capsys):
    assert main(["ybe", "--N", "3"]) == 2
    assert "exact mode" in capsys.readouterr().err


def test_ybe_numeric_point(capsys):
    assert main(["ybe", "--N", "2", "--mode", "numeric",
                 "--z", "0.1+0.1j", "--w", "0.2-0.1j"]) == 0
    out = capsys.readouterr().out
    assert "ybe-numeric" in out and "PASS" in out


def test_ybe_numeric_rejects_unit_q(capsys):
    assert main(["ybe", "--N", "1", "--mode", "numeric", "--q", "1.0"]) == 2


def test_output_deterministic(capsys):
    main(["relations", "--height", "2"])
    first = capsys.readouterr().out
    main(["relations", "--height", "2"])
    assert capsys.readouterr().out == first


def test_unknown_command_exits():
    with pytest.raises(SystemExit):
        main(["nonsense"])
