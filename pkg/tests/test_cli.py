import json

import pytest

from sclgap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_bound_f2_headline(capsys):
    code, out = run(capsys, "bound", "--group", "f2", "--word", "abAB")
    assert code == 0
    assert "scl lower bound: 1/2" in out


def test_bound_f2_json(capsys):
    code, out = run(capsys, "bound", "--group", "f2", "--word", "abAB", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["scl_lower_bound"] == [1, 2]
    assert record["phi_bar"] == [1, 1]


def test_bound_no_certificate_exit_code(capsys):
    code, out = run(capsys, "bound", "--group", "f2", "--word", "aaa")
    assert code == 1
    assert "no certificate" in out


def test_bound_bad_word_is_input_error(capsys):
    code, _ = run(capsys, "bound", "--group", "f2", "--word", "xyz")
    assert code == 2


def test_bound_unknown_group(capsys):
    code, _ = run(capsys, "bound", "--group", "f3", "--word", "abAB")
    assert code == 2


def test_alpha_beta_commands(capsys):
    code, out = run(capsys, "alpha", "--word", "baBabaBAbAbabA")
    assert code == 0 and out.strip() == "baBAbabA"
    code, out = run(capsys, "beta", "--word", "baBAbabA")
    assert code == 0 and out.strip() == "baBAbA"
    code, out = run(capsys, "alpha", "--word", "")
    assert code == 0 and out.strip() == ""


def test_classify_triple_command(capsys):
    code, out = run(capsys, "classify-triple", "BAb", "BA", "ab")
    assert code == 0
    assert "tag: T1a" in out
    code, out = run(capsys, "classify-triple", "a", "a", "A")
    assert code == 0
    assert "tag: none" in out


def test_verify_command(capsys):
    code, out = run(capsys, "verify", "--map", "f2sign", "--pairs-maxlen", "4", "--samples", "300")
    assert code == 0
    assert "0 violations" in out


def test_defect_command(capsys):
    code, out = run(capsys, "defect", "--functional", "eta0", "--maxlen", "5")
    assert code == 0
    assert out.strip().endswith("1")


def test_graph_bound_and_cert_verify(tmp_path, capsys):
    graph_file = tmp_path / "path3.json"
    graph_file.write_text(
        json.dumps({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})
    )
    code, out = run(capsys, "bound", "--graph", str(graph_file), "--word", "acAC", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["scl_lower_bound"] == [1, 2]

    cert_file = tmp_path / "cert.json"
    cert_file.write_text(json.dumps(record))
    code, out = run(capsys, "cert", "verify", str(cert_file))
    assert code == 0
    assert "verified" in out


def test_cert_verify_detects_tampering(tmp_path, capsys):
    code, out = run(capsys, "bound", "--group", "f2", "--word", "abAB", "--json")
    record = json.loads(out)
    record["psi_bar"] = [4, 1]
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(json.dumps(record))
    code, out = run(capsys, "cert", "verify", str(cert_file))
    assert code == 3
    assert "mismatch" in out


def test_graph_bound_clique_rejection(tmp_path, capsys):
    graph_file = tmp_path / "path3.json"
    graph_file.write_text(
        json.dumps({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})
    )
    code, out = run(capsys, "bound", "--graph", str(graph_file), "--word", "ab")
    assert code == 1


def test_graph_file_validation(tmp_path, capsys):
    graph_file = tmp_path / "bad.json"
    graph_file.write_text(json.dumps({"vertices": ["a", "a"], "edges": []}))
    code, _ = run(capsys, "bound", "--graph", str(graph_file), "--word", "a")
    assert code == 2
