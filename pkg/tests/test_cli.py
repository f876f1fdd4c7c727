"""Tests for the command-line surface."""
import json

import pytest

from backend.cli import EXIT_HYPOTHESIS, EXIT_INVALID, EXIT_OK, EXIT_REJECTED, main


@pytest.fixture
def k7_file(tmp_path):
    path = tmp_path / "k7.txt"
    assert main(["gen", "complete(7)", "--out", str(path)]) == EXIT_OK
    return path


def _solve_to(tmp_path, graph, s="1", t="1"):
    out = tmp_path / "witness.json"
    assert main(["solve", "--graph", str(graph), "--s", s, "--t", t, "--json", str(out)]) == EXIT_OK
    return out


def test_gen_to_stdout(capsys):
    assert main(["gen", "sharp(1,1,6)"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "6 12"
    assert len(lines) == 13


def test_gen_uses_seed_flag(capsys):
    main(["gen", "gnp(10,1/2)", "--seed", "4"])
    first = capsys.readouterr().out
    main(["gen", "gnp(10,1/2,4)"])
    assert capsys.readouterr().out == first


def test_gen_bad_spec(capsys):
    assert main(["gen", "wheel(5)"]) == EXIT_INVALID
    assert "invalid input" in capsys.readouterr().err


def test_solve_prints_witness(k7_file, capsys):
    assert main(["solve", "--graph", str(k7_file), "--s", "1", "--t", "1"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["path"] == "clique-fallback"
    assert data["margins"] == {"sSide": "2/1", "tSide": "0/1"}


def test_verify_accepts_solver_output(tmp_path, k7_file, capsys):
    witness = _solve_to(tmp_path, k7_file)
    assert main(["verify", "--graph", str(k7_file), "--json", str(witness)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "OK"


def test_verify_rejects_tampered_witness(tmp_path, k7_file, capsys):
    witness = _solve_to(tmp_path, k7_file)
    data = json.loads(witness.read_text())
    data["A"], data["B"] = [0, 1], [2, 3, 4, 5, 6]
    data["margins"] = {"sSide": "-1/1", "tSide": "5/1"}
    witness.write_text(json.dumps(data))

    assert main(["verify", "--graph", str(k7_file), "--json", str(witness)]) == EXIT_REJECTED
    out = capsys.readouterr().out
    assert "FAIL A-margin" in out
    assert "OK" not in out


def test_verify_rejects_other_parameters(tmp_path, k7_file, capsys):
    witness = _solve_to(tmp_path, k7_file)
    assert main(["verify", "--graph", str(k7_file), "--json", str(witness),
                 "--s", "2", "--t", "1"]) == EXIT_REJECTED
    assert "different (s, t)" in capsys.readouterr().out


def test_solve_hypothesis_not_met(tmp_path, capsys):
    graph = tmp_path / "k4.txt"
    main(["gen", "complete(4)", "--out", str(graph)])
    assert main(["solve", "--graph", str(graph), "--s", "1", "--t", "1"]) == EXIT_HYPOTHESIS
    assert "hypothesis not met" in capsys.readouterr().err


def test_solve_rejects_decimal(k7_file):
    assert main(["solve", "--graph", str(k7_file), "--s", "0.5", "--t", "1"]) == EXIT_INVALID


def test_missing_graph_file(tmp_path, capsys):
    missing = tmp_path / "absent.txt"
    assert main(["solve", "--graph", str(missing), "--s", "1", "--t", "1"]) == EXIT_INVALID
    assert "cannot read" in capsys.readouterr().err


def test_oracle_finds_partition(k7_file, capsys):
    assert main(["oracle", "--graph", str(k7_file), "--s", "1", "--t", "1"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"found": True, "A": [4, 5, 6], "B": [0, 1, 2, 3]}


def test_oracle_finds_nothing_on_sharp_graph(tmp_path, capsys):
    graph = tmp_path / "sharp.txt"
    main(["gen", "sharp(1,1,7)", "--out", str(graph)])
    assert main(["oracle", "--graph", str(graph), "--s", "1", "--t", "1"]) == EXIT_HYPOTHESIS
    assert json.loads(capsys.readouterr().out) == {"found": False}


def test_oracle_cap(k7_file):
    assert main(["oracle", "--graph", str(k7_file), "--s", "1", "--t", "1", "--cap", "5"]) == EXIT_INVALID


def test_oracle_fact5(tmp_path, k7_file, capsys):
    assert main(["oracle", "--graph", str(k7_file), "--s", "1", "--t", "1", "--fact5"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"fact5": True}

    k8 = tmp_path / "k8.txt"
    main(["gen", "complete(8)", "--out", str(k8)])
    assert main(["oracle", "--graph", str(k8), "--s", "1", "--t", "1", "--fact5"]) == EXIT_HYPOTHESIS
