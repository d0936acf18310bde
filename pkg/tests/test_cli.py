import json
import subprocess
import sys

import pytest

from antiramsey.cli import main

EXAMPLE_TEXT = "0 2 4 6 1 3 5\n1 3 5 0 2 4 6\n3 5 0 2 4 6 1\n"


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "antiramsey", *map(str, args)],
                          capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def example_file(tmp_path):
    p = tmp_path / "example.txt"
    p.write_text(EXAMPLE_TEXT)
    return p


def test_construct_singer(capsys):
    assert main(["construct", "singer", "3"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 3 and all(len(r.split()) == 7 for r in rows)


def test_construct_block_json(capsys):
    assert main(["construct", "block", "2", "3", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == {"rows": 2, "cols": 6, "cells": [[0, 1, 2, 3, 4, 5], [1, 2, 0, 4, 5, 3]]}


def test_construct_bad_parameter(capsys):
    assert main(["construct", "singer", "7"]) == 3
    assert "prime power" in capsys.readouterr().err


def test_construct_kron(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text("0 1 2\n1 2 0\n")
    b.write_text("0 1\n1 0\n")
    assert main(["construct", "kron", str(a), str(b), "--t", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[2] == "3 4 5 0 1 2"


def test_construct_plane_json(capsys):
    assert main(["construct", "plane", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["D"] == [0, 1, 3]


def test_check_blocker(example_file, capsys):
    assert main(["check", str(example_file), "3", "2"]) == 0
    assert capsys.readouterr().out == "blocker verified\n"


def test_check_finds_rainbow(example_file, capsys):
    assert main(["check", str(example_file), "2", "2", "--json"]) == 1
    obj = json.loads(capsys.readouterr().out)
    assert obj["rainbow"] and len(set(obj["symbols"])) == 4


def test_check_either_orientation(example_file):
    assert main(["check", str(example_file), "3", "2", "--either"]) == 1


def test_check_malformed(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("0 1\n2 x\n")
    assert main(["check", str(p), "2", "2"]) == 4


def test_check_not_latin(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("0 1\n0 2\n")
    assert main(["check", str(p), "1", "1"]) == 4


def test_check_missing_file(tmp_path):
    assert main(["check", str(tmp_path / "nope.txt"), "1", "1"]) == 4


def test_decide_exit_codes():
    code, out, _ = run("decide", 2, 4, 2, 2, "--json")
    assert code == 0 and json.loads(out)["arrows"] is True
    code, out, _ = run("decide", 2, 6, 2, 3, "--json")
    assert code == 1 and json.loads(out)["certificate"]["rows"] == 2
    code, _, _ = run("decide", 3, 6, 2, 3, "--max-nodes", 1)
    assert code == 2


def test_decide_with_workers_env(monkeypatch):
    import os
    env = dict(os.environ, RAINBOW_WORKERS="2")
    proc = subprocess.run([sys.executable, "-m", "antiramsey", "decide", "3", "6", "2", "3"],
                          capture_output=True, text=True, env=env, timeout=300)
    assert proc.returncode == 0


def test_usage_errors_exit_3():
    assert run("decide", 3, 6)[0] == 3
    assert run("construct", "block", 2, 3, "--bogus")[0] == 3
    assert run("nonsense")[0] == 3


def test_sweeps(capsys):
    assert main(["arv", "2", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 6
    assert main(["are", "2", "2"]) == 0
    assert capsys.readouterr().out.startswith("AR_E(K_{2,2}) = 8")


def test_verify_suite_subset(capsys):
    assert main(["verify-suite", "--only", "1,3,9", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["passed"] and [c["number"] for c in obj["criteria"]] == [1, 3, 9]


def test_verify_suite_with_starved_budget(capsys):
    assert main(["verify-suite", "--only", "1,2,3", "--max-nodes", "1", "--json"]) == 1
    obj = json.loads(capsys.readouterr().out)
    assert not any(c["passed"] for c in obj["criteria"])
    assert all("budget exhausted" in c["detail"] for c in obj["criteria"])


def test_verify_suite_worker_modes_agree(capsys):
    verdicts = []
    for workers in ("1", "2"):
        assert main(["verify-suite", "--only", "1,2,3", "--workers", workers, "--json"]) == 0
        verdicts.append([c["passed"] for c in json.loads(capsys.readouterr().out)["criteria"]])
    assert verdicts[0] == verdicts[1]
