from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from leakyforcing.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_exact(capsys):
    code, out, _ = run(capsys, "compute", "--family", "petersen:5,2", "--leaks", "1")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == 5 and len(data["witness"]) == 5


def test_compute_all_agree(capsys):
    code, out, _ = run(capsys, "compute", "--family", "path:6", "--leaks", "1", "--method", "all")
    data = json.loads(out)
    assert code == 0 and data["agreement"] is True
    assert data["methods"] == {"exact": 2, "forts": 2, "formula": 2}


def test_compute_formula_inapplicable(capsys):
    code, _, err = run(capsys, "compute", "--family", "petersen:9,1", "--leaks", "2", "--method", "formula")
    assert code == 3 and "not covered" in err


def test_compute_forts_cap(capsys):
    code, _, _ = run(capsys, "compute", "--family", "path:25", "--leaks", "1", "--method", "forts")
    assert code == 3


def test_compute_timeout(capsys):
    code, _, err = run(capsys, "compute", "--family", "petersen:11,3", "--leaks", "2", "--timeout", "0.3")
    assert code == 4 and "lower bound" in err


@pytest.mark.parametrize("argv", [
    ["compute", "--graph6", "D?~", "--leaks", "1"],
    ["compute", "--family", "petersen:4,2", "--leaks", "1"],
    ["compute", "--family", "wheel:5", "--leaks", "1"],
    ["compute", "--family", "path:4", "--leaks", "-1"],
    ["compute", "--file", "/nonexistent/graph.txt", "--leaks", "1"],
])
def test_parse_and_domain_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_stdin_edge_list(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("4\n0 1\n1 2\n2 3\n"))
    code, out, _ = run(capsys, "forts", "--file", "-", "--leaks", "0")
    assert code == 0 and json.loads(out)["count"] >= 1


def test_dot_output(capsys, tmp_path):
    dot = tmp_path / "w.dot"
    code, _, _ = run(capsys, "compute", "--family", "cycle:5", "--leaks", "1", "--dot", str(dot))
    assert code == 0 and "fillcolor" in dot.read_text()


def test_deterministic_output(capsys):
    a = run(capsys, "compute", "--family", "petersen:8,3", "--leaks", "1")[1]
    b = run(capsys, "--threads", "3", "compute", "--family", "petersen:8,3", "--leaks", "1")[1]
    assert a == b


def test_bad_threads(capsys):
    assert run(capsys, "--threads", "0", "compute", "--family", "path:3", "--leaks", "1")[0] == 2


def test_verify_theorems(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "uni-z1", "--count", "15", "--n-max", "9")
    assert code == 0 and json.loads(out)["result"] == "PASS"
    code, out, _ = run(capsys, "verify", "--theorem", "gp-one-leaky", "--n", "15", "--k", "3")
    assert code == 0 and json.loads(out)["size"] == 8
    assert run(capsys, "verify", "--theorem", "gp-two-leaky", "--n", "50", "--k", "7")[0] == 2
    assert run(capsys, "verify", "--theorem", "gp-one-leaky")[0] == 2
    assert run(capsys, "verify", "--theorem", "edge-bound", "--count", "10")[0] == 0


def test_audit_and_timing(capsys):
    code, out, err = run(capsys, "--timing", "audit", "--n-max", "4")
    assert code == 0 and json.loads(out)["complete"] and "runtime" in err
    assert run(capsys, "audit", "--n-max", "6", "--timeout", "0")[0] == 4


def test_gap_probe(capsys):
    code, out, _ = run(capsys, "gap-probe", "--k", "7", "--n-from", "48", "--n-to", "48")
    assert code == 0 and json.loads(out)[0]["n"] == 48


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "leakyforcing", "compute", "--graph6", "Bw",
                           "--leaks", "1"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 2
