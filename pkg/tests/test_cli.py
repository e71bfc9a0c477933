import csv
import io
import json
import subprocess
import sys

import pytest

from pathdecomp.cli import run_cli


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


@pytest.fixture
def spaced_file(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run_cli(["gen", "--family", "spaced_triangle_eulerian", "n=11", "t=1", "--seed", "3", "--output", str(out)]) == 0
    return out


def test_decompose_then_verify(tmp_path, spaced_file, capsys):
    cert_path = tmp_path / "cert.json"
    assert run_cli(["decompose", "--input", str(spaced_file), "--output", str(cert_path)]) == 0
    cert = json.loads(cert_path.read_text())
    assert cert["n"] == 11 and cert["bound"]["pass"] is True
    assert cert["bound"]["achieved"] == len(cert["paths"]) <= 6
    assert cert["ledger"]["final_count"] == len(cert["paths"])
    assert run_cli(["verify", "--input", str(spaced_file), str(cert_path)]) == 0
    assert capsys.readouterr().out.strip().endswith("ok")


def test_tampered_certificate(tmp_path, spaced_file, capsys):
    cert_path = tmp_path / "cert.json"
    run_cli(["decompose", "--input", str(spaced_file), "--output", str(cert_path)])
    cert = json.loads(cert_path.read_text())
    cert["paths"][0] = cert["paths"][0][:-1]
    cert_path.write_text(json.dumps(cert))
    assert run_cli(["verify", "--input", str(spaced_file), str(cert_path)]) == 1
    assert "uncovered" in capsys.readouterr().err


def test_verify_bound_failure(tmp_path, capsys):
    g = write(tmp_path, "p.txt", "0 1\n1 2\n2 3\n3 4\n")
    cert = write(tmp_path, "c.json", json.dumps({"paths": [[0, 1], [1, 2], [2, 3], [3, 4]]}))
    assert run_cli(["verify", "--input", str(g), str(cert)]) == 0
    assert run_cli(["verify", "--input", str(g), str(cert), "--bound", "3n5"]) == 1


def test_verify_garbage_certificate(tmp_path, capsys):
    g = write(tmp_path, "p.txt", "0 1\n")
    cert = write(tmp_path, "c.json", "{not json")
    assert run_cli(["verify", "--input", str(g), str(cert)]) == 2


def test_triangle_hypothesis_failure(tmp_path, capsys):
    g = write(tmp_path, "t.txt", "0 1\n1 2\n2 0\n")
    assert run_cli(["decompose", "--input", str(g)]) == 3


def test_malformed_input(tmp_path, capsys):
    g = write(tmp_path, "bad.txt", "0 1 2\n")
    assert run_cli(["decompose", "--input", str(g)]) == 2
    assert run_cli(["decompose", "--input", str(tmp_path / "missing.txt")]) == 2


def test_unknown_flag(capsys):
    assert run_cli(["decompose", "--frob"]) == 2


def test_infeasible_gen(capsys):
    assert run_cli(["gen", "--family", "spaced_triangle_eulerian", "n=8", "t=2"]) == 2
    assert run_cli(["gen", "--family", "flower", "bogus=1"]) == 2


def test_exact(tmp_path, capsys):
    g = write(tmp_path, "k23.txt", "0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n")
    assert run_cli(["exact", "--input", str(g)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["optimal"] is True and len(out["paths"]) == 2


def test_bench_csv(capsys):
    code = run_cli(["bench", "family=spaced_triangle_eulerian", "n=20", "t=2", "seeds=4"])
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert code == 0
    assert [int(r["seed"]) for r in rows] == [0, 1, 2, 3]
    assert all(r["pass"] == "true" and int(r["count"]) <= int(r["allowed"]) for r in rows)


def test_module_entry_point(tmp_path):
    g = write(tmp_path, "c8.txt", "".join(f"{i} {(i + 1) % 8}\n" for i in range(8)))
    res = subprocess.run([sys.executable, "-m", "pathdecomp", "decompose", "--input", str(g)],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert len(json.loads(res.stdout)["paths"]) == 2
