import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from cubicsurf.cli import main
from cubicsurf.report import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("which", ["1", "2", "3", "4"])
def test_tables_json_validates(capsys, which):
    code, out, _ = run(capsys, "tables", which, "--format", "json")
    assert code == 0
    body = json.loads(out)
    jsonschema.validate(body, load_schema())
    assert body["table"] == which


def test_table1_identity_row(capsys):
    code, out, _ = run(capsys, "tables", "1", "--format", "json")
    rows = json.loads(out)["rows"]
    assert len(rows) == 25
    first = rows[0]
    assert first["key"] == "(1^6)"
    assert first["poly"] == [150, -185, 81, -15, 1]
    assert first["vanishes_at"] == [2, 3, 5]


def test_table_row_counts(capsys):
    for which, n in (("2", 9), ("3", 12), ("4", 19)):
        _, out, _ = run(capsys, "tables", which, "--format", "json")
        assert len(json.loads(out)["rows"]) == n


def test_table2_t0(capsys):
    _, out, _ = run(capsys, "tables", "2", "--format", "json")
    row = next(r for r in json.loads(out)["rows"] if r["key"] == 0)
    assert row["factored"] == "432(27q^3 - 17q^2 + 5q + 10)(q + 1)"


def test_csv_columns(capsys):
    _, out, _ = run(capsys, "tables", "1", "--format", "csv", "--atlas-names")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["class", "weight", "factored", "c0", "c1", "c2", "c3", "c4", "vanishes_at", "atlas"]
    assert rows[1][0] == "(1^6)" and rows[1][-1] == "1A"
    assert len(rows) == 26


@pytest.mark.parametrize("argv", [
    ["tables", "3", "--format", "md"],
    ["tables", "4", "--format", "csv"],
    ["distribution", "double-sixes", "--format", "json"],
    ["classes", "--format", "csv"],
    ["chars", "--format", "json"],
])
def test_deterministic(capsys, argv):
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b and a[0] == 0


def test_distributions(capsys):
    _, out, _ = run(capsys, "distribution", "points", "--format", "json")
    _, ref, _ = run(capsys, "tables", "2", "--format", "json")
    assert json.loads(out)["rows"] == json.loads(ref)["rows"]
    _, out, _ = run(capsys, "distribution", "tritangents", "--format", "json")
    _, ref, _ = run(capsys, "tables", "3", "--format", "json")
    assert json.loads(out)["rows"] == json.loads(ref)["rows"]
    code, out, _ = run(capsys, "distribution", "double-sixes", "--format", "json")
    body = json.loads(out)
    jsonschema.validate(body, load_schema())
    assert code == 0 and body["rows"][-1]["key"] == 36
    code, out, _ = run(capsys, "distribution", "lines", "--fiber", "uconf:2", "--format", "json")
    jsonschema.validate(json.loads(out), load_schema())


@pytest.mark.parametrize("argv", [
    ["tables", "5"],
    ["distribution", "planes"],
    ["distribution", "lines", "--fiber", "bogus:2"],
    ["tables", "1", "--format", "xml"],
    ["census", "--q", "3"],
    ["classify", "zz"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "03224", "--format", "json")
    body = json.loads(out)
    assert code == 0
    assert body["cls"] == "(1,5)"
    assert body["counts"]["n1"] == 9
    assert (body["class_size"], body["order"]) == (5184, 5)
    code, out, _ = run(capsys, "classify", "00001")
    assert code == 0 and "singular" in out
    coeffs = ["1"] + ["0"] * 19
    code, out, _ = run(capsys, "classify", *coeffs)
    assert code == 0 and "singular" in out


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "[PASS] counting.table1" in out and "25/25 rows matched" in out
    assert out.strip().splitlines()[-1].startswith("PASS")


def test_verify_fault_injection(capsys):
    code, out, _ = run(capsys, "verify", "--only", "chars", "--corrupt", "V6:(1^6)=5")
    assert code == 1
    assert "[FAIL] chars.orthogonality" in out
    assert "row <V1,V6>" in out


def test_census_byte_identical_across_jobs(tmp_path):
    outs = []
    for jobs in (1, 8):
        path = tmp_path / f"census{jobs}.json"
        proc = subprocess.run([sys.executable, "-m", "cubicsurf", "census", "--jobs", str(jobs), "-o", str(path)],
                              capture_output=True, text=True, timeout=900)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip() == "PASS census q=2: 25/25 classes agree"
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    body = json.loads(outs[0])
    assert body["per_class"]["1^6"]["observed"] == 0
    assert sorted(body["per_class"]["1,5"]) == ["expected", "observed", "orbit_sizes", "orbits"]
