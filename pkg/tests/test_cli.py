import io
import json
import subprocess
import sys

import pytest

from ospbi import numeric
from ospbi.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_relations():
    code, out, _ = call("relations")
    assert code == 0
    assert out.rstrip().endswith("16/16 passed")


def test_r_properties_json():
    code, out, _ = call("r-properties", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_casimir_explicit():
    code, out, _ = call("casimir", "--n", "3", "--subset", "1,3", "--explicit")
    assert code == 0
    assert "equal: True" in out
    assert "16*Fm*P # P # Fp" in out


def test_casimir_json_reparses():
    from ospbi.tensor import evaluate

    code, out, _ = call("casimir", "--n", "4", "--subset", "{2,4}", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["subset"] == [2, 4]
    assert len(evaluate(doc["casimir"])) == doc["terms"]


def test_verify_bi_n3():
    code, out, _ = call("verify-bi", "--n", "3", "--jobs", "1")
    assert code == 0
    assert "28/28 passed" in out
    assert "casimirs: 7" in out


def test_verify_bi_byte_stable():
    runs = [call("verify-bi", "--n", "3", "--jobs", "2", "--format", "json")[1] for _ in range(2)]
    assert runs[0] == runs[1]
    assert len(json.loads(runs[0])["relations"]) == 28


def test_verify_bi_diagnostics():
    code, out, _ = call("verify-bi", "--n", "3", "--jobs", "1", "--diagnostics")
    assert code == 0
    assert "diagnostic Cbar_13: centralizing=False" in out


def test_paths():
    code, out, _ = call("paths", "--n", "4", "--subset", "1,3")
    assert code == 0
    assert "FAIL" not in out


def test_eval_default_rep():
    code, out, _ = call("eval", "--expr", "C")
    assert code == 0
    assert "max |entry| = 3" in out


def test_eval_tensor_json():
    code, out, _ = call("eval", "--expr", "Fp # P + 1 # Fp", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["arity"] == 2
    assert len(doc["matrix"]) == 9


def test_eval_corrupted_rep(tmp_path):
    doc = numeric.rep_to_dict(numeric.fundamental_rep())
    doc["matrices"]["Fp"][0][1] = "0"
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(doc))
    code, out, _ = call("eval", "--rep", str(path), "--expr", "H")
    assert code == 1
    assert "FAIL" in out


def test_eval_unreadable_rep(tmp_path):
    path = tmp_path / "rep.json"
    path.write_text("[")
    code, _, err = call("eval", "--rep", str(path), "--expr", "H")
    assert code == 2
    assert json.loads(err)["error"] == "RepError"
    code, _, err = call("eval", "--rep", str(tmp_path / "missing.json"), "--expr", "H")
    assert code == 2


def test_eval_budget():
    code, _, err = call("eval", "--expr", "C # C # C", "--memory-budget", "100")
    assert code == 2
    assert json.loads(err)["error"] == "MemoryBudgetError"


@pytest.mark.parametrize(
    "argv",
    [
        ("casimir", "--n", "3", "--subset", "1,4"),
        ("casimir", "--n", "3", "--subset", "a"),
        ("verify-bi", "--n", "1"),
        ("verify-bi", "--n", "3", "--jobs", "0"),
        ("r-properties", "--n", "6"),
        ("eval", "--expr", "Fp +"),
        ("eval", "--expr", "Q"),
    ],
)
def test_invalid_input(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert "message" in json.loads(err)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ospbi", "relations", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"]
