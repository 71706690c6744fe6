import json
from importlib import resources

import jsonschema
import pytest

from conftest import plus_one
from fibharm.cli import UsageError, main, parse_sets
from fibharm.registry import lookup, registry_entries


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_all(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert len(out.strip().splitlines()) == len(registry_entries()) >= 55


def test_list_family(capsys):
    code, out, _ = run(capsys, "list", "--family", "BT-GQ")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 10
    assert all(line.split("\t")[1] == "BT-GQ" for line in lines)


def test_list_unknown_id(capsys):
    code, _, err = run(capsys, "list", "--id", "nope")
    assert code == 2 and "usage" in err


def test_eval_outputs(capsys):
    assert run(capsys, "eval", "--id", "rec-FF-part", "--set", "n=1")[1].strip() == "lhs = -1, rhs = -1, EQUAL"
    out = run(capsys, "eval", "--id", "prop1-ln2-a", "--set", "n=2,seed=0:1")[1]
    assert out.count("ln2") == 2 and out.strip().endswith("EQUAL")


def test_eval_shift_simple_as_printed(capsys):
    # the display as printed fails here; see the audited status
    out = run(capsys, "eval", "--id", "shift-simple", "--set", "n=3,r=0,s=0")[1]
    assert out.strip() == "lhs = 31/6, rhs = 22/3, UNEQUAL"
    out = run(capsys, "eval", "--id", "shift-simple", "--set", "n=3,r=0,s=0", "--reading", "coefficient 2k+2s+1")[1]
    assert out.strip().endswith("EQUAL") and "UNEQUAL" not in out


def test_eval_skip(capsys):
    out = run(capsys, "eval", "--id", "gould2-G", "--set", "n=2,b=2,t=0,seed=0:1")[1]
    assert out.startswith("SKIPPED(")


def test_eval_usage_errors(capsys):
    assert run(capsys, "eval", "--id", "rec-FF-part", "--set", "n=1/2")[0] == 2
    assert run(capsys, "eval", "--id", "rec-FF-part", "--set", "n=x")[0] == 2
    assert run(capsys, "eval", "--id", "rec-FF-part", "--set", "n=1..3")[0] == 2
    assert run(capsys, "eval", "--id", "rec-FF-part")[0] == 2


def test_set_syntax():
    from fractions import Fraction

    sets = parse_sets(["n=1..3,m=-3/2", "seed=0:1", "seed=2:1", "x=-1/2..3/2"])
    assert sets["n"] == [1, 2, 3]
    assert sets["m"] == [Fraction(-3, 2)]
    assert sets["seed"] == [(0, 1), (2, 1)]
    assert sets["x"] == [Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)]
    with pytest.raises(UsageError):
        parse_sets(["n"])
    with pytest.raises(UsageError):
        parse_sets(["n=1..1/2"])


def test_verify_rec_ff_part(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "rec-FF-part", "--set", "n=1..60")
    assert code == 0 and "checked=60" in out


def test_verify_family_report_validates(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, _, _ = run(capsys, "verify", "--family", "ABEL-FIB", "--n-max", "8", "--report", str(path), "--verbose")
    assert code == 0
    doc = json.loads(path.read_text())
    schema = json.loads(resources.files("fibharm.data").joinpath("report.schema.json").read_text())
    jsonschema.validate(doc, schema)
    assert all(s["elapsed_ms"] is None for s in doc["summaries"])
    ids = [r["id"] for r in doc["reports"]]
    assert ids == sorted(ids)


def test_verify_timings(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "verify", "--ids", "conv-sq", "--report", str(path), "--timings")
    assert json.loads(path.read_text())["summaries"][0]["elapsed_ms"] is not None


def test_verify_tsv(capsys, tmp_path):
    path = tmp_path / "out.tsv"
    code, _, _ = run(capsys, "verify", "--ids", "conv-sq", "--n-max", "4", "--report", str(path), "--format", "tsv")
    rows = path.read_text().splitlines()
    assert code == 0
    assert rows[0].split("\t") == ["id", "assignment", "lhs", "rhs", "outcome", "reason", "elapsed_ms"]
    assert len(rows) == 6 and rows[3].startswith("conv-sq\tn=2\t1\t1\tEqual")


def test_report_path_from_environment(capsys, tmp_path, monkeypatch):
    path = tmp_path / "env.json"
    monkeypatch.setenv("FIBHARM_REPORT", str(path))
    run(capsys, "verify", "--ids", "conv-sq", "--n-max", "3")
    assert json.loads(path.read_text())["summaries"][0]["id"] == "conv-sq"


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--ids", "nope")[0] == 2
    assert run(capsys, "verify", "--ids", "conv-sq", "--set", "zz=1")[0] == 2
    assert run(capsys, "verify", "--ids", "conv-sq", "--set", "n=1/2")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "--format", "xml"])
    assert info.value.code == 2


def test_verify_mutated_exit_1(capsys, patched_entry):
    e = lookup("conv-sq")
    patched_entry("conv-sq", rhs=plus_one(e.rhs))
    assert run(capsys, "verify", "--ids", "conv-sq")[0] == 1


def test_verify_internal_error_exit_3(capsys, patched_entry):
    def overflow(p, X):
        return X.ln2 * X.ln2

    patched_entry("conv-sq", rhs=overflow)
    code, _, err = run(capsys, "verify", "--ids", "conv-sq")
    assert code == 3 and "DegreeOverflow" in err


def test_verify_inexact_value_exit_3(capsys, patched_entry):
    patched_entry("conv-sq", rhs=lambda p, X: 0.5)
    assert run(capsys, "verify", "--ids", "conv-sq")[0] == 3


def test_audit_out(capsys, tmp_path):
    path = tmp_path / "st.json"
    code, out, _ = run(capsys, "audit", "--ids", "conv-sq", "--write", "--out", str(path))
    assert code == 0 and "ConfirmedPass" in out
    assert json.loads(path.read_text())["entries"]["conv-sq"]["status"] == "ConfirmedPass"


def test_suites(capsys):
    code, out, _ = run(capsys, "suites", "--n-max", "20", "--r-max", "4")
    assert "lemma2\tequal=168\tunequal=0" in out
    assert code == 1  # two displayed reduction formulas do not hold


def test_module_entry_point():
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-m", "fibharm", "list", "--id", "conv-sq"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("conv-sq\t")
