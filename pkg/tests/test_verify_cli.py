import json

import pytest

from assocforms.milnor import closed_form_delta_phi
from assocforms.scalars import QQ
from assocforms.verify import checks
from assocforms.verify.cli import main
from assocforms.verify.report import parse_selection, run_check, run_suite


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_registry_is_complete():
    assert checks.CHECK_IDS == [f"V{i}" for i in range(1, 21)]
    assert all(c.anchor for c in checks.CHECKS)
    assert {c.mode for c in checks.CHECKS} <= {"symbolic-full", "symbolic-family", "sampled"}


def test_selection():
    assert parse_selection("v7,V1,V7") == ["V1", "V7"]
    assert parse_selection(None) == checks.CHECK_IDS
    with pytest.raises(KeyError):
        parse_selection("V99")


def test_fast_checks_pass():
    report = run_suite("V1,V2,V3,V4,V7,V9,V10,V15,V20", samples=5, seed=3)
    assert report.ok, report.to_text()
    assert report.summary == {"total": 9, "passed": 9, "failed": 0}


def test_report_fields():
    doc = run_check("V1", samples=4, seed=0).to_dict()
    assert list(doc)[:6] == ["id", "anchor", "mode", "samples", "verdict", "duration_ms"]
    assert doc["verdict"] == "pass" and doc["samples"] == 4 and doc["duration_ms"] is None
    assert "sampling_domain" in doc and doc["note"] == "exact on each sample"
    assert "Schwartz-Zippel" in run_check("V11", samples=2).note
    assert run_check("V1", samples=2, timings=True).duration_ms is not None


def test_verify_json_is_deterministic(capsys):
    a = run_cli(capsys, "verify", "--checks", "V1,V6", "--samples", "3", "--seed", "11", "--format", "json")
    b = run_cli(capsys, "verify", "--checks", "V1,V6", "--samples", "3", "--seed", "11", "--format", "json")
    assert a[0] == 0 and a[1] == b[1]
    doc = json.loads(a[1])
    assert doc["config"] == {"checks": ["V1", "V6"], "samples": 3, "seed": 11}
    assert [c["id"] for c in doc["checks"]] == ["V1", "V6"]


def test_wrong_identity_is_caught(monkeypatch, capsys):
    # perturb the closed form by a factor of two: V7 must fail with a witness
    monkeypatch.setattr(checks, "closed_form_delta_phi", lambda f: closed_form_delta_phi(f) * QQ(2))
    result = run_check("V7")
    assert result.verdict == "fail" and result.witness is not None
    code, out, _ = run_cli(capsys, "verify", "--checks", "V7")
    assert code == 1 and "FAIL" in out and "witness" in out


def test_crashing_check_is_reported(monkeypatch):
    def boom(samples, r):
        raise RuntimeError("kaput")

    monkeypatch.setitem(checks.BY_ID, "V3", checks.Check("V3", "x", checks.SAMPLED, boom))
    result = run_check("V3")
    assert result.verdict == "fail" and "kaput" in result.witness["error"]


def test_assoc_cli(capsys):
    code, out, _ = run_cli(capsys, "assoc", "z1^4+z2^4", "--n", "2")
    assert code == 0 and "(1/24) z1*^2 z2*^2" in out
    code, out, _ = run_cli(capsys, "assoc", "z1^2 z2^2", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["associated_form"] is None and doc["delta_phi"]["path"] == "closed-form"


def test_invariants_and_classify_cli(capsys):
    code, out, _ = run_cli(capsys, "invariants", "z1^3+z2^3+z3^3", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["I4"] == "0" and doc["stability"] == "stable"
    code, out, _ = run_cli(capsys, "classify", "z1^2 z2^2", "--n", "2")
    assert code == 0 and "strictly-semistable" in out
    code, out, _ = run_cli(capsys, "classify", "z1^4", "--n", "2")
    assert "unstable" in out


def test_form_from_file(tmp_path, capsys):
    p = tmp_path / "f.txt"
    p.write_text("z1^4 + 6 z1^2 z2^2 + z2^4")
    code, out, _ = run_cli(capsys, "assoc", f"@{p}", "--n", "2")
    assert code == 0 and "Phi(f)" in out


def test_synthesize_cli(capsys):
    code, out, _ = run_cli(capsys, "synthesize", "I2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["entries"][0]["weight"] == 4
    code, out, _ = run_cli(capsys, "synthesize", "2,4,3,0", "--format", "json")
    assert json.loads(out)["dimension"] == 1


def test_usage_errors(capsys):
    assert run_cli(capsys, "assoc", "z1^+", "--n", "2")[0] == 2
    assert run_cli(capsys, "assoc", "z1^4")[0] == 2
    assert run_cli(capsys, "verify", "--checks", "V42")[0] == 2
    assert run_cli(capsys, "synthesize", "1,2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


@pytest.mark.slow
def test_full_suite_passes(capsys):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0 and out.rstrip().endswith("20/20 checks passed")
