import copy
import json

import pytest

from scottlab import verifiers as vf
from scottlab.cli import main as cli_main


def _small_specs():
    by_name = {s["name"]: s for s in vf.builtin_corpus()}
    return [by_name["C2"], by_name["S3"]]


def test_small_corpus_runs_clean():
    config = vf.CorpusConfig(groups=_small_specs())
    report, status = vf.run_corpus(config)
    assert status == 0
    assert report["meta"]["seedless"] is True
    assert report["meta"]["load_errors"] == []
    assert set(report["summary"]) >= {"kernel", "ishioka", "th1", "frobenius"}
    for s in report["summary"].values():
        assert s["counterexamples"] == 0


def test_entry_schema():
    config = vf.CorpusConfig(groups=_small_specs(), theorems=["frobenius", "th3"])
    report, status = vf.run_corpus(config)
    assert status == 0
    for e in report["instances"]:
        assert set(e) == {
            "theorem_id",
            "instance",
            "hypotheses_met",
            "hypotheses",
            "conclusion_holds",
            "vacuous",
            "status",
            "evidence",
            "runtime_ms",
        }
        assert e["status"] in ("pass", "vacuous")
        if not e["hypotheses_met"]:
            assert e["conclusion_holds"] is None


def test_broken_group_spec_reported_and_status_2():
    bad = {"name": "broken", "kind": "table", "table": [[0, 1], [1, 1]]}
    config = vf.CorpusConfig(groups=[bad] + _small_specs(), theorems=["frobenius"])
    report, status = vf.run_corpus(config)
    assert status == 2
    assert len(report["meta"]["load_errors"]) == 1
    assert report["meta"]["load_errors"][0]["spec_name"] == "broken"
    # the healthy groups still ran
    assert report["summary"]["frobenius"]["pass"] > 0


def test_timeout_becomes_inconclusive_and_status_3():
    by_name = {s["name"]: s for s in vf.builtin_corpus()}
    config = vf.CorpusConfig(
        groups=[by_name["S4"]], primes=(2,), theorems=["ishioka"], timeout=0.001
    )
    report, status = vf.run_corpus(config)
    assert status == 3
    assert any(e["status"] == "inconclusive-timeout" for e in report["instances"])


def test_inconclusive_tolerance_allows_timeouts():
    by_name = {s["name"]: s for s in vf.builtin_corpus()}
    config = vf.CorpusConfig(
        groups=[by_name["S4"]],
        primes=(2,),
        theorems=["ishioka"],
        timeout=0.001,
        inconclusive_tolerance=100,
    )
    _, status = vf.run_corpus(config)
    assert status == 0


def _strip_runtime(doc):
    doc = copy.deepcopy(doc)
    for e in doc["instances"]:
        e.pop("runtime_ms", None)
    return doc


def test_determinism_two_runs_identical():
    config = vf.CorpusConfig(groups=_small_specs(), theorems=["kernel", "th1", "coro"])
    r1, s1 = vf.run_corpus(config)
    r2, s2 = vf.run_corpus(config)
    assert s1 == s2 == 0
    assert json.dumps(_strip_runtime(r1), sort_keys=True) == json.dumps(
        _strip_runtime(r2), sort_keys=True
    )


def test_gating_assertion_in_theorem_report():
    with pytest.raises(AssertionError):
        vf.TheoremReport(
            theorem_id="x",
            instance={},
            hypotheses_met=False,
            hypotheses={},
            conclusion_holds=True,  # forbidden when gated out
            vacuous=True,
            evidence={},
        )


def test_sylow_selector_reduces_instances():
    config = vf.CorpusConfig(groups=_small_specs(), selector="sylow", theorems=["kernel"])
    report, status = vf.run_corpus(config)
    assert status == 0
    # 2 groups x 2 primes x 1 Sylow x 2 kernel-family checks
    assert len(report["instances"]) == 8


def test_cli_verify_builtin_subset(tmp_path):
    out = tmp_path / "report.json"
    rc = cli_main(
        [
            "verify",
            "--theorem",
            "frobenius",
            "--corpus",
            "builtin",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["frobenius"]["counterexamples"] == 0


def test_cli_verify_bad_corpus_dir(tmp_path):
    out = tmp_path / "report.json"
    rc = cli_main(
        ["verify", "--theorem", "frobenius", "--corpus", str(tmp_path / "nope"), "--out", str(out)]
    )
    assert rc == 2
    bad_dir = tmp_path / "corpus"
    bad_dir.mkdir()
    (bad_dir / "bad.json").write_text("{not json")
    rc = cli_main(["verify", "--theorem", "frobenius", "--corpus", str(bad_dir), "--out", str(out)])
    assert rc == 2


def test_cli_scott_and_fusion(tmp_path, capsys):
    spec = next(s for s in vf.builtin_corpus() if s["name"] == "S3")
    gfile = tmp_path / "s3.json"
    gfile.write_text(json.dumps(spec))
    rc = cli_main(["scott", "--group", str(gfile), "--p", "2", "--subgroup", ""])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["conditions"]["trivial_in_socle"] and doc["conditions"]["trivial_in_head"]
    rc = cli_main(["fusion", "--group", str(gfile), "--p", "2", "--subgroup", ""])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["saturated"] is True


def test_builtin_corpus_shape():
    specs = vf.builtin_corpus()
    assert len(specs) == 12
    names = [s["name"] for s in specs]
    assert len(set(names)) == 12
    assert sum(1 for s in specs if s.get("slow")) == 1  # A5 only
