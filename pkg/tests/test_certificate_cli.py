"""Pipeline orchestration, certificate serialization, CLI behavior."""

import json

import pytest

import sbcert.cli as cli
import sbcert.pipeline as pipeline
from sbcert.certificate import certificate_to_dict, certificate_to_json, _int_field
from sbcert.errors import NotPrime, RejectedOverride, WrongResidue
from sbcert.pipeline import PipelineOptions, run_pipeline

FAST = PipelineOptions(trials=10, norm_search_bound=0)


@pytest.fixture(scope="module")
def cert7_fast():
    return run_pipeline(7, FAST)


def test_pipeline_p7(cert7_fast):
    cert = cert7_fast
    assert cert.overall == "PASS"
    assert cert.passed
    assert (cert.p, cert.d, cert.k, cert.a) == (7, 2, 2, 2)
    assert cert.failed_stage is None
    assert cert.group.order == 21
    assert cert.obstruction.certificate_grade


def test_pipeline_rejects_bad_primes():
    with pytest.raises(WrongResidue):
        run_pipeline(11)
    with pytest.raises(NotPrime):
        run_pipeline(6)


def test_pipeline_rejects_cube_override():
    with pytest.raises(RejectedOverride):
        run_pipeline(7, PipelineOptions(a=6))
    with pytest.raises(RejectedOverride):
        run_pipeline(7, PipelineOptions(a=0))
    with pytest.raises(RejectedOverride):
        run_pipeline(7, PipelineOptions(a=14))


def test_pipeline_accepts_non_cube_override():
    cert = run_pipeline(7, PipelineOptions(a=9, trials=5, norm_search_bound=0))
    assert cert.passed and cert.a == 9
    negative = run_pipeline(7, PipelineOptions(a=-5, trials=5, norm_search_bound=0))
    assert negative.passed and negative.a == -5


def test_cli_oversized_search_bound_rejected(capsys):
    # 5^12 candidates at p=13 blows the enumeration cap
    assert cli.main(["--p", "13", "--norm-search-bound", "2"]) == 2
    assert "error" in capsys.readouterr().err


def test_certificate_deterministic_modulo_timings():
    first = run_pipeline(7, PipelineOptions(trials=5, norm_search_bound=1))
    second = run_pipeline(7, PipelineOptions(trials=5, norm_search_bound=1))
    assert certificate_to_json(first, include_timings=False) == certificate_to_json(
        second, include_timings=False
    )


def test_certificate_structure(cert7_fast):
    payload = certificate_to_dict(cert7_fast)
    expected_keys = [
        "schema_version", "p", "d", "k", "a", "seed", "trials", "overall",
        "failed_stage", "obstruction", "algebra_checks", "group",
        "imported_lemma_note", "timings_ms",
    ]
    assert list(payload.keys()) == expected_keys
    assert payload["group"]["order_histogram"] == {"1": 1, "3": 14, "7": 6}
    assert payload["obstruction"]["cubes_mod_p"] == [1, 6]
    parsed = json.loads(certificate_to_json(cert7_fast))
    assert parsed == payload


def test_large_int_serialization_rule():
    assert _int_field(7) == 7
    assert _int_field(2**62) == 2**62
    assert _int_field(2**70) == str(2**70)
    assert _int_field(-(2**70)) == str(-(2**70))


def test_failed_algebra_stage_serializes(monkeypatch):
    real = pipeline.run_algebra_checks

    def sabotaged(algebra, seed, trials):
        out = real(algebra, seed, trials)
        out["alpha_cubed_equals_a"] = False
        return out

    monkeypatch.setattr(pipeline, "run_algebra_checks", sabotaged)
    cert = run_pipeline(7, FAST)
    assert cert.overall == "FAIL"
    assert cert.failed_stage == "algebra"
    payload = json.loads(certificate_to_json(cert))
    assert payload["overall"] == "FAIL"
    assert payload["group"]["order"] == 21  # later stages still serialized


def test_failed_group_substage_named(monkeypatch):
    real = pipeline.group_report

    def sabotaged(algebra, cap=None):
        report = real(algebra, cap=cap)
        report.jordan_index = 21
        return report

    monkeypatch.setattr(pipeline, "group_report", sabotaged)
    cert = run_pipeline(7, FAST)
    assert cert.overall == "FAIL"
    assert cert.failed_stage == "group:jordan_index"


def test_cli_pass(tmp_path, capsys):
    out = tmp_path / "cert.json"
    code = cli.main(["--p", "7", "--trials", "5", "--norm-search-bound", "0",
                     "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["overall"] == "PASS"
    assert out.read_text().endswith("\n")
    captured = capsys.readouterr()
    assert "PASS" in captured.err
    assert captured.out == ""


def test_cli_stdout_and_quiet(capsys):
    code = cli.main(["--p", "7", "--trials", "5", "--norm-search-bound", "0", "--quiet"])
    assert code == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["p"] == 7
    assert captured.err == ""


def test_cli_rejections(capsys):
    assert cli.main(["--p", "11"]) == 2
    assert cli.main(["--p", "6"]) == 2
    assert cli.main(["--p", "7", "--a", "6"]) == 2
    captured = capsys.readouterr()
    assert "error" in captured.err


def test_cli_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["--p", "notanint"])
    assert exc.value.code == 2


def test_cli_fail_exit_code(monkeypatch, capsys):
    real = pipeline.run_algebra_checks

    def sabotaged(algebra, seed, trials):
        out = real(algebra, seed, trials)
        out["xi_alpha_twist"] = False
        return out

    monkeypatch.setattr(pipeline, "run_algebra_checks", sabotaged)
    code = cli.main(["--p", "7", "--trials", "5", "--norm-search-bound", "0", "--quiet"])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["overall"] == "FAIL" and payload["failed_stage"] == "algebra"
