"""Family dossiers and the reproduction suite."""

import json

import pytest

from wpsurf.errors import InvalidInput
from wpsurf.reports import (
    FamilyReport,
    ReportStageError,
    report_family,
    reproduce_paper,
)


@pytest.fixture(scope="module")
def report_b():
    return report_family("b")


@pytest.fixture(scope="module")
def summary():
    return reproduce_paper(roundtrip_trials=1)


def test_report_contents(report_b):
    assert isinstance(report_b, FamilyReport)
    assert report_b.case == "b"
    assert report_b.hodge == (1, 17, 1)
    assert report_b.moduli == 17
    assert report_b.quasi_smooth["basic"]["verdict"] is True
    assert report_b.quasi_smooth["generic"]["verdict"] is True
    assert report_b.invariants["noether_holds"] is True
    assert report_b.transcendental["passed"] is True
    assert report_b.torelli["basic"]["kernel_dimension"] == 1
    assert report_b.fibration["euler_total"] == 24


def test_report_dict_key_order_and_json_round_trip(report_b):
    d = report_b.to_dict()
    assert list(d.keys()) == [
        "case", "symbol", "amplitude", "hodge", "moduli", "basic_polynomial",
        "generic_polynomial", "quasi_smooth", "singularities", "invariants",
        "picard_gram", "transcendental", "torelli", "fibration",
    ]
    assert json.loads(report_b.to_json()) == d


def test_report_text_rendering(report_b):
    text = report_b.render_text()
    assert "family (b)" in text
    assert "(12,[1,2,3,5])" in text
    assert "noether" in text


def test_report_determinism(report_b):
    again = report_family("b")
    assert again.to_json() == report_b.to_json()


def test_report_rejects_unknown_case():
    with pytest.raises(InvalidInput):
        report_family("q")


def test_stage_error_names_the_failing_stage(monkeypatch):
    import wpsurf.reports as R

    def boom(F):
        raise ValueError("injected")

    monkeypatch.setattr(R, "torelli_test", boom)
    with pytest.raises(ReportStageError) as exc:
        report_family("a")
    assert exc.value.stage == "torelli-basic"
    assert isinstance(exc.value.cause, ValueError)


def test_reproduce_summary_is_green(summary):
    assert summary.ok
    counts = summary.counts
    assert counts["fail"] == 0
    assert counts["pass"] + counts["pass-with-correction"] == len(summary.checks)
    assert len(summary.checks) == 52
    ids = [c.check_id for c in summary.checks]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)


def test_reproduce_documented_corrections(summary):
    corrected = {c.check_id for c in summary.checks if c.status == "pass-with-correction"}
    assert "04.torelli-basic-b" in corrected
    assert "09.disc-form-values" in corrected
    for c in summary.checks:
        if c.status == "pass-with-correction":
            assert c.annotation


def test_reproduce_json_round_trip_and_render(summary):
    d = summary.to_dict()
    assert json.loads(summary.to_json()) == d
    assert d["total"] == 52 and d["ok"] is True
    text = summary.render_text()
    assert "52 checks" in text and "OK" in text


def test_reproduce_corrupt_self_test():
    s = reproduce_paper(roundtrip_trials=1, corrupt="10.graph-lattice-2-3-7")
    assert not s.ok
    bad = next(c for c in s.checks if c.check_id == "10.graph-lattice-2-3-7")
    assert bad.status == "fail"
    assert "corrupted" in bad.annotation


def test_reproduce_unknown_corrupt_id():
    with pytest.raises(InvalidInput):
        reproduce_paper(roundtrip_trials=1, corrupt="zz.not-a-check")


def test_reproduce_determinism():
    a = reproduce_paper(roundtrip_trials=1).to_json()
    b = reproduce_paper(roundtrip_trials=1).to_json()
    assert a == b
