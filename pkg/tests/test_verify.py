import json

import pytest

from permideal.algebra import Ring, TermOrder
from permideal.verify import CHECKS, CheckResult, Report, run_check, run_suite, SuiteConfig

R33 = Ring.of(3, 3)


def test_report_key_order_and_null_timings():
    rep = run_suite(R33, checks=["gb.equality", "gap.module"])
    d = json.loads(rep.to_json())
    assert list(d) == ["schema_version", "tool_version", "shape", "field", "order", "checks"]
    assert [c["id"] for c in d["checks"]] == ["gap.module", "gb.equality"]
    assert list(d["checks"][0]) == ["id", "status", "expected", "actual", "detail", "elapsed_ms"]
    assert all(c["elapsed_ms"] is None for c in d["checks"])
    assert all(isinstance(c["elapsed_ms"], int) for c in json.loads(rep.to_json(timings=True))["checks"])


def test_json_is_deterministic():
    a = run_suite(R33, checks=["gb.equality", "radical.basis", "primes.minimal"]).to_json()
    b = run_suite(R33, checks=["primes.minimal", "radical.basis", "gb.equality"]).to_json()
    assert a == b


def test_failed_iff_any_fail():
    base = dict(shape=R33.shape, field=R33.field, order=TermOrder())
    assert not Report(checks=[CheckResult("a", "pass"), CheckResult("b", "skipped")], **base).failed
    assert Report(checks=[CheckResult("a", "pass"), CheckResult("b", "fail")], **base).failed
    rep = Report(checks=[CheckResult("a", "timeout")], **base)
    assert rep.timed_out and not rep.failed


def test_char2_skips_main_checks():
    rep = run_suite(Ring.of(3, 3, 2), checks=["gb.equality", "radical.basis", "certificates.membership"])
    assert {c.status for c in rep.checks} == {"skipped"}


def test_preconditions_skip():
    rep = run_suite(Ring.of(2, 3), checks=["decomposition.primary", "closure.integral"])
    assert [c.status for c in rep.checks] == ["skipped", "skipped"]


def test_mismatch_is_a_failure(monkeypatch):
    def broken(cfg):
        return CheckResult("gb.equality", "", expected="24", actual="23")

    monkeypatch.setitem(CHECKS, "gb.equality", broken)
    assert run_check("gb.equality", SuiteConfig(R33)).status == "fail"


def test_unknown_check():
    with pytest.raises(KeyError):
        run_suite(R33, checks=["no.such"])


def test_text_report():
    text = run_suite(R33, checks=["gb.equality"]).to_text()
    assert text.splitlines()[0] == "shape 3x3  field Q  order diag-lex"
    assert text.splitlines()[1].split() == ["gb.equality", "pass"]
