from __future__ import annotations

import json

from ncjordan.suite import (OPERATIONS, SuiteEntry, load_manifest, run_entry, select,
                            verify_paper_suite)


def test_manifest_is_well_formed():
    entries = load_manifest()
    ids = [e.id for e in entries]
    assert len(ids) == len(set(ids))
    for e in entries:
        assert e.op in OPERATIONS
        assert e.anchor and e.tags
        assert e.expect in ("pass", "fail")


def test_every_criterion_has_entries():
    ids = {e.id.split(".")[0] for e in load_manifest()}
    assert {f"c{i:02d}" for i in range(1, 15)} <= ids


def test_select_sorts_and_filters():
    entries = load_manifest()
    chosen = select(list(reversed(entries)), "peirce", None)
    assert [e.id for e in chosen] == sorted(e.id for e in chosen)
    assert all("peirce" in e.tags or "peirce" in e.id for e in chosen)
    assert all(e.field == "p3" for e in select(entries, None, "p3"))
    assert [e.id for e in select(entries, "c13.*", None)] == \
        ["c13.iso-half", "c13.iso-half-p7", "c13.iso-m11"]


def test_reports_are_byte_identical():
    a = verify_paper_suite("mutation").to_json()
    b = verify_paper_suite("mutation").to_json()
    assert a == b
    assert "elapsed" not in a
    assert "elapsed" in verify_paper_suite("c10.q1").to_json(timings=True)


def test_verdict_mapping():
    ok = SuiteEntry("t.ok", "identity", "a", ["t"], "Dt(2,1,0,0)", {"identity": "ncj"})
    bad = SuiteEntry("t.bad", "identity", "a", ["t"], "Dt(2,1,0,0)", {"identity": "jordan"})
    assert run_entry(ok).verdict == "PASS"
    assert run_entry(bad).verdict == "FAIL"
    bad.expect = "fail"
    assert run_entry(bad).verdict == "XFAIL"
    ok.expect = "fail"
    assert run_entry(ok).verdict == "XPASS"


def test_crash_becomes_failure_with_error_detail():
    e = SuiteEntry("t.crash", "identity", "a", ["t"], "Nope(1)", {"identity": "ncj"})
    r = run_entry(e)
    assert r.verdict == "FAIL" and "error" in r.detail


def test_report_json_shape():
    rep = verify_paper_suite("c13.iso-m11")
    data = json.loads(rep.to_json())
    assert data["summary"]["PASS"] == 1
    assert data["entries"][0]["anchor"]
