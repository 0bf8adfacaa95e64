"""Verification harness: statuses, pinned deviation set, and determinism."""

from __future__ import annotations

import pytest

from chevf4.harness import CheckResult, report_format, run_all

EXPECTED_REPORTED = {
    "bracket-opposite-printed-example",
    "h-diagonal-2",
    "h-diagonal-3",
    "h-diagonal-4",
    "w-cartan-block-2",
    "w-cartan-block-3",
    "w-expansion-2",
    "w-expansion-3",
    "w-expansion-transcription-fixes",
    "w-parameter-orientation",
    "w-order-23",
    "t-diagonal-1",
    "projector-projector-product-eighth-matches-display",
    "projector-b-minus-shift-matches-display",
    "projector-b-plus-shift-matches-display",
    "projector-c-matches-display",
    "projector-final-claim-computed-route",
    "projector-final-claim-displayed-route",
    "coordinate-torus-combo-22",
    "rigidity-kernel-p3",
    "inverting-element-reference",
}


@pytest.fixture(scope="module")
def results():
    return run_all("zmod:27", seed=0)


def test_no_check_fails(results):
    failures = [r for r in results if r.status == "fail"]
    assert failures == []


def test_reported_set_is_exactly_the_catalogued_deviations(results):
    reported = {r.check for r in results if r.status == "reported"}
    assert reported == EXPECTED_REPORTED


def test_every_status_is_known(results):
    assert all(r.status in {"pass", "reported", "fail"} for r in results)
    assert len(results) == 65
    names = [r.check for r in results]
    assert len(set(names)) == len(names)


def test_citations_are_wellformed(results):
    for r in results:
        assert r.citation == "derived" or r.citation.startswith("printed:")


def test_report_format_summary(results):
    report = report_format(results)
    summary = report["summary"]
    assert summary["total"] == len(results) == 65
    assert summary["pass"] + summary["reported"] + summary["fail"] == summary["total"]
    assert summary["fail"] == 0
    assert summary["reported"] == len(EXPECTED_REPORTED)
    assert len(report["checks"]) == summary["total"]
    first = report["checks"][0]
    assert set(first) == {"check", "citation", "status", "detail"}


def test_check_result_document_shape():
    result = CheckResult(check="demo", citation="derived", status="pass", detail="ok")
    doc = result.to_document()
    assert doc == {"check": "demo", "citation": "derived", "status": "pass", "detail": "ok"}


def test_determinism_same_ring_and_seed(results):
    again = run_all("zmod:27", seed=0)
    assert [(r.check, r.status, r.detail) for r in again] == [
        (r.check, r.status, r.detail) for r in results
    ]


def test_ring_object_and_descriptor_agree(results):
    from chevf4.rings import parse_ring_descriptor

    ring = parse_ring_descriptor("zmod:27")
    via_object = run_all(ring, seed=0)
    assert [(r.check, r.status) for r in via_object] == [(r.check, r.status) for r in results]


def test_different_seed_still_clean():
    results = run_all("zmod:27", seed=99)
    assert all(r.status != "fail" for r in results)
    reported = {r.check for r in results if r.status == "reported"}
    assert reported == EXPECTED_REPORTED
