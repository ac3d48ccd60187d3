"""Shared test fixtures and the acceptance-suite summary hook."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from ontorec.annotator import Annotation, MatchType

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("ci")

# outcome per acceptance-suite test, printed as a one-line-per-criterion summary
_acceptance_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance_outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_outcomes.items():
        label = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{label}  {name}")


def make_annotation(
    ontology: str = "ONT",
    class_id: str = "C1",
    match_type: MatchType = MatchType.PREF,
    start: int = 0,
    end: int = 0,
    matched_text: str = "x",
    keyword_index: int | None = None,
) -> Annotation:
    return Annotation(
        ontology_acronym=ontology,
        class_id=class_id,
        match_type=match_type,
        start=start,
        end=end,
        matched_text=matched_text,
        keyword_index=keyword_index,
    )


@pytest.fixture
def ann_factory():
    return make_annotation
