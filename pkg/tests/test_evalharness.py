"""Experiment harness: top-1 coverage metric and dataset sweeps."""

from __future__ import annotations

import json

import pytest

from ontorec.errors import MissingFixtures, NoAnnotatableWords
from ontorec.evalharness import (
    ExperimentReport,
    discover_datasets,
    run_experiment,
    top1_coverage,
)
from ontorec.fixtures import (
    DUP_TEXT_SHORT,
    MULTIWORD_INPUT,
    duplicate_class_repository,
    multiword_repository,
    write_bundled_suite,
)
from ontorec.pipeline import Recommender, RecommendRequest


@pytest.fixture(scope="module")
def suite(tmp_path_factory):
    root = tmp_path_factory.mktemp("suite")
    corpus_dir, fixtures_dir = write_bundled_suite(root)
    return corpus_dir, fixtures_dir


# ---------------------------------------------------------------------------
# top-1 coverage


def test_top1_coverage_text():
    rec = Recommender(duplicate_class_repository())
    # v1 puts the duplicate-heavy ontology first; it covers 2 of the 6
    # annotatable words (eye, skin)
    v1 = rec.recommend(RecommendRequest(input=DUP_TEXT_SHORT, algorithm="v1"))
    assert v1.entries[0].members == ("DUPANAT",)
    assert top1_coverage(v1) == pytest.approx(100.0 * 2 / 6)
    # v2 puts the broad ontology first; it covers every annotatable word
    v2 = rec.recommend(RecommendRequest(input=DUP_TEXT_SHORT))
    assert top1_coverage(v2) == 100.0


def test_top1_coverage_keywords():
    rec = Recommender(multiword_repository())
    resp = rec.recommend(RecommendRequest(input=MULTIWORD_INPUT, input_type="keywords"))
    # FULLPHRASE covers one of the two keywords completely
    assert resp.entries[0].members == ("FULLPHRASE",)
    assert top1_coverage(resp) == 50.0


def test_top1_coverage_keywords_partial_words_do_not_count():
    rec = Recommender(multiword_repository())
    resp = rec.recommend(RecommendRequest(
        input=MULTIWORD_INPUT, input_type="keywords", algorithm="v1"
    ))
    # the legacy winner matches fragments only: zero keywords fully covered
    assert resp.entries[0].members == ("CARDPART",)
    assert top1_coverage(resp) == 0.0


def test_top1_coverage_empty_ranking_raises():
    rec = Recommender(multiword_repository())
    resp = rec.recommend(RecommendRequest(input="nothing matches here"))
    with pytest.raises(NoAnnotatableWords):
        top1_coverage(resp)


# ---------------------------------------------------------------------------
# dataset discovery


def test_discover_datasets(suite):
    _, fixtures_dir = suite
    datasets = discover_datasets(fixtures_dir)
    assert [(name, input_type, len(files)) for name, input_type, files in datasets] == [
        ("duplicate_class", "text", 2),
        ("multiword", "keywords", 2),
        ("set_cover", "text", 2),
    ]


def test_discover_skips_directories_without_inputs(tmp_path):
    (tmp_path / "empty_dir").mkdir()
    with_data = tmp_path / "with_data"
    with_data.mkdir()
    (with_data / "input_01.txt").write_text("melanoma\n", encoding="utf-8")
    datasets = discover_datasets(tmp_path)
    assert [name for name, _, _ in datasets] == ["with_data"]


def test_discover_missing_or_empty(tmp_path):
    with pytest.raises(MissingFixtures):
        discover_datasets(tmp_path / "nope")
    with pytest.raises(MissingFixtures):
        discover_datasets(tmp_path)  # exists but holds no datasets


def test_discover_rejects_bad_meta(tmp_path):
    dataset = tmp_path / "broken"
    dataset.mkdir()
    (dataset / "input_01.txt").write_text("x\n", encoding="utf-8")
    (dataset / "meta.json").write_text("{not json", encoding="utf-8")
    with pytest.raises(MissingFixtures):
        discover_datasets(tmp_path)


# ---------------------------------------------------------------------------
# experiment run


def test_run_experiment_shape_and_direction(suite):
    corpus_dir, fixtures_dir = suite
    report = run_experiment(corpus_dir, fixtures_dir)
    assert isinstance(report, ExperimentReport)
    assert [d.name for d in report.datasets] == [
        "duplicate_class", "multiword", "set_cover",
    ]
    for d in report.datasets:
        assert d.inputs == 2
        assert d.excluded == 0
        for stats in (d.v1, d.v2, d.v2_sets):
            assert stats.mean_seconds >= 0.0
            assert stats.mean_coverage is not None
            assert 0.0 <= stats.mean_coverage <= 100.0
        # the rewritten scorer never loses to the legacy one here, and
        # combining ontologies never hurts top-1 coverage
        assert d.v2.mean_coverage >= d.v1.mean_coverage
        assert d.v2_sets.mean_coverage >= d.v2.mean_coverage
    overall = report.overall()
    algs = overall["algorithms"]
    assert algs["v2"]["mean_top1_coverage"] >= algs["v1"]["mean_top1_coverage"]
    assert algs["v2_sets"]["mean_top1_coverage"] >= algs["v2"]["mean_top1_coverage"]


def test_run_experiment_set_fallback_when_everything_pruned(suite):
    corpus_dir, fixtures_dir = suite
    report = run_experiment(corpus_dir, fixtures_dir)
    by_name = {d.name: d for d in report.datasets}
    # on the duplicate-class inputs one ontology covers everything, every
    # candidate set is pruned, and set coverage falls back to the v2 value
    dup = by_name["duplicate_class"]
    assert dup.v2_sets.mean_coverage == dup.v2.mean_coverage


def test_run_experiment_low_coverage_bucket(suite):
    corpus_dir, fixtures_dir = suite
    report = run_experiment(corpus_dir, fixtures_dir)
    by_name = {d.name: d for d in report.datasets}
    # legacy top-1 covers 2/12 words on the long duplicate-class input (<20%)
    # and 2/6 on the short one
    assert by_name["duplicate_class"].v1.pct_below_20 == 50.0
    assert by_name["duplicate_class"].v2.pct_below_20 == 0.0
    # the sets column reports no bucket
    assert by_name["duplicate_class"].v2_sets.pct_below_20 is None


def test_report_serialization(suite):
    corpus_dir, fixtures_dir = suite
    report = run_experiment(corpus_dir, fixtures_dir)
    data = json.loads(report.to_json())
    assert set(data) == {"datasets", "mean"}
    assert len(data["datasets"]) == 3
    for d in data["datasets"]:
        assert set(d["algorithms"]) == {"v1", "v2", "v2_sets"}
    table = report.format_table()
    lines = table.splitlines()
    assert lines[0].startswith("dataset")
    assert lines[-1].startswith("MEAN")
    assert len(lines) == 2 + 3 + 1  # header, rule, three datasets, mean row


def test_run_experiment_workers_match(suite):
    corpus_dir, fixtures_dir = suite
    seq = run_experiment(corpus_dir, fixtures_dir, workers=1)
    par = run_experiment(corpus_dir, fixtures_dir, workers=8)
    # timings differ run to run; coverage statistics must not
    for a, b in zip(seq.datasets, par.datasets):
        assert a.name == b.name
        for alg in ("v1", "v2", "v2_sets"):
            assert getattr(a, alg).mean_coverage == getattr(b, alg).mean_coverage
            assert getattr(a, alg).pct_below_20 == getattr(b, alg).pct_below_20


def test_run_experiment_missing_corpus(tmp_path):
    with pytest.raises(MissingFixtures):
        run_experiment(tmp_path, tmp_path)


def test_excluded_inputs_counted(tmp_path):
    corpus_dir, fixtures_dir = write_bundled_suite(tmp_path)
    dataset = fixtures_dir / "unmatchable"
    dataset.mkdir()
    (dataset / "input_01.txt").write_text("qqq www zzz\n", encoding="utf-8")
    report = run_experiment(corpus_dir, fixtures_dir)
    by_name = {d.name: d for d in report.datasets}
    unmatched = by_name["unmatchable"]
    assert unmatched.inputs == 1
    assert unmatched.excluded == 1
    assert unmatched.v1.mean_coverage is None
    assert unmatched.v2.pct_below_20 is None
    # excluded datasets drop out of the overall means instead of zeroing them
    overall = report.overall()
    assert overall["algorithms"]["v2"]["mean_top1_coverage"] is not None
