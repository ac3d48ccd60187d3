"""Experiment harness: top-1 coverage metric and dataset sweeps.

A fixture layout is a corpus directory holding ``corpus.jsonl`` and
``acceptance.json``, plus a fixtures directory with one subdirectory per
dataset. Dataset directories contain one input per ``*.txt`` file and an
optional ``meta.json`` declaring ``{"input_type": "keywords"}`` (default is
free text).

For every dataset the harness runs three algorithms (legacy v1, v2, v2 with
ontology sets) and reports mean input length, the share of executions whose
top-ranked result covers less than 20% of the input, mean top-1 coverage and
mean wall-clock seconds, as a text table and as JSON.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path
from statistics import fmean

from ontorec.annotator import split_keywords, token_texts
from ontorec.config import RecommenderConfig
from ontorec.corpus import AcceptanceTable, load_acceptance, load_repository
from ontorec.errors import MissingFixtures, NoAnnotatableWords
from ontorec.pipeline import Recommender, RecommendRequest, RecommendResponse

LOW_COVERAGE_THRESHOLD = 20.0


def _covered_positions(response: RecommendResponse) -> set[int]:
    top = response.entries[0]
    out: set[int] = set()
    for ann in top.selected_annotations:
        out.update(range(ann.start, ann.end + 1))
    return out


def top1_coverage(response: RecommendResponse) -> float:
    """Coverage percentage of the top-ranked entry.

    Text inputs: distinct word positions the top entry covers, over the word
    positions covered by the pooled best selection of all candidates.
    Keyword inputs: keywords the top entry covers entirely, over all keywords.
    Raises NoAnnotatableWords when the denominator is zero or the ranking is
    empty.
    """
    if not response.entries:
        raise NoAnnotatableWords("ranking is empty")
    if response.input_type == "keywords":
        assert response.keywords is not None and response.keyword_spans is not None
        total = len(response.keywords)
        if total == 0:
            raise NoAnnotatableWords("no keywords")
        covered = _covered_positions(response)
        full = sum(
            1
            for span in response.keyword_spans
            if span is not None
            and all(pos in covered for pos in range(span[0], span[1] + 1))
        )
        return 100.0 * full / total
    if response.union_covered_words == 0:
        raise NoAnnotatableWords("no word of the input is annotatable")
    return 100.0 * len(_covered_positions(response)) / response.union_covered_words


@dataclass(frozen=True)
class AlgorithmStats:
    mean_coverage: float | None
    pct_below_20: float | None
    mean_seconds: float

    def as_dict(self) -> dict:
        return {
            "mean_top1_coverage": self.mean_coverage,
            "pct_executions_below_20": self.pct_below_20,
            "mean_seconds": self.mean_seconds,
        }


@dataclass(frozen=True)
class DatasetResult:
    name: str
    input_type: str
    inputs: int
    excluded: int
    mean_length: float
    v1: AlgorithmStats
    v2: AlgorithmStats
    v2_sets: AlgorithmStats

    def as_dict(self) -> dict:
        return {
            "dataset": self.name,
            "input_type": self.input_type,
            "inputs": self.inputs,
            "excluded": self.excluded,
            "mean_input_length": self.mean_length,
            "algorithms": {
                "v1": self.v1.as_dict(),
                "v2": self.v2.as_dict(),
                "v2_sets": self.v2_sets.as_dict(),
            },
        }


@dataclass(frozen=True)
class ExperimentReport:
    datasets: tuple[DatasetResult, ...]

    def _mean_over_datasets(self, pick) -> float | None:
        values = [v for v in (pick(d) for d in self.datasets) if v is not None]
        return fmean(values) if values else None

    def overall(self) -> dict:
        return {
            "mean_input_length": self._mean_over_datasets(lambda d: d.mean_length),
            "algorithms": {
                alg: {
                    "mean_top1_coverage": self._mean_over_datasets(
                        lambda d, a=alg: getattr(d, a).mean_coverage
                    ),
                    "pct_executions_below_20": self._mean_over_datasets(
                        lambda d, a=alg: getattr(d, a).pct_below_20
                    ),
                    "mean_seconds": self._mean_over_datasets(
                        lambda d, a=alg: getattr(d, a).mean_seconds
                    ),
                }
                for alg in ("v1", "v2", "v2_sets")
            },
        }

    def as_dict(self) -> dict:
        return {
            "datasets": [d.as_dict() for d in self.datasets],
            "mean": self.overall(),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent, sort_keys=True)

    def format_table(self) -> str:
        def fnum(v, digits=1):
            return "-" if v is None else f"{v:.{digits}f}"

        headers = [
            "dataset", "type", "n", "len",
            "cov<20% v1", "cov<20% v2",
            "cov v1", "cov v2", "cov v2-sets",
            "s v1", "s v2", "s v2-sets",
        ]
        rows = []
        for d in self.datasets:
            rows.append([
                d.name, d.input_type, str(d.inputs), fnum(d.mean_length),
                fnum(d.v1.pct_below_20), fnum(d.v2.pct_below_20),
                fnum(d.v1.mean_coverage), fnum(d.v2.mean_coverage),
                fnum(d.v2_sets.mean_coverage),
                fnum(d.v1.mean_seconds, 4), fnum(d.v2.mean_seconds, 4),
                fnum(d.v2_sets.mean_seconds, 4),
            ])
        overall = self.overall()
        algs = overall["algorithms"]
        rows.append([
            "MEAN", "", "", fnum(overall["mean_input_length"]),
            fnum(algs["v1"]["pct_executions_below_20"]),
            fnum(algs["v2"]["pct_executions_below_20"]),
            fnum(algs["v1"]["mean_top1_coverage"]),
            fnum(algs["v2"]["mean_top1_coverage"]),
            fnum(algs["v2_sets"]["mean_top1_coverage"]),
            fnum(algs["v1"]["mean_seconds"], 4),
            fnum(algs["v2"]["mean_seconds"], 4),
            fnum(algs["v2_sets"]["mean_seconds"], 4),
        ])
        widths = [max(len(headers[i]), *(len(r[i]) for r in rows)) for i in range(len(headers))]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [fmt.format(*headers), fmt.format(*("-" * w for w in widths))]
        lines.extend(fmt.format(*row) for row in rows)
        return "\n".join(lines)


@dataclass(frozen=True)
class _InputRun:
    length: int
    cov_v1: float | None
    cov_v2: float | None
    cov_sets: float | None
    t_v1: float
    t_v2: float
    t_sets: float
    excluded: bool


def _timed(recommender: Recommender, request: RecommendRequest, workers: int):
    start = time.perf_counter()
    response = recommender.recommend(request, workers=workers)
    return response, time.perf_counter() - start


def _run_input(
    recommender: Recommender, text: str, input_type: str, workers: int
) -> _InputRun:
    length = (
        len(split_keywords(text)) if input_type == "keywords" else len(token_texts(text))
    )
    resp_v1, t_v1 = _timed(
        recommender,
        RecommendRequest(input=text, input_type=input_type, algorithm="v1"),
        workers,
    )
    resp_v2, t_v2 = _timed(
        recommender,
        RecommendRequest(input=text, input_type=input_type, algorithm="v2"),
        workers,
    )
    resp_sets, t_sets = _timed(
        recommender,
        RecommendRequest(input=text, input_type=input_type, output_type="sets"),
        workers,
    )
    try:
        cov_v1 = top1_coverage(resp_v1)
        cov_v2 = top1_coverage(resp_v2)
    except NoAnnotatableWords:
        return _InputRun(length, None, None, None, t_v1, t_v2, t_sets, excluded=True)
    if resp_sets.entries:
        cov_sets = top1_coverage(resp_sets)
    else:
        # every candidate set was pruned (or <2 candidates): a single
        # ontology already achieves the best set coverage for this input
        cov_sets = cov_v2
    return _InputRun(length, cov_v1, cov_v2, cov_sets, t_v1, t_v2, t_sets, excluded=False)


def _dataset_result(name: str, input_type: str, runs: list[_InputRun]) -> DatasetResult:
    kept = [r for r in runs if not r.excluded]

    def stats(cov_attr: str, time_attr: str, with_bucket: bool) -> AlgorithmStats:
        covs = [getattr(r, cov_attr) for r in kept]
        times = [getattr(r, time_attr) for r in runs]
        mean_cov = fmean(covs) if covs else None
        bucket = (
            100.0 * sum(1 for v in covs if v < LOW_COVERAGE_THRESHOLD) / len(covs)
            if covs and with_bucket
            else None
        )
        return AlgorithmStats(mean_cov, bucket, fmean(times) if times else 0.0)

    return DatasetResult(
        name=name,
        input_type=input_type,
        inputs=len(runs),
        excluded=sum(1 for r in runs if r.excluded),
        mean_length=fmean([r.length for r in runs]) if runs else 0.0,
        v1=stats("cov_v1", "t_v1", with_bucket=True),
        v2=stats("cov_v2", "t_v2", with_bucket=True),
        v2_sets=stats("cov_sets", "t_sets", with_bucket=False),
    )


def discover_datasets(fixtures_dir: str | Path) -> list[tuple[str, str, list[Path]]]:
    """(name, input_type, input files) per dataset directory, sorted by name."""
    fixtures_dir = Path(fixtures_dir)
    if not fixtures_dir.is_dir():
        raise MissingFixtures(f"{fixtures_dir} is not a directory")
    datasets = []
    for sub in sorted(p for p in fixtures_dir.iterdir() if p.is_dir()):
        inputs = sorted(sub.glob("*.txt"))
        if not inputs:
            continue
        input_type = "text"
        meta = sub / "meta.json"
        if meta.exists():
            try:
                parsed = json.loads(meta.read_text(encoding="utf-8"))
            except json.JSONDecodeError as exc:
                raise MissingFixtures(f"{meta}: invalid JSON ({exc.msg})")
            input_type = parsed.get("input_type", "text")
        datasets.append((sub.name, input_type, inputs))
    if not datasets:
        raise MissingFixtures(f"no dataset directories with *.txt inputs under {fixtures_dir}")
    return datasets


def run_experiment(
    corpus_dir: str | Path,
    fixtures_dir: str | Path,
    config: RecommenderConfig | None = None,
    workers: int = 1,
) -> ExperimentReport:
    """Evaluate every dataset in fixtures_dir against the corpus in corpus_dir."""
    corpus_dir = Path(corpus_dir)
    corpus_path = corpus_dir / "corpus.jsonl"
    if not corpus_path.exists():
        raise MissingFixtures(f"{corpus_path} not found")
    acceptance_path = corpus_dir / "acceptance.json"
    acceptance = (
        load_acceptance(acceptance_path) if acceptance_path.exists() else AcceptanceTable.empty()
    )
    recommender = Recommender(load_repository(corpus_path), acceptance, config)

    results = []
    for name, input_type, inputs in discover_datasets(fixtures_dir):
        runs = []
        for path in inputs:
            text = path.read_text(encoding="utf-8").strip()
            runs.append(_run_input(recommender, text, input_type, workers))
        results.append(_dataset_result(name, input_type, runs))
    return ExperimentReport(datasets=tuple(results))
