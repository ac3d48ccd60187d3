"""End-to-end recommendation pipeline.

A Recommender owns an immutable repository, its term index, and the
acceptance table; one instance serves any number of requests (thread-safe,
everything it touches is read-only). Request evaluation:

1. tokenize the input (free text, or comma-separated keywords laid out into
   disjoint word-index regions),
2. annotate against the term index,
3. score every annotating ontology on the four criteria,
4. aggregate with the request weights and rank, or, for set output, pool the
   top single ontologies into candidate sets and rank those.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ontorec.annotator import (
    Annotation,
    TermIndex,
    annotate_keywords,
    annotate_keywords_unfiltered,
    build_index,
    keyword_token_layout,
    split_keywords,
    token_texts,
)
from ontorec.config import RecommenderConfig, Weights, clamp_set_size
from ontorec.corpus import AcceptanceTable, OntologyRepository, load_acceptance, load_repository
from ontorec.criteria import (
    CriterionScores,
    acceptance_score,
    detail_score,
    divide_by_max,
    legacy_score,
    select_annotations,
    selection_score_sum,
    specialization_score,
    union_selection,
)
from ontorec.errors import (
    ConfigError,
    EmptyInput,
    UnknownOntologyFilter,
    UnsupportedRequest,
)
from ontorec.ranker import RankedEntry, aggregate, rank
from ontorec.sets import SetScoringContext, enumerate_sets, prune_set, score_set

INPUT_TYPES = ("text", "keywords")
OUTPUT_TYPES = ("ontologies", "sets")
ALGORITHMS = ("v2", "v1")


@dataclass(frozen=True)
class RecommendRequest:
    input: str
    input_type: str = "text"
    output_type: str = "ontologies"
    weights: Weights | None = None
    max_set_size: int | None = None
    ontologies: tuple[str, ...] = ()
    algorithm: str = "v2"


@dataclass(frozen=True)
class RecommendResponse:
    """Ranking plus the token layout the spans refer to."""

    input_type: str
    output_type: str
    algorithm: str
    tokens: tuple[str, ...]
    keywords: tuple[str, ...] | None
    keyword_spans: tuple[tuple[int, int] | None, ...] | None
    entries: tuple[RankedEntry, ...]
    union_covered_words: int
    total_candidates: int


@dataclass(frozen=True)
class _Candidate:
    acronym: str
    annotations: tuple[Annotation, ...]
    selected: tuple[Annotation, ...]
    raw_coverage: float
    detail: float
    raw_specialization: float
    legacy: float
    covered_spans: frozenset[tuple[int, int]] = field(default_factory=frozenset)


class Recommender:
    def __init__(
        self,
        repository: OntologyRepository,
        acceptance: AcceptanceTable | None = None,
        config: RecommenderConfig | None = None,
    ):
        self.repository = repository
        self.acceptance = acceptance or AcceptanceTable.empty()
        self.config = config or RecommenderConfig()
        unknown_repos = self.acceptance.repositories - self.config.constants.known_repositories
        if unknown_repos:
            raise ConfigError(
                "acceptance table references repositories with no configured "
                f"weight: {sorted(unknown_repos)}"
            )
        self.index: TermIndex = build_index(repository)
        c = self.config.constants
        self._max_visits = {
            repo: self.acceptance.max_visits(repo, repository.acronyms)
            for repo in c.visits_repo_weights
        }
        # acceptance is input-independent: compute once per ontology
        self._acceptance_scores = {
            acronym: acceptance_score(acronym, self.acceptance, c, self._max_visits)
            for acronym in repository.acronyms
        }

    @classmethod
    def from_files(
        cls,
        corpus_path: str,
        acceptance_path: str | None = None,
        config: RecommenderConfig | None = None,
    ) -> "Recommender":
        repository = load_repository(corpus_path)
        table = load_acceptance(acceptance_path) if acceptance_path else None
        return cls(repository, table, config)

    # ------------------------------------------------------------------

    def _validate(self, request: RecommendRequest) -> None:
        if request.input_type not in INPUT_TYPES:
            raise UnsupportedRequest(f"input_type must be one of {INPUT_TYPES}")
        if request.output_type not in OUTPUT_TYPES:
            raise UnsupportedRequest(f"output_type must be one of {OUTPUT_TYPES}")
        if request.algorithm not in ALGORITHMS:
            raise UnsupportedRequest(f"algorithm must be one of {ALGORITHMS}")
        if request.algorithm == "v1" and request.output_type == "sets":
            raise UnsupportedRequest("ontology sets are not defined for the v1 algorithm")
        if not request.input.strip():
            raise EmptyInput("input is empty")
        unknown = [a for a in request.ontologies if a not in self.repository]
        if unknown:
            raise UnknownOntologyFilter(", ".join(sorted(unknown)))

    def _annotate(
        self, request: RecommendRequest
    ) -> tuple[list[str], tuple[str, ...] | None, tuple | None, list[Annotation]]:
        if request.input_type == "text":
            tokens = token_texts(request.input)
            annotations = self.index.scan(tokens)
            annotations.sort(key=Annotation.sort_key)
            return tokens, None, None, annotations
        keywords = split_keywords(request.input)
        if not keywords:
            raise EmptyInput("keyword input contains no keywords")
        tokens, spans = keyword_token_layout(keywords)
        if request.algorithm == "v1":
            # legacy behavior: keywords are short texts, partial matches kept
            annotations = annotate_keywords_unfiltered(self.index, keywords)
        else:
            annotations = annotate_keywords(self.index, keywords)
        return tokens, tuple(keywords), tuple(spans), annotations

    def _evaluate_candidate(
        self, acronym: str, annotations: tuple[Annotation, ...]
    ) -> _Candidate:
        c = self.config.constants
        selected = tuple(select_annotations(annotations, c))
        size = self.repository.size(acronym)
        return _Candidate(
            acronym=acronym,
            annotations=annotations,
            selected=selected,
            raw_coverage=selection_score_sum(selected, c),
            detail=detail_score(selected, self.repository, c),
            raw_specialization=specialization_score(
                annotations, size, self.repository, c
            ),
            legacy=legacy_score(annotations, size, self.repository, c),
            covered_spans=frozenset(a.word_span for a in selected),
        )

    def recommend(self, request: RecommendRequest, workers: int = 1) -> RecommendResponse:
        self._validate(request)
        weights = request.weights or self.config.weights
        tokens, keywords, keyword_spans, annotations = self._annotate(request)
        if request.ontologies:
            allowed = set(request.ontologies)
            annotations = [a for a in annotations if a.ontology_acronym in allowed]

        grouped: dict[str, list[Annotation]] = {}
        for ann in annotations:
            grouped.setdefault(ann.ontology_acronym, []).append(ann)

        def _response(entries, union_covered, n_candidates):
            return RecommendResponse(
                input_type=request.input_type,
                output_type=request.output_type,
                algorithm=request.algorithm,
                tokens=tuple(tokens),
                keywords=keywords,
                keyword_spans=keyword_spans,
                entries=tuple(entries),
                union_covered_words=union_covered,
                total_candidates=n_candidates,
            )

        if not grouped:
            return _response((), 0, 0)

        c = self.config.constants
        union = union_selection(annotations, c)
        acronyms = sorted(grouped)
        items = [(a, tuple(grouped[a])) for a in acronyms]
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda it: self._evaluate_candidate(*it), items))
        else:
            results = [self._evaluate_candidate(*it) for it in items]
        candidates = {cand.acronym: cand for cand in results}

        spec_norm = divide_by_max(
            {a: candidates[a].raw_specialization for a in acronyms}
        )

        entries = []
        for acronym in acronyms:
            cand = candidates[acronym]
            scores = CriterionScores(
                coverage=min(1.0, max(0.0, cand.raw_coverage / union.normalizer)),
                acceptance=self._acceptance_scores[acronym],
                detail=cand.detail,
                specialization=spec_norm[acronym],
                raw_coverage=cand.raw_coverage,
                raw_specialization=cand.raw_specialization,
            )
            final = cand.legacy if request.algorithm == "v1" else aggregate(scores, weights)
            entries.append(
                RankedEntry(
                    members=(acronym,),
                    final_score=final,
                    scores=scores,
                    annotation_count=len(cand.selected),
                    selected_annotations=cand.selected,
                    legacy_score=cand.legacy,
                )
            )

        singles = rank(entries, self.config.ranking_size)
        if request.output_type == "ontologies":
            return _response(singles, len(union.covered_words), len(acronyms))

        # ontology sets: combine the top-ranked singles
        max_set_size = clamp_set_size(
            request.max_set_size if request.max_set_size is not None else self.config.max_set_size
        )
        pool_acronyms = [e.members[0] for e in singles]
        covered_spans = {a: candidates[a].covered_spans for a in pool_acronyms}
        ctx = SetScoringContext(
            normalizer=union.normalizer,
            repository=self.repository,
            constants=c,
            acceptance_by_member={a: self._acceptance_scores[a] for a in pool_acronyms},
            specialization_by_member={a: spec_norm[a] for a in pool_acronyms},
            raw_specialization_by_member={
                a: candidates[a].raw_specialization for a in pool_acronyms
            },
        )
        annotations_by_member = {a: candidates[a].annotations for a in pool_acronyms}
        set_entries = []
        for members in enumerate_sets(pool_acronyms, max_set_size):
            if not prune_set(members, covered_spans):
                continue
            scored = score_set(members, annotations_by_member, ctx)
            set_entries.append(
                RankedEntry(
                    members=scored.members,
                    final_score=aggregate(scored.scores, weights),
                    scores=scored.scores,
                    annotation_count=len(scored.selected),
                    selected_annotations=scored.selected,
                    contributions=scored.contributions,
                )
            )
        ranked_sets = rank(set_entries, self.config.ranking_size)
        return _response(ranked_sets, len(union.covered_words), len(acronyms))
