"""The four ranking criteria plus the legacy score.

Every criterion produces a value in [0, 1] at request level:

coverage        how much of the input an ontology annotates, from the scores
                of its selected (non-overlapping, best-scoring) annotations,
                normalized by the best achievable selection over all
                candidates pooled together.
acceptance      input-independent community standing, blending presence in
                well-known repositories with normalized page-visit counts.
detail          how richly the matched classes are described (definitions,
                synonyms, properties), averaged over selected annotations.
specialization  how focused the ontology is on the input domain: a sum over
                all its annotations, boosted by hierarchy depth and penalized
                by log ontology size, then divided by the per-request maximum.

The legacy score reproduces the first-generation ranking (match-type score
plus twice the hierarchy level, over all annotations, divided by log10 of the
ontology size). It ignores multi-word matches and does no normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from ontorec.annotator import Annotation, MatchType
from ontorec.config import ScoringConstants
from ontorec.corpus import OntologyRepository
from ontorec.errors import ZeroNormalizer


def annotation_score(annotation: Annotation, c: ScoringConstants) -> float:
    """Per-annotation score: (type score + multi-word bonus) * words matched."""
    type_score = c.pref_score if annotation.match_type is MatchType.PREF else c.syn_score
    words = annotation.annotated_words
    bonus = c.multiword_bonus if words > 1 else 0.0
    return (type_score + bonus) * words


def legacy_annotation_score(annotation: Annotation, c: ScoringConstants) -> float:
    """Legacy per-annotation score: match type only, word count ignored."""
    return c.legacy_pref if annotation.match_type is MatchType.PREF else c.legacy_syn


def select_annotations(
    annotations: Iterable[Annotation], c: ScoringConstants | None = None
) -> list[Annotation]:
    """Greedy non-overlapping selection of the best-scoring annotations.

    Candidates are visited by descending score; ties go to the earlier span,
    then the longer span, then preferred-label matches, then ontology acronym
    and class id. An annotation is kept iff its span shares no word position
    with an already kept one. The result is ordered by span start.
    """
    c = c or ScoringConstants()
    order = sorted(
        annotations,
        key=lambda a: (
            -annotation_score(a, c),
            a.start,
            -(a.end - a.start),
            a.match_type.value,
            a.ontology_acronym,
            a.class_id,
        ),
    )
    covered: set[int] = set()
    kept: list[Annotation] = []
    for ann in order:
        span = range(ann.start, ann.end + 1)
        if any(pos in covered for pos in span):
            continue
        covered.update(span)
        kept.append(ann)
    kept.sort(key=lambda a: a.start)
    return kept


def selection_score_sum(selected: Iterable[Annotation], c: ScoringConstants) -> float:
    return sum(annotation_score(a, c) for a in selected)


class UnionSelection(NamedTuple):
    """Best selection over all candidates pooled together."""

    normalizer: float
    selected: tuple[Annotation, ...]
    covered_words: frozenset[int]


def union_selection(
    all_annotations: Iterable[Annotation], c: ScoringConstants
) -> UnionSelection:
    """Request-level maximum coverage: selection over the pooled annotations."""
    selected = select_annotations(all_annotations, c)
    covered = frozenset(
        pos for a in selected for pos in range(a.start, a.end + 1)
    )
    return UnionSelection(selection_score_sum(selected, c), tuple(selected), covered)


class CoverageScore(NamedTuple):
    normalized: float
    raw: float
    selected: tuple[Annotation, ...]


def coverage_score(
    annotations: Iterable[Annotation],
    global_normalizer: float,
    c: ScoringConstants | None = None,
) -> CoverageScore:
    """Coverage of one candidate against the request-level normalizer."""
    c = c or ScoringConstants()
    if global_normalizer <= 0:
        raise ZeroNormalizer("coverage normalizer must be positive")
    selected = select_annotations(annotations, c)
    raw = selection_score_sum(selected, c)
    normalized = min(1.0, max(0.0, raw / global_normalizer))
    return CoverageScore(normalized, raw, tuple(selected))


def acceptance_score(
    acronym: str,
    table,
    c: ScoringConstants,
    max_visits: Mapping[str, int],
) -> float:
    """Blend of repository presence and normalized visit counts.

    max_visits holds, per visits repository, the maximum visit count across
    the whole ontology corpus, so the score does not depend on the input.
    A repository whose maximum is zero contributes zero.
    """
    presence = sum(
        weight
        for repo, weight in c.presence_repo_weights.items()
        if table.presence(acronym, repo)
    )
    visits = 0.0
    for repo, weight in c.visits_repo_weights.items():
        top = max_visits.get(repo, 0)
        if top > 0:
            visits += weight * (table.visits(acronym, repo) / top)
    return c.w_presence * presence + c.w_visits * visits


def annotation_detail(
    annotation: Annotation, repository: OntologyRepository, c: ScoringConstants
) -> float:
    """Detail of one matched class: capped definition/synonym/property ratios."""
    cls = repository.get_class(annotation.ontology_acronym, annotation.class_id)
    d = min(cls.definitions_count / c.k_definitions, 1.0)
    s = min(cls.synonyms_count / c.k_synonyms, 1.0)
    p = min(cls.properties_count / c.k_properties, 1.0)
    return (d + s + p) / 3.0


def detail_score(
    selected_annotations: Sequence[Annotation],
    repository: OntologyRepository,
    c: ScoringConstants | None = None,
) -> float:
    """Mean class detail over the selected annotations (0 when none)."""
    c = c or ScoringConstants()
    if not selected_annotations:
        return 0.0
    total = sum(annotation_detail(a, repository, c) for a in selected_annotations)
    return total / len(selected_annotations)


def specialization_score(
    all_annotations: Sequence[Annotation],
    ontology_size: int,
    repository: OntologyRepository,
    c: ScoringConstants | None = None,
) -> float:
    """Raw specialization: depth-boosted annotation mass over log10(size).

    Uses every annotation the ontology produced, not just the selected ones;
    many deep matches from a small ontology mean high specialization.
    """
    c = c or ScoringConstants()
    if ontology_size < 2:
        raise ValueError("ontology_size must be >= 2 (log10 would not be positive)")
    total = 0.0
    for ann in all_annotations:
        level = repository.get_class(ann.ontology_acronym, ann.class_id).hierarchy_level
        total += annotation_score(ann, c) + 2.0 * level
    return total / math.log10(ontology_size)


def legacy_score(
    all_annotations: Sequence[Annotation],
    ontology_size: int,
    repository: OntologyRepository,
    c: ScoringConstants | None = None,
) -> float:
    """First-generation ranking score (raw, unnormalized)."""
    c = c or ScoringConstants()
    if ontology_size < 2:
        raise ValueError("ontology_size must be >= 2 (log10 would not be positive)")
    total = 0.0
    for ann in all_annotations:
        level = repository.get_class(ann.ontology_acronym, ann.class_id).hierarchy_level
        total += legacy_annotation_score(ann, c) + 2.0 * level
    return total / math.log10(ontology_size)


def divide_by_max(values: Mapping[str, float]) -> dict[str, float]:
    """Normalize a per-candidate map by its maximum (all zeros stay zero)."""
    top = max(values.values(), default=0.0)
    if top <= 0:
        return {k: 0.0 for k in values}
    return {k: v / top for k, v in values.items()}


@dataclass(frozen=True)
class CriterionScores:
    """Normalized criterion values of one ranked candidate plus raw context."""

    coverage: float
    acceptance: float
    detail: float
    specialization: float
    raw_coverage: float
    raw_specialization: float

    def as_dict(self) -> dict[str, float]:
        return {
            "coverage": self.coverage,
            "acceptance": self.acceptance,
            "detail": self.detail,
            "specialization": self.specialization,
        }


CRITERION_NAMES = ("coverage", "acceptance", "detail", "specialization")
