"""Ontology set enumeration, pruning, and scoring.

Sets combine complementary ontologies: annotations of all members are pooled,
the usual non-overlapping selection runs over the pool, and the set's
coverage uses the same request-level normalizer as single ontologies. Each
member's contribution is its share of the selected annotation mass; the
input-independent criteria (acceptance, specialization) and detail are
blended with those contribution weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from ontorec.annotator import Annotation
from ontorec.config import ScoringConstants
from ontorec.corpus import OntologyRepository
from ontorec.criteria import (
    CriterionScores,
    annotation_score,
    detail_score,
    select_annotations,
)


def enumerate_sets(
    candidates: Sequence[str], max_set_size: int
) -> list[tuple[str, ...]]:
    """All subsets of 2..max_set_size candidates, canonically ordered.

    Members inside a set are sorted ascending; sets are listed by size then
    lexicographically, so enumeration order is deterministic.
    """
    pool = sorted(set(candidates))
    out: list[tuple[str, ...]] = []
    top = min(max_set_size, len(pool))
    for size in range(2, top + 1):
        out.extend(combinations(pool, size))
    return out


def prune_set(
    members: Sequence[str],
    covered_spans: Mapping[str, frozenset[tuple[int, int]]],
) -> bool:
    """Keep a set only if every member covers a span nobody else covers.

    A member whose covered spans are all covered by the other members adds
    no coverage; the reduced set scores at least as well, so the larger set
    is redundant. Returns True when the set should be kept.
    """
    for member in members:
        others: set[tuple[int, int]] = set()
        for other in members:
            if other != member:
                others |= covered_spans.get(other, frozenset())
        if covered_spans.get(member, frozenset()) <= others:
            return False
    return True


@dataclass(frozen=True)
class SetScoringContext:
    """Per-request inputs needed to score any set of candidates."""

    normalizer: float
    repository: OntologyRepository
    constants: ScoringConstants
    acceptance_by_member: Mapping[str, float]
    specialization_by_member: Mapping[str, float]
    raw_specialization_by_member: Mapping[str, float]


@dataclass(frozen=True)
class ScoredSet:
    members: tuple[str, ...]
    scores: CriterionScores
    selected: tuple[Annotation, ...]
    contributions: Mapping[str, float]


def score_set(
    members: Sequence[str],
    annotations_by_member: Mapping[str, Sequence[Annotation]],
    ctx: SetScoringContext,
) -> ScoredSet:
    """Score one ontology set from its members' pooled annotations."""
    members = tuple(sorted(members))
    pooled: list[Annotation] = []
    for m in members:
        pooled.extend(annotations_by_member[m])
    selected = select_annotations(pooled, ctx.constants)

    mass: dict[str, float] = {m: 0.0 for m in members}
    winners: dict[str, list[Annotation]] = {m: [] for m in members}
    raw = 0.0
    for ann in selected:
        score = annotation_score(ann, ctx.constants)
        raw += score
        mass[ann.ontology_acronym] += score
        winners[ann.ontology_acronym].append(ann)

    contributions = {m: (mass[m] / raw if raw > 0 else 0.0) for m in members}
    coverage = min(1.0, max(0.0, raw / ctx.normalizer)) if ctx.normalizer > 0 else 0.0

    acceptance = 0.0
    detail = 0.0
    specialization = 0.0
    raw_specialization = 0.0
    for m in members:
        share = contributions[m]
        acceptance += share * ctx.acceptance_by_member[m]
        # detail counts only the classes that won selection inside this set
        detail += share * detail_score(winners[m], ctx.repository, ctx.constants)
        specialization += share * ctx.specialization_by_member[m]
        raw_specialization += share * ctx.raw_specialization_by_member[m]

    scores = CriterionScores(
        coverage=coverage,
        acceptance=acceptance,
        detail=detail,
        specialization=specialization,
        raw_coverage=raw,
        raw_specialization=raw_specialization,
    )
    return ScoredSet(
        members=members,
        scores=scores,
        selected=tuple(selected),
        contributions=contributions,
    )
