"""Score aggregation and ranking."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from ontorec.annotator import Annotation
from ontorec.config import Weights
from ontorec.criteria import CRITERION_NAMES, CriterionScores


def aggregate(scores: CriterionScores, weights: Weights) -> float:
    """Weighted sum of the four normalized criteria."""
    return (
        weights.coverage * scores.coverage
        + weights.acceptance * scores.acceptance
        + weights.detail * scores.detail
        + weights.specialization * scores.specialization
    )


@dataclass(frozen=True)
class RankedEntry:
    """One row of a recommendation ranking.

    members has one acronym for single-ontology output and two or more for
    ontology sets. display_scores are the 0-100 integers shown to users,
    min-max normalized across the returned ranking. legacy_score is the raw
    first-generation score (None for sets). contributions, for sets, maps
    each member to its share of the set's selected annotation mass.
    """

    members: tuple[str, ...]
    final_score: float
    scores: CriterionScores
    annotation_count: int
    selected_annotations: tuple[Annotation, ...]
    position: int = 0
    display_scores: Mapping[str, int] | None = None
    legacy_score: float | None = None
    contributions: Mapping[str, float] | None = None


def _display_scores(entries: Sequence[RankedEntry]) -> list[dict[str, int]]:
    """Min-max map each criterion to 0-100 across the returned entries.

    A criterion with no spread (single entry, or all values equal) maps to
    100 for everyone: every candidate is at the maximum.
    """
    out: list[dict[str, int]] = [{} for _ in entries]
    if not entries:
        return out
    for name in CRITERION_NAMES:
        values = [getattr(e.scores, name) for e in entries]
        lo, hi = min(values), max(values)
        spread = hi - lo
        for slot, value in zip(out, values):
            if spread <= 0:
                slot[name] = 100
            else:
                slot[name] = round((value - lo) / spread * 100)
    return out


def rank(entries: Sequence[RankedEntry], ranking_size: int) -> list[RankedEntry]:
    """Order entries, truncate to ranking_size, assign positions and displays.

    Descending final score; ties broken by higher raw coverage, then fewer
    members, then ascending member acronyms.
    """
    ordered = sorted(
        entries,
        key=lambda e: (
            -e.final_score,
            -e.scores.raw_coverage,
            len(e.members),
            e.members,
        ),
    )[: max(ranking_size, 0)]
    displays = _display_scores(ordered)
    return [
        replace(entry, position=pos, display_scores=display)
        for pos, (entry, display) in enumerate(zip(ordered, displays), start=1)
    ]
