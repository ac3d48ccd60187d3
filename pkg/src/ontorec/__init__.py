"""ontorec: multi-criteria ontology recommendation.

Given free text or keywords plus a corpus of ontologies, ranks individual
ontologies and complementary ontology sets by a weighted blend of coverage,
acceptance, detail and specialization.
"""

from ontorec.annotator import (
    Annotation,
    MatchType,
    TermIndex,
    annotate_keywords,
    annotate_text,
    build_index,
    split_keywords,
    tokenize,
)
from ontorec.config import RecommenderConfig, ScoringConstants, Weights
from ontorec.corpus import (
    AcceptanceRecord,
    AcceptanceTable,
    ClassRecord,
    OntologyRecord,
    OntologyRepository,
    build_acceptance,
    build_repository,
    load_acceptance,
    load_repository,
    ontology_size,
)
from ontorec.criteria import (
    CriterionScores,
    acceptance_score,
    annotation_score,
    coverage_score,
    detail_score,
    legacy_score,
    select_annotations,
    specialization_score,
    union_selection,
)
from ontorec.pipeline import Recommender, RecommendRequest, RecommendResponse
from ontorec.ranker import RankedEntry, aggregate, rank
from ontorec.sets import enumerate_sets, prune_set, score_set

__version__ = "0.1.0"

__all__ = [
    "AcceptanceRecord",
    "AcceptanceTable",
    "Annotation",
    "ClassRecord",
    "CriterionScores",
    "MatchType",
    "OntologyRecord",
    "OntologyRepository",
    "RankedEntry",
    "Recommender",
    "RecommendRequest",
    "RecommendResponse",
    "RecommenderConfig",
    "ScoringConstants",
    "TermIndex",
    "Weights",
    "acceptance_score",
    "aggregate",
    "annotate_keywords",
    "annotate_text",
    "annotation_score",
    "build_acceptance",
    "build_index",
    "build_repository",
    "coverage_score",
    "detail_score",
    "enumerate_sets",
    "legacy_score",
    "load_acceptance",
    "load_repository",
    "ontology_size",
    "prune_set",
    "rank",
    "score_set",
    "select_annotations",
    "specialization_score",
    "split_keywords",
    "tokenize",
    "union_selection",
]
