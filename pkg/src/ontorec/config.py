"""Configuration dataclasses: scoring constants, aggregation weights, engine config.

All defaults follow the production configuration of the recommendation
algorithm; every constant can be overridden per call, via a JSON config file
(CLI --config) or programmatically.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from ontorec.errors import ConfigError, InvalidWeights

# weight sums are checked against 1 within this tolerance
WEIGHT_TOLERANCE = 1e-9


def _check_weight_map(name: str, weights: Mapping[str, float]) -> None:
    if not weights:
        raise ConfigError(f"{name} must declare at least one repository")
    for repo, w in weights.items():
        if w < 0:
            raise ConfigError(f"{name}[{repo!r}] is negative")
    total = sum(weights.values())
    if abs(total - 1.0) > WEIGHT_TOLERANCE:
        raise ConfigError(f"{name} weights sum to {total!r}, expected 1.0")


@dataclass(frozen=True)
class ScoringConstants:
    """Numeric knobs of the annotation, detail and acceptance scorers.

    pref_score / syn_score        score of a preferred-label / synonym match
    multiword_bonus               added to the type score when a match spans >1 word
    legacy_pref / legacy_syn      match-type scores of the legacy (v1) algorithm
    k_definitions, k_synonyms,    caps used by the detail criterion: a class with
    k_properties                  k or more definitions/synonyms/properties gets
                                  full credit for that component
    w_presence / w_visits         blend between repository presence and page visits
    presence_repo_weights         weight per repository used for the presence part
    visits_repo_weights           weight per repository used for the visits part
    """

    pref_score: float = 10.0
    syn_score: float = 5.0
    multiword_bonus: float = 3.0
    legacy_pref: float = 10.0
    legacy_syn: float = 8.0
    k_definitions: int = 1
    k_synonyms: int = 3
    k_properties: int = 17
    w_presence: float = 0.5
    w_visits: float = 0.5
    presence_repo_weights: Mapping[str, float] = field(
        default_factory=lambda: {"UMLS": 1.0}
    )
    visits_repo_weights: Mapping[str, float] = field(
        default_factory=lambda: {"BioPortal": 1.0}
    )

    def __post_init__(self) -> None:
        for name in ("k_definitions", "k_synonyms", "k_properties"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        if self.w_presence < 0 or self.w_visits < 0:
            raise ConfigError("w_presence and w_visits must be non-negative")
        if abs(self.w_presence + self.w_visits - 1.0) > WEIGHT_TOLERANCE:
            raise ConfigError("w_presence + w_visits must equal 1.0")
        _check_weight_map("presence_repo_weights", self.presence_repo_weights)
        _check_weight_map("visits_repo_weights", self.visits_repo_weights)

    @property
    def known_repositories(self) -> frozenset[str]:
        return frozenset(self.presence_repo_weights) | frozenset(self.visits_repo_weights)


@dataclass(frozen=True)
class Weights:
    """Aggregation weights of the four ranking criteria. Must sum to 1."""

    coverage: float = 0.55
    acceptance: float = 0.15
    detail: float = 0.15
    specialization: float = 0.15

    def __post_init__(self) -> None:
        vals = (self.coverage, self.acceptance, self.detail, self.specialization)
        if any(v < 0 for v in vals):
            raise InvalidWeights(f"criterion weights must be non-negative, got {vals}")
        total = sum(vals)
        if abs(total - 1.0) > WEIGHT_TOLERANCE:
            raise InvalidWeights(f"criterion weights sum to {total!r}, expected 1.0")

    def as_dict(self) -> dict[str, float]:
        return dataclasses.asdict(self)


MIN_SET_SIZE = 2
MAX_SET_SIZE = 4


def clamp_set_size(value: int) -> int:
    return max(MIN_SET_SIZE, min(MAX_SET_SIZE, int(value)))


@dataclass(frozen=True)
class RecommenderConfig:
    """Top-level engine configuration."""

    weights: Weights = field(default_factory=Weights)
    constants: ScoringConstants = field(default_factory=ScoringConstants)
    ranking_size: int = 25
    max_set_size: int = 3

    def __post_init__(self) -> None:
        if self.ranking_size < 1:
            raise ConfigError("ranking_size must be >= 1")
        object.__setattr__(self, "max_set_size", clamp_set_size(self.max_set_size))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RecommenderConfig":
        data = dict(data)
        weights = Weights(**data.pop("weights")) if "weights" in data else Weights()
        constants = (
            ScoringConstants(**data.pop("constants"))
            if "constants" in data
            else ScoringConstants()
        )
        unknown = set(data) - {"ranking_size", "max_set_size"}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(weights=weights, constants=constants, **data)

    @classmethod
    def from_file(cls, path: str) -> "RecommenderConfig":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"config file {path} must contain a JSON object")
        return cls.from_dict(data)
