"""Exception types shared across the package.

Everything raised on purpose derives from RecommenderError so callers (CLI,
HTTP service) can map domain failures to exit codes / 400 responses without
catching bare Exception.
"""

from __future__ import annotations


class RecommenderError(Exception):
    """Base class for all domain errors."""


class MalformedRecord(RecommenderError):
    """A corpus or acceptance record that cannot be parsed or validated."""

    def __init__(self, reason: str, line: int | None = None, path: str | None = None):
        self.reason = reason
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}"
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {reason}" if where else reason)


class DuplicateClass(RecommenderError):
    """Same (ontology, class_id) appears more than once in a corpus."""


class EmptyRepository(RecommenderError):
    """Corpus file contained no class records."""


class SingletonOntology(RecommenderError):
    """An ontology with fewer than two classes; log10(size) would be 0."""


class NegativeVisits(RecommenderError):
    """Acceptance table declares a negative visit count."""


class UnknownOntology(RecommenderError):
    """Lookup of an acronym that is not in the repository."""


class InvalidWeights(RecommenderError):
    """Aggregation weights are negative or do not sum to 1."""


class ConfigError(RecommenderError):
    """Scoring constants or repository-weight maps violate their constraints."""


class ZeroNormalizer(RecommenderError):
    """Request-level coverage normalizer is zero; nothing was annotatable."""


class EmptyInput(RecommenderError):
    """Input text is empty/whitespace, or a keyword input has no keywords."""


class UnknownOntologyFilter(RecommenderError):
    """Request restricts evaluation to acronyms missing from the repository."""


class UnsupportedRequest(RecommenderError):
    """Request combination the engine does not define (e.g. v1 ontology sets)."""


class MissingFixtures(RecommenderError):
    """Experiment harness pointed at a directory without usable fixtures."""


class NoAnnotatableWords(RecommenderError):
    """Coverage metric denominator is zero for this input."""
