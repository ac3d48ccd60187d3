"""Ontology corpus and acceptance-table loading.

Corpus format: JSON Lines, one class per line:

    {"ontology": "SNOMEDCT", "class_id": "C123", "pref_label": "blood cell",
     "synonyms": ["hemocyte"], "definitions": 1, "properties": 4,
     "hierarchy_level": 7}

A record may declare "parent_id" instead of "hierarchy_level"; levels are then
derived by walking parent links from the ontology's roots (roots sit at level
1). An explicit hierarchy_level always wins over a derived one.

Acceptance format: a single JSON object keyed by ontology acronym:

    {"SNOMEDCT": {"present_in": ["UMLS"], "visits": {"BioPortal": 120351}}}

Acronyms missing from the file get an implicit empty record. Both structures
are immutable once loaded; loading is order-independent (records are sorted
internally), so the same corpus in any line order scores identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from ontorec.errors import (
    DuplicateClass,
    EmptyRepository,
    MalformedRecord,
    NegativeVisits,
    SingletonOntology,
    UnknownOntology,
)

ROOT_LEVEL = 1


@dataclass(frozen=True)
class ClassRecord:
    """One ontology class: labels used for matching plus metadata counts."""

    ontology_acronym: str
    class_id: str
    preferred_label: str
    synonyms: tuple[str, ...] = ()
    definitions_count: int = 0
    properties_count: int = 0
    hierarchy_level: int = ROOT_LEVEL

    def __post_init__(self) -> None:
        if not self.ontology_acronym.strip():
            raise MalformedRecord("ontology acronym is empty")
        if not self.class_id.strip():
            raise MalformedRecord("class_id is empty")
        if not self.preferred_label.strip():
            raise MalformedRecord(
                f"class {self.class_id!r}: preferred label is empty"
            )
        if self.definitions_count < 0 or self.properties_count < 0:
            raise MalformedRecord(
                f"class {self.class_id!r}: negative definitions/properties count"
            )
        if self.hierarchy_level < ROOT_LEVEL:
            raise MalformedRecord(
                f"class {self.class_id!r}: hierarchy_level must be >= {ROOT_LEVEL}"
            )
        object.__setattr__(self, "synonyms", tuple(self.synonyms))

    @property
    def synonyms_count(self) -> int:
        return len(self.synonyms)


@dataclass(frozen=True)
class OntologyRecord:
    acronym: str
    classes: tuple[ClassRecord, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)


class OntologyRepository:
    """Read-only container of ontologies keyed by acronym."""

    def __init__(self, ontologies: Mapping[str, OntologyRecord]):
        self._ontologies = dict(sorted(ontologies.items()))
        self._class_index = {
            (acr, cls.class_id): cls
            for acr, ont in self._ontologies.items()
            for cls in ont.classes
        }

    @property
    def acronyms(self) -> tuple[str, ...]:
        return tuple(self._ontologies)

    def __len__(self) -> int:
        return len(self._ontologies)

    def __contains__(self, acronym: str) -> bool:
        return acronym in self._ontologies

    def __iter__(self) -> Iterator[OntologyRecord]:
        return iter(self._ontologies.values())

    def ontology(self, acronym: str) -> OntologyRecord:
        try:
            return self._ontologies[acronym]
        except KeyError:
            raise UnknownOntology(acronym) from None

    def size(self, acronym: str) -> int:
        return self.ontology(acronym).class_count

    def get_class(self, acronym: str, class_id: str) -> ClassRecord:
        try:
            return self._class_index[(acronym, class_id)]
        except KeyError:
            if acronym not in self._ontologies:
                raise UnknownOntology(acronym) from None
            raise UnknownOntology(f"{acronym}/{class_id}") from None

    @property
    def total_classes(self) -> int:
        return len(self._class_index)


def ontology_size(repository: OntologyRepository, acronym: str) -> int:
    """Number of classes of an ontology (the size used by log-normalized scores)."""
    return repository.size(acronym)


def build_repository(records: Iterable[ClassRecord]) -> OntologyRepository:
    """Assemble and validate a repository from class records."""
    by_ontology: dict[str, dict[str, ClassRecord]] = {}
    for rec in records:
        classes = by_ontology.setdefault(rec.ontology_acronym, {})
        if rec.class_id in classes:
            raise DuplicateClass(f"{rec.ontology_acronym}/{rec.class_id}")
        classes[rec.class_id] = rec
    if not by_ontology:
        raise EmptyRepository("no class records")
    ontologies = {}
    for acronym, classes in by_ontology.items():
        if len(classes) < 2:
            raise SingletonOntology(
                f"{acronym} has {len(classes)} class(es); at least 2 required"
            )
        ordered = tuple(classes[cid] for cid in sorted(classes))
        ontologies[acronym] = OntologyRecord(acronym=acronym, classes=ordered)
    return OntologyRepository(ontologies)


_ALLOWED_KEYS = {
    "ontology",
    "class_id",
    "pref_label",
    "synonyms",
    "definitions",
    "properties",
    "hierarchy_level",
    "parent_id",
}


def _parse_line(raw: str, line_no: int, path: str) -> dict:
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"invalid JSON: {exc.msg}", line=line_no, path=path)
    if not isinstance(obj, dict):
        raise MalformedRecord("record is not a JSON object", line=line_no, path=path)
    for key in ("ontology", "class_id", "pref_label"):
        if key not in obj:
            raise MalformedRecord(f"missing required key {key!r}", line=line_no, path=path)
        if not isinstance(obj[key], str):
            raise MalformedRecord(f"{key!r} must be a string", line=line_no, path=path)
    synonyms = obj.get("synonyms", [])
    if not isinstance(synonyms, list) or not all(isinstance(s, str) for s in synonyms):
        raise MalformedRecord("'synonyms' must be a list of strings", line=line_no, path=path)
    for key in ("definitions", "properties"):
        if not isinstance(obj.get(key, 0), int):
            raise MalformedRecord(f"{key!r} must be an integer", line=line_no, path=path)
    if "hierarchy_level" in obj and not isinstance(obj["hierarchy_level"], int):
        raise MalformedRecord("'hierarchy_level' must be an integer", line=line_no, path=path)
    if "parent_id" in obj and not isinstance(obj["parent_id"], str):
        raise MalformedRecord("'parent_id' must be a string", line=line_no, path=path)
    obj["_line"] = line_no
    return obj


def _resolve_levels(acronym: str, rows: list[dict], path: str) -> None:
    """Fill 'hierarchy_level' on every row, deriving it from parent links.

    Explicitly given levels are kept. Rows without level and without parent
    are roots. Derivation is a breadth-first walk, so level = parent level + 1.
    """
    levels: dict[str, int] = {}
    children: dict[str, list[dict]] = {}
    frontier: list[dict] = []
    for row in rows:
        if "hierarchy_level" in row:
            levels[row["class_id"]] = row["hierarchy_level"]
            frontier.append(row)
        elif "parent_id" not in row:
            row["hierarchy_level"] = ROOT_LEVEL
            levels[row["class_id"]] = ROOT_LEVEL
            frontier.append(row)
        else:
            children.setdefault(row["parent_id"], []).append(row)
    while frontier:
        row = frontier.pop()
        for child in children.pop(row["class_id"], ()):  # resolved parents only
            child["hierarchy_level"] = levels[row["class_id"]] + 1
            levels[child["class_id"]] = child["hierarchy_level"]
            frontier.append(child)
    unresolved = [row for rows_ in children.values() for row in rows_]
    if unresolved:
        row = min(unresolved, key=lambda r: r["_line"])
        raise MalformedRecord(
            f"{acronym}/{row['class_id']}: parent chain cannot be resolved "
            f"(missing parent or cycle)",
            line=row["_line"],
            path=path,
        )


def load_repository(path: str | Path) -> OntologyRepository:
    """Load a JSON-Lines corpus file into an immutable repository."""
    path = str(path)
    rows_by_ontology: dict[str, list[dict]] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            obj = _parse_line(raw, line_no, path)
            rows_by_ontology.setdefault(obj["ontology"], []).append(obj)
    records: list[ClassRecord] = []
    for acronym, rows in rows_by_ontology.items():
        _resolve_levels(acronym, rows, path)
        for row in rows:
            try:
                records.append(
                    ClassRecord(
                        ontology_acronym=row["ontology"],
                        class_id=row["class_id"],
                        preferred_label=row["pref_label"],
                        synonyms=tuple(row.get("synonyms", [])),
                        definitions_count=row.get("definitions", 0),
                        properties_count=row.get("properties", 0),
                        hierarchy_level=row["hierarchy_level"],
                    )
                )
            except MalformedRecord as exc:
                raise MalformedRecord(exc.reason, line=row["_line"], path=path) from None
    return build_repository(records)


@dataclass(frozen=True)
class AcceptanceRecord:
    """Presence and visit counts of one ontology across known repositories."""

    acronym: str
    present_in: frozenset[str] = frozenset()
    visits: Mapping[str, int] = field(default_factory=dict)


class AcceptanceTable:
    """Acceptance metadata for a corpus; unknown acronyms yield empty records."""

    def __init__(self, records: Mapping[str, AcceptanceRecord]):
        self._records = dict(sorted(records.items()))

    @property
    def acronyms(self) -> tuple[str, ...]:
        return tuple(self._records)

    @property
    def repositories(self) -> frozenset[str]:
        names: set[str] = set()
        for rec in self._records.values():
            names |= rec.present_in
            names |= set(rec.visits)
        return frozenset(names)

    def record(self, acronym: str) -> AcceptanceRecord:
        return self._records.get(acronym, AcceptanceRecord(acronym=acronym))

    def presence(self, acronym: str, repository: str) -> bool:
        return repository in self.record(acronym).present_in

    def visits(self, acronym: str, repository: str) -> int:
        return self.record(acronym).visits.get(repository, 0)

    def max_visits(self, repository: str, acronyms: Iterable[str]) -> int:
        return max((self.visits(a, repository) for a in acronyms), default=0)

    @classmethod
    def empty(cls) -> "AcceptanceTable":
        return cls({})


def build_acceptance(data: Mapping[str, Mapping]) -> AcceptanceTable:
    records: dict[str, AcceptanceRecord] = {}
    for acronym, entry in data.items():
        if not isinstance(entry, Mapping):
            raise MalformedRecord(f"acceptance entry for {acronym!r} is not an object")
        present = entry.get("present_in", [])
        if not isinstance(present, list) or not all(isinstance(p, str) for p in present):
            raise MalformedRecord(
                f"acceptance entry for {acronym!r}: 'present_in' must be a list of strings"
            )
        visits = entry.get("visits", {})
        if not isinstance(visits, Mapping):
            raise MalformedRecord(
                f"acceptance entry for {acronym!r}: 'visits' must be an object"
            )
        clean_visits: dict[str, int] = {}
        for repo, count in visits.items():
            if not isinstance(count, int):
                raise MalformedRecord(
                    f"acceptance entry for {acronym!r}: visits[{repo!r}] must be an integer"
                )
            if count < 0:
                raise NegativeVisits(f"{acronym}/{repo}: {count}")
            clean_visits[repo] = count
        unknown = set(entry) - {"present_in", "visits"}
        if unknown:
            raise MalformedRecord(
                f"acceptance entry for {acronym!r}: unknown keys {sorted(unknown)}"
            )
        records[acronym] = AcceptanceRecord(
            acronym=acronym,
            present_in=frozenset(present),
            visits=dict(sorted(clean_visits.items())),
        )
    return AcceptanceTable(records)


def load_acceptance(path: str | Path) -> AcceptanceTable:
    """Load the acceptance JSON file (single object keyed by acronym)."""
    path = str(path)
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(f"invalid JSON: {exc.msg}", path=path)
    if not isinstance(data, dict):
        raise MalformedRecord("acceptance file must contain a JSON object", path=path)
    return build_acceptance(data)
