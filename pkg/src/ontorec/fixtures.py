"""Bundled fixture corpora and synthetic generators.

Three families:

* hand-built mini corpora that pin down known scoring behavior (the
  thrombocyte sentence, the penicillin two-ontology example, the
  duplicate-class pathology, the multi-word keyword pathology),
* a bundled experiment suite combining the pathology corpora with input
  datasets, written to disk in the corpus/acceptance/fixture-dir layout the
  evaluation harness consumes,
* seeded random generators for property tests and throughput measurements.
"""

from __future__ import annotations

import json
import random
from pathlib import Path
from typing import Iterable, Sequence

from ontorec.corpus import ClassRecord, OntologyRepository, build_repository

# ---------------------------------------------------------------------------
# thrombocyte sentence: one ontology, six annotations, two selection winners

THROMBOCYTE_SENTENCE = "A thrombocyte is a kind of blood cell"


def thrombocyte_records() -> list[ClassRecord]:
    mk = lambda cid, label, syns, d, p, lvl: ClassRecord(
        ontology_acronym="SNOMEDCT",
        class_id=cid,
        preferred_label=label,
        synonyms=tuple(syns),
        definitions_count=d,
        properties_count=p,
        hierarchy_level=lvl,
    )
    return [
        mk("C_PLT", "platelet", ["thrombocyte"], 1, 4, 7),
        mk("C_BCELL", "blood cell", [], 1, 3, 6),
        mk("C_BLOOD", "blood", [], 1, 5, 5),
        mk("C_CSTRUCT", "cell structure", ["cell"], 0, 2, 4),
        mk("C_CELL", "cell", [], 1, 6, 3),
        mk("C_ENTCELL", "entire cell", ["cell"], 0, 1, 8),
    ]


def thrombocyte_repository() -> OntologyRepository:
    return build_repository(thrombocyte_records())


# ---------------------------------------------------------------------------
# penicillin example: two complementary ontologies with rich class metadata

PHARMA_SENTENCE = "Penicillin is an antibiotic used to treat tonsillitis"
PHARMA_SENTENCE_ALT = "The antibiotic penicillin treats tonsillitis"


def pharma_records() -> list[ClassRecord]:
    return [
        # ABXONTO: antibiotics ontology, detailed classes
        ClassRecord(
            ontology_acronym="ABXONTO",
            class_id="ABX_PEN",
            preferred_label="penicillin",
            synonyms=("benzylpenicillin", "penicillin g"),
            definitions_count=1,
            properties_count=7,
            hierarchy_level=5,
        ),
        ClassRecord(
            ontology_acronym="ABXONTO",
            class_id="ABX_ANTIB",
            preferred_label="antimicrobial drug",
            synonyms=(
                "antibiotic",
                "antibacterial",
                "antibiotic agent",
                "antimycotic",
                "bacteriocide",
                "germicide",
                "biocide",
            ),
            definitions_count=1,
            properties_count=16,
            hierarchy_level=3,
        ),
        # ENTONTO: ear/nose/throat ontology, sparse classes
        ClassRecord(
            ontology_acronym="ENTONTO",
            class_id="ENT_PEN",
            preferred_label="phenoxymethylpenicillin",
            synonyms=("penicillin",),
            definitions_count=0,
            properties_count=3,
            hierarchy_level=6,
        ),
        ClassRecord(
            ontology_acronym="ENTONTO",
            class_id="ENT_TONS",
            preferred_label="tonsillitis",
            synonyms=(),
            definitions_count=0,
            properties_count=2,
            hierarchy_level=12,
        ),
    ]


def pharma_repository() -> OntologyRepository:
    return build_repository(pharma_records())


# ---------------------------------------------------------------------------
# duplicate-class pathology: many copies of the same label inflate legacy
# scores, while one broad ontology covers the whole input once

DUP_BROAD_TERMS = (
    "melanoma",
    "tumor",
    "melanocytes",
    "skin",
    "bowel",
    "eye",
    "dermis",
    "lesion",
    "nevus",
    "keratin",
    "follicle",
    "sebum",
)

DUP_TEXT_SHORT = (
    "Melanoma is a malignant tumor of melanocytes, found mostly in skin "
    "but also in the bowel and the eye."
)
DUP_TEXT_LONG = (
    "The skin sample near the eye revealed melanoma with tumor spread, "
    "scattered melanocytes within the dermis, one lesion beside a nevus, "
    "plus keratin, a damaged follicle, excess sebum and a clear bowel margin."
)


def duplicate_class_records() -> list[ClassRecord]:
    records: list[ClassRecord] = []
    for i in range(11):
        records.append(
            ClassRecord(
                ontology_acronym="DUPANAT",
                class_id=f"DUP_EYE{i:02d}",
                preferred_label="eye",
                definitions_count=1,
                hierarchy_level=3,
            )
        )
    for i in range(4):
        records.append(
            ClassRecord(
                ontology_acronym="DUPANAT",
                class_id=f"DUP_SKIN{i:02d}",
                preferred_label="skin",
                definitions_count=1,
                hierarchy_level=3,
            )
        )
    for i, term in enumerate(DUP_BROAD_TERMS):
        records.append(
            ClassRecord(
                ontology_acronym="BROADCOV",
                class_id=f"BRD{i:02d}",
                preferred_label=term,
                definitions_count=1,
                hierarchy_level=3,
            )
        )
    return records


def duplicate_class_repository() -> OntologyRepository:
    return build_repository(duplicate_class_records())


# ---------------------------------------------------------------------------
# multi-word pathology: keyword input only fully covered by one ontology

MULTIWORD_KEYWORD = "embryonic cardiac structure"
MULTIWORD_INPUT = "embryonic cardiac structure, tonsil biopsy"
MULTIWORD_INPUT_ALT = "tonsil biopsy, embryonic cardiac structure"


def multiword_records() -> list[ClassRecord]:
    mk = lambda acr, cid, label: ClassRecord(
        ontology_acronym=acr,
        class_id=cid,
        preferred_label=label,
        definitions_count=1,
        hierarchy_level=3,
    )
    return [
        mk("FULLPHRASE", "FP1", "embryonic cardiac structure"),
        mk("FULLPHRASE", "FP2", "cardiogenesis"),
        mk("BPART", "BP1", "tonsil biopsy"),
        mk("BPART", "BP2", "adenoid review"),
        mk("STRUCTONLY", "SO1", "structure"),
        mk("STRUCTONLY", "SO2", "structure"),
        mk("STRUCTONLY", "SO3", "structure"),
        mk("STRUCTONLY", "SO4", "framework"),
        mk("CARDPART", "CP1", "cardiac"),
        mk("CARDPART", "CP2", "structure"),
    ]


def multiword_repository() -> OntologyRepository:
    return build_repository(multiword_records())


# ---------------------------------------------------------------------------
# generators

def stub_records(acronym: str, n_classes: int, level: int = 3) -> list[ClassRecord]:
    """n_classes filler classes whose labels never collide with real text."""
    return [
        ClassRecord(
            ontology_acronym=acronym,
            class_id=f"{acronym}_{i:06d}",
            preferred_label=f"zz{acronym.lower()}filler{i:06d}",
            hierarchy_level=level,
        )
        for i in range(n_classes)
    ]


def make_vocabulary(size: int) -> list[str]:
    return [f"w{i:05d}" for i in range(size)]


def random_corpus_records(
    seed: int,
    n_ontologies: int = 5,
    classes_range: tuple[int, int] = (2, 6),
    vocab: Sequence[str] | None = None,
    max_label_words: int = 3,
    max_level: int = 12,
) -> list[ClassRecord]:
    rng = random.Random(seed)
    vocab = list(vocab) if vocab is not None else make_vocabulary(30)
    records: list[ClassRecord] = []
    for o in range(n_ontologies):
        acronym = f"ONT{o:02d}"
        n_classes = rng.randint(*classes_range)
        for i in range(n_classes):
            n_words = rng.randint(1, max_label_words)
            label = " ".join(rng.choice(vocab) for _ in range(n_words))
            synonyms = tuple(
                " ".join(rng.choice(vocab) for _ in range(rng.randint(1, max_label_words)))
                for _ in range(rng.randint(0, 3))
            )
            records.append(
                ClassRecord(
                    ontology_acronym=acronym,
                    class_id=f"{acronym}_C{i:04d}",
                    preferred_label=label,
                    synonyms=synonyms,
                    definitions_count=rng.randint(0, 3),
                    properties_count=rng.randint(0, 25),
                    hierarchy_level=rng.randint(1, max_level),
                )
            )
    return records


def random_acceptance_data(seed: int, acronyms: Iterable[str]) -> dict:
    rng = random.Random(seed)
    data = {}
    for acronym in acronyms:
        if rng.random() < 0.3:
            continue  # leave some ontologies without a record
        entry: dict = {}
        if rng.random() < 0.7:
            entry["present_in"] = ["UMLS"] if rng.random() < 0.5 else []
        if rng.random() < 0.8:
            entry["visits"] = {"BioPortal": rng.randint(0, 10_000)}
        data[acronym] = entry
    return data


def random_text(seed: int, vocab: Sequence[str], n_words: int) -> str:
    rng = random.Random(seed)
    return " ".join(rng.choice(vocab) for _ in range(n_words))


def synthetic_corpus_records(
    seed: int,
    n_terms: int,
    n_ontologies: int,
    vocab: Sequence[str],
    max_label_words: int = 3,
) -> list[ClassRecord]:
    """Large synthetic corpus for throughput measurements."""
    rng = random.Random(seed)
    records: list[ClassRecord] = []
    per_ontology = max(2, n_terms // n_ontologies)
    for o in range(n_ontologies):
        acronym = f"SYN{o:03d}"
        for i in range(per_ontology):
            n_words = rng.randint(1, max_label_words)
            label = " ".join(rng.choice(vocab) for _ in range(n_words))
            records.append(
                ClassRecord(
                    ontology_acronym=acronym,
                    class_id=f"{acronym}_C{i:05d}",
                    preferred_label=label,
                    definitions_count=rng.randint(0, 2),
                    properties_count=rng.randint(0, 20),
                    hierarchy_level=rng.randint(1, 15),
                )
            )
    return records


def synthetic_text(seed: int, vocab: Sequence[str], approx_bytes: int) -> str:
    rng = random.Random(seed)
    parts: list[str] = []
    size = 0
    while size < approx_bytes:
        word = rng.choice(vocab)
        parts.append(word)
        size += len(word) + 1
    return " ".join(parts)


# ---------------------------------------------------------------------------
# bundled experiment suite

def record_to_json(rec: ClassRecord) -> dict:
    return {
        "ontology": rec.ontology_acronym,
        "class_id": rec.class_id,
        "pref_label": rec.preferred_label,
        "synonyms": list(rec.synonyms),
        "definitions": rec.definitions_count,
        "properties": rec.properties_count,
        "hierarchy_level": rec.hierarchy_level,
    }


def write_corpus(records: Iterable[ClassRecord], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(record_to_json(rec), sort_keys=True) + "\n")


BUNDLED_DATASETS = {
    "duplicate_class": ("text", [DUP_TEXT_SHORT, DUP_TEXT_LONG]),
    "multiword": ("keywords", [MULTIWORD_INPUT, MULTIWORD_INPUT_ALT]),
    "set_cover": ("text", [PHARMA_SENTENCE, PHARMA_SENTENCE_ALT]),
}


def bundled_suite_records() -> list[ClassRecord]:
    return duplicate_class_records() + multiword_records() + pharma_records()


def write_bundled_suite(root: str | Path) -> tuple[Path, Path]:
    """Write corpus, acceptance and input datasets; returns (corpus_dir, fixtures_dir)."""
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    write_corpus(bundled_suite_records(), root / "corpus.jsonl")
    (root / "acceptance.json").write_text("{}\n", encoding="utf-8")
    fixtures_dir = root / "datasets"
    for name, (input_type, inputs) in sorted(BUNDLED_DATASETS.items()):
        dataset_dir = fixtures_dir / name
        dataset_dir.mkdir(parents=True, exist_ok=True)
        if input_type != "text":
            (dataset_dir / "meta.json").write_text(
                json.dumps({"input_type": input_type}) + "\n", encoding="utf-8"
            )
        for i, text in enumerate(inputs, start=1):
            (dataset_dir / f"input_{i:02d}.txt").write_text(text + "\n", encoding="utf-8")
    return root, fixtures_dir
