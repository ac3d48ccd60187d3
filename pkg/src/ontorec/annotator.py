"""Tokenization and dictionary annotation.

Matching is exact at the token level: input text and ontology labels go
through the same tokenizer (lowercase, punctuation and whitespace separate
tokens, no stemming), and a label matches wherever its full token sequence
occurs in the input. All occurrences are reported, including overlapping and
nested ones; selection of non-overlapping winners happens later in the
scoring layer.

The term index is a token-level trie: one pattern per (class, label) pair,
preferred labels and synonyms kept distinct even when their text is equal.
A scan walks the trie from every token position, which keeps lookup linear
in input length times maximum pattern length.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

from ontorec.corpus import OntologyRepository


class MatchType(str, Enum):
    PREF = "PREF"
    SYN = "SYN"


class Token(NamedTuple):
    text: str
    index: int


_PUNCT_CACHE: dict[str, bool] = {}


def _is_punct(ch: str) -> bool:
    flag = _PUNCT_CACHE.get(ch)
    if flag is None:
        flag = unicodedata.category(ch).startswith("P")
        _PUNCT_CACHE[ch] = flag
    return flag


def tokenize(text: str) -> list[Token]:
    """Split text into lowercase word tokens with word indices.

    Whitespace and Unicode punctuation both separate tokens, so
    "cardiac-structure" yields the same tokens as "cardiac structure".
    """
    tokens: list[Token] = []
    for chunk in text.split():
        if chunk.isalnum():
            # fast path, no punctuation inside
            tokens.append(Token(chunk.lower(), len(tokens)))
            continue
        word: list[str] = []
        for ch in chunk:
            if _is_punct(ch):
                if word:
                    tokens.append(Token("".join(word).lower(), len(tokens)))
                    word.clear()
            else:
                word.append(ch)
        if word:
            tokens.append(Token("".join(word).lower(), len(tokens)))
    return tokens


def token_texts(text: str) -> list[str]:
    return [t.text for t in tokenize(text)]


def split_keywords(raw: str) -> list[str]:
    """Split a comma-separated keyword input into trimmed keywords."""
    return [part.strip() for part in raw.split(",") if part.strip()]


@dataclass(frozen=True, slots=True)
class Annotation:
    """One occurrence of an ontology class label in the input.

    word_span is inclusive over word indices. keyword_index is set only for
    keyword inputs and names the keyword the annotation belongs to.
    """

    ontology_acronym: str
    class_id: str
    match_type: MatchType
    start: int
    end: int
    matched_text: str
    keyword_index: int | None = None

    @property
    def word_span(self) -> tuple[int, int]:
        return (self.start, self.end)

    @property
    def annotated_words(self) -> int:
        return self.end - self.start + 1

    def overlaps(self, other: "Annotation") -> bool:
        return self.start <= other.end and other.start <= self.end

    def sort_key(self) -> tuple:
        return (self.start, self.end, self.ontology_acronym, self.class_id,
                self.match_type.value)


class _IndexEntry(NamedTuple):
    ontology_acronym: str
    class_id: str
    match_type: MatchType


# trie node: (children, entries); children maps token -> node
def _new_node() -> tuple[dict, list]:
    return ({}, [])


class TermIndex:
    """Token-trie over every preferred label and synonym in a repository."""

    def __init__(self) -> None:
        self._root: dict[str, tuple[dict, list]] = {}
        self.pattern_count = 0
        self.max_pattern_words = 0

    def add(self, pattern_tokens: Sequence[str], entry: _IndexEntry) -> None:
        if not pattern_tokens:
            return  # label tokenizes to nothing (pure punctuation), unmatchable
        node = self._root.get(pattern_tokens[0])
        if node is None:
            node = _new_node()
            self._root[pattern_tokens[0]] = node
        for tok in pattern_tokens[1:]:
            child = node[0].get(tok)
            if child is None:
                child = _new_node()
                node[0][tok] = child
            node = child
        node[1].append(entry)
        self.pattern_count += 1
        self.max_pattern_words = max(self.max_pattern_words, len(pattern_tokens))

    def lookup(self, pattern_tokens: Sequence[str]) -> tuple[_IndexEntry, ...]:
        """All entries stored under an exact token sequence (duplicates kept)."""
        if not pattern_tokens:
            return ()
        node = self._root.get(pattern_tokens[0])
        for tok in pattern_tokens[1:]:
            if node is None:
                return ()
            node = node[0].get(tok)
        return tuple(node[1]) if node is not None else ()

    def scan(
        self,
        tokens: Sequence[str],
        offset: int = 0,
        keyword_index: int | None = None,
    ) -> list[Annotation]:
        """Emit every pattern occurrence in a token stream (unsorted)."""
        out: list[Annotation] = []
        root = self._root
        n = len(tokens)
        for i in range(n):
            node = root.get(tokens[i])
            j = i
            while node is not None:
                children, entries = node
                if entries:
                    matched = " ".join(tokens[i : j + 1])
                    for e in entries:
                        out.append(
                            Annotation(
                                ontology_acronym=e.ontology_acronym,
                                class_id=e.class_id,
                                match_type=e.match_type,
                                start=i + offset,
                                end=j + offset,
                                matched_text=matched,
                                keyword_index=keyword_index,
                            )
                        )
                j += 1
                if j >= n or not children:
                    break
                node = children.get(tokens[j])
        return out


def build_index(repository: OntologyRepository) -> TermIndex:
    """Index every preferred label and synonym of every class."""
    index = TermIndex()
    for ontology in repository:
        for cls in ontology.classes:
            index.add(
                token_texts(cls.preferred_label),
                _IndexEntry(ontology.acronym, cls.class_id, MatchType.PREF),
            )
            for syn in cls.synonyms:
                index.add(
                    token_texts(syn),
                    _IndexEntry(ontology.acronym, cls.class_id, MatchType.SYN),
                )
    return index


def _canonical(annotations: list[Annotation]) -> list[Annotation]:
    annotations.sort(key=Annotation.sort_key)
    return annotations


def annotate_text(index: TermIndex, text: str) -> list[Annotation]:
    """All pattern occurrences in free text, in canonical span order."""
    return _canonical(index.scan(token_texts(text)))


def keyword_token_layout(
    keywords: Sequence[str],
) -> tuple[list[str], list[tuple[int, int] | None]]:
    """Concatenate keyword token streams into one indexed stream.

    Returns the combined token list and, per keyword, its inclusive global
    word-index span (None for keywords that tokenize to nothing). Distinct
    keywords never share word indices, so annotations from different keywords
    cannot overlap.
    """
    tokens: list[str] = []
    spans: list[tuple[int, int] | None] = []
    for kw in keywords:
        kw_tokens = token_texts(kw)
        if not kw_tokens:
            spans.append(None)
            continue
        start = len(tokens)
        tokens.extend(kw_tokens)
        spans.append((start, len(tokens) - 1))
    return tokens, spans


def annotate_keywords(index: TermIndex, keywords: Sequence[str]) -> list[Annotation]:
    """Annotate each keyword, keeping only annotations covering it entirely.

    Partial matches are discarded: a class annotates a keyword only when its
    label matches the keyword's full token sequence. Word spans live in the
    combined stream built by keyword_token_layout.
    """
    tokens, spans = keyword_token_layout(keywords)
    out: list[Annotation] = []
    for kw_index, span in enumerate(spans):
        if span is None:
            continue
        start, end = span
        for ann in index.scan(tokens[start : end + 1], offset=start, keyword_index=kw_index):
            if ann.start == start and ann.end == end:
                out.append(ann)
    return _canonical(out)


def annotate_keywords_unfiltered(
    index: TermIndex, keywords: Sequence[str]
) -> list[Annotation]:
    """Keyword annotation without the full-coverage filter.

    Used by the legacy algorithm, which treats keyword items as short texts.
    Matches still never cross keyword boundaries.
    """
    tokens, spans = keyword_token_layout(keywords)
    out: list[Annotation] = []
    for kw_index, span in enumerate(spans):
        if span is None:
            continue
        start, end = span
        out.extend(index.scan(tokens[start : end + 1], offset=start, keyword_index=kw_index))
    return _canonical(out)


def filter_ontologies(
    annotations: Iterable[Annotation], acronyms: Iterable[str]
) -> list[Annotation]:
    allowed = set(acronyms)
    return [a for a in annotations if a.ontology_acronym in allowed]
