/**
 * Highlight model: which tokens of the service's tokenization are covered by
 * an entry's annotations, and how to render them as marked-up text. Marks are
 * derived only from the word spans the service returned; the client never
 * re-runs any matching of its own.
 */

import type { AnnotationOut } from "./api.js";

export interface HighlightSegment {
  /** Inclusive token indices, straight from the annotation's word_span. */
  start: number;
  end: number;
  /** Index into the entry's annotations list, for the detail panel. */
  annotationIndex: number;
  ontology: string;
}

/** One segment per annotation, ordered by span start. */
export function highlightSegments(annotations: AnnotationOut[]): HighlightSegment[] {
  const segments = annotations.map((ann, i) => ({
    start: ann.word_span[0],
    end: ann.word_span[1],
    annotationIndex: i,
    ontology: ann.ontology,
  }));
  segments.sort((a, b) => a.start - b.start || a.end - b.end);
  return segments;
}

/** Token indices covered by any segment; used by tests as the ground truth. */
export function coveredTokenIndices(segments: HighlightSegment[]): Set<number> {
  const covered = new Set<number>();
  for (const seg of segments) {
    for (let i = seg.start; i <= seg.end; i++) {
      covered.add(i);
    }
  }
  return covered;
}

const PALETTE = [
  "#2563eb", // blue
  "#d97706", // amber
  "#059669", // green
  "#7c3aed", // violet
  "#db2777", // pink
  "#0891b2", // cyan
];

/** Stable color per set member, by the member's index in the entry. */
export function memberColor(memberIndex: number): string {
  return PALETTE[memberIndex % PALETTE.length];
}

export function escapeHtml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function markOpen(seg: HighlightSegment, color: string): string {
  return `<mark class="hl" data-ann="${seg.annotationIndex}" style="background:${color}33;border-bottom:2px solid ${color}">`;
}

/**
 * Render one token range as HTML, wrapping covered runs in <mark> elements.
 * `colorFor` maps an ontology acronym to its member color.
 */
export function renderTokenRange(
  tokens: string[],
  from: number,
  to: number,
  segments: HighlightSegment[],
  colorFor: (ontology: string) => string,
): string {
  const parts: string[] = [];
  let i = from;
  while (i <= to) {
    const seg = segments.find((s) => s.start === i);
    if (seg !== undefined && seg.end <= to) {
      const text = escapeHtml(tokens.slice(seg.start, seg.end + 1).join(" "));
      parts.push(markOpen(seg, colorFor(seg.ontology)) + text + "</mark>");
      i = seg.end + 1;
    } else {
      parts.push(escapeHtml(tokens[i]));
      i += 1;
    }
  }
  return parts.join(" ");
}

/** Whole-input view for text mode. */
export function renderTokenLine(
  tokens: string[],
  segments: HighlightSegment[],
  colorFor: (ontology: string) => string,
): string {
  if (tokens.length === 0) {
    return "";
  }
  return renderTokenRange(tokens, 0, tokens.length - 1, segments, colorFor);
}

/**
 * Keyword-mode view: one chip per keyword, each rendering only its own token
 * region. Keywords the tokenizer dropped entirely (null span) render as empty
 * chips so positions still line up with the request.
 */
export function renderKeywordChips(
  tokens: string[],
  keywords: string[],
  keywordSpans: ([number, number] | null)[],
  segments: HighlightSegment[],
  colorFor: (ontology: string) => string,
): string {
  const chips = keywords.map((kw, i) => {
    const span = keywordSpans[i];
    const inner =
      span === null
        ? `<span class="kw-empty">${escapeHtml(kw) || "(empty)"}</span>`
        : renderTokenRange(tokens, span[0], span[1], segments, colorFor);
    return `<span class="kw-chip">${inner}</span>`;
  });
  return chips.join("");
}
