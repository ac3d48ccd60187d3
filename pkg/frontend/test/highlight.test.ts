import { describe, expect, it } from "vitest";

import {
  coveredTokenIndices,
  highlightSegments,
  memberColor,
  renderKeywordChips,
  renderTokenLine,
} from "../src/highlight.js";
import { makeAnnotation } from "./helpers.js";

const TOKENS = ["a", "thrombocyte", "is", "a", "kind", "of", "blood", "cell"];

const ANNS = [
  makeAnnotation({ ontology: "ONTA", word_span: [6, 7], matched_text: "blood cell" }),
  makeAnnotation({ ontology: "ONTA", word_span: [1, 1], matched_text: "thrombocyte" }),
];

function markedTexts(html: string): string[] {
  return [...html.matchAll(/<mark[^>]*>([^<]*)<\/mark>/g)].map((m) => m[1]);
}

function stripTags(html: string): string {
  return html.replace(/<[^>]+>/g, "");
}

describe("highlightSegments", () => {
  it("yields one segment per annotation ordered by span start", () => {
    const segments = highlightSegments(ANNS);
    expect(segments.map((s) => [s.start, s.end])).toEqual([
      [1, 1],
      [6, 7],
    ]);
    // annotationIndex still points at the original list position
    expect(segments.map((s) => s.annotationIndex)).toEqual([1, 0]);
  });

  it("computes the covered token set", () => {
    const covered = coveredTokenIndices(highlightSegments(ANNS));
    expect(covered).toEqual(new Set([1, 6, 7]));
  });
});

describe("renderTokenLine", () => {
  it("marks exactly the annotated spans and nothing else", () => {
    const html = renderTokenLine(TOKENS, highlightSegments(ANNS), () => "#000");
    expect(markedTexts(html)).toEqual(["thrombocyte", "blood cell"]);
    expect(stripTags(html)).toBe("a thrombocyte is a kind of blood cell");
  });

  it("renders an unannotated input with no marks at all", () => {
    const html = renderTokenLine(TOKENS, [], () => "#000");
    expect(html).not.toContain("<mark");
    expect(html).toBe("a thrombocyte is a kind of blood cell");
  });

  it("carries the annotation index for the detail panel", () => {
    const html = renderTokenLine(TOKENS, highlightSegments(ANNS), () => "#000");
    expect(html).toContain('data-ann="1"');
    expect(html).toContain('data-ann="0"');
  });

  it("colors marks per owning ontology in set mode", () => {
    const anns = [
      makeAnnotation({ ontology: "ONTA", word_span: [1, 1] }),
      makeAnnotation({ ontology: "ONTB", word_span: [6, 7] }),
    ];
    const members = ["ONTA", "ONTB"];
    const colorFor = (o: string) => memberColor(members.indexOf(o));
    const html = renderTokenLine(TOKENS, highlightSegments(anns), colorFor);
    expect(html).toContain(memberColor(0));
    expect(html).toContain(memberColor(1));
    expect(memberColor(0)).not.toBe(memberColor(1));
  });

  it("escapes token text", () => {
    const html = renderTokenLine(["<script>", "x"], [], () => "#000");
    expect(html).not.toContain("<script>");
    expect(html).toContain("&lt;script&gt;");
  });

  it("returns an empty string for an empty token list", () => {
    expect(renderTokenLine([], [], () => "#000")).toBe("");
  });
});

describe("renderKeywordChips", () => {
  const tokens = ["blood", "cell", "eye", "skin", "of", "eye"];
  const keywords = ["blood cell", "eye", "", "skin of eye"];
  const spans: ([number, number] | null)[] = [[0, 1], [2, 2], null, [3, 5]];

  it("renders one chip per keyword over its own token region", () => {
    const html = renderKeywordChips(tokens, keywords, spans, [], () => "#000");
    const chips = [...html.matchAll(/<span class="kw-chip">(.*?)<\/span>/g)].map((m) => m[1]);
    expect(chips).toHaveLength(4);
    expect(chips[0]).toBe("blood cell");
    expect(chips[1]).toBe("eye");
    expect(chips[3]).toBe("skin of eye");
  });

  it("marks only inside the keyword that owns the span", () => {
    const anns = [makeAnnotation({ ontology: "ONTA", word_span: [0, 1], matched_text: "blood cell" })];
    const html = renderKeywordChips(tokens, keywords, spans, highlightSegments(anns), () => "#000");
    expect(markedTexts(html)).toEqual(["blood cell"]);
    const chips = html.split("</span>");
    expect(chips[0]).toContain("<mark");
    expect(html.indexOf("<mark")).toBe(html.lastIndexOf("<mark"));
  });

  it("renders a placeholder chip for keywords with no tokens", () => {
    const html = renderKeywordChips(tokens, keywords, spans, [], () => "#000");
    expect(html).toContain("(empty)");
  });
});
