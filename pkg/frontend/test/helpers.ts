import type { AnnotationOut, EntryOut } from "../src/api.js";

export function makeAnnotation(overrides: Partial<AnnotationOut> = {}): AnnotationOut {
  return {
    ontology: "ONTA",
    class_id: "C1",
    class_label: "Example class",
    match_type: "PREF",
    word_span: [0, 0],
    annotated_words: 1,
    matched_text: "example",
    keyword_index: null,
    class_details: {
      hierarchy_level: 1,
      definitions: 1,
      synonyms: [],
      properties: 0,
    },
    ...overrides,
  };
}

export function makeEntry(overrides: Partial<EntryOut> = {}): EntryOut {
  return {
    position: 1,
    ontologies: ["ONTA"],
    final_score: 0.5,
    scores: { coverage: 0.5, acceptance: 0.5, detail: 0.5, specialization: 0.5 },
    display_scores: { coverage: 50, acceptance: 50, detail: 50, specialization: 50 },
    annotation_count: 1,
    legacy_score: null,
    contributions: null,
    annotations: [makeAnnotation()],
    ...overrides,
  };
}
