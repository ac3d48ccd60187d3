/**
 * Types mirroring the recommendation service's JSON API, plus the fetch
 * wrapper and request-body builder. The UI never rescores anything: every
 * number it shows comes straight out of a RecommendResponse.
 */

import type { WeightState } from "./weights.js";

export interface ClassDetails {
  hierarchy_level: number;
  definitions: number;
  synonyms: string[];
  properties: number;
}

export interface AnnotationOut {
  ontology: string;
  class_id: string;
  class_label: string;
  match_type: string;
  word_span: [number, number];
  annotated_words: number;
  matched_text: string;
  keyword_index: number | null;
  class_details: ClassDetails;
}

export interface EntryOut {
  position: number;
  ontologies: string[];
  final_score: number;
  scores: Record<string, number>;
  display_scores: Record<string, number>;
  annotation_count: number;
  legacy_score: number | null;
  contributions: Record<string, number> | null;
  annotations: AnnotationOut[];
}

export interface RecommendResponse {
  input_type: string;
  output_type: string;
  algorithm: string;
  tokens: string[];
  keywords: string[] | null;
  keyword_spans: ([number, number] | null)[] | null;
  union_covered_words: number;
  total_candidates: number;
  entries: EntryOut[];
}

export interface RecommendRequest {
  input: string;
  input_type: string;
  output_type: string;
  wc: number;
  wa: number;
  wd: number;
  ws: number;
  max_elements_set: number;
  ontologies?: string[];
  algorithm: string;
}

export interface FormState {
  input: string;
  inputType: "text" | "keywords";
  outputType: "ontologies" | "sets";
  algorithm: "v2" | "v1";
  weights: WeightState;
  maxSetSize: number;
  ontologyFilter: string;
}

/** Comma-separated acronyms -> list; blanks dropped, order kept. */
export function parseOntologyFilter(raw: string): string[] {
  return raw
    .split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0);
}

export function buildRequestBody(form: FormState): RecommendRequest {
  const body: RecommendRequest = {
    input: form.input,
    input_type: form.inputType,
    output_type: form.outputType,
    wc: form.weights.coverage,
    wa: form.weights.acceptance,
    wd: form.weights.detail,
    ws: form.weights.specialization,
    max_elements_set: form.maxSetSize,
    algorithm: form.algorithm,
  };
  const filter = parseOntologyFilter(form.ontologyFilter);
  if (filter.length > 0) {
    body.ontologies = filter;
  }
  return body;
}

/** Raised for HTTP 400s so the form can show the service's own message. */
export class ServiceError extends Error {
  readonly kind: string;

  constructor(kind: string, detail: string) {
    super(detail);
    this.kind = kind;
  }
}

export async function postRecommend(body: RecommendRequest): Promise<RecommendResponse> {
  const resp = await fetch("/recommend", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (resp.status === 400) {
    const err = await resp.json();
    throw new ServiceError(err.error ?? "BadRequest", err.detail ?? "invalid request");
  }
  if (!resp.ok) {
    throw new ServiceError("HttpError", `service returned ${resp.status}`);
  }
  return (await resp.json()) as RecommendResponse;
}

export async function fetchHealth(): Promise<{ status: string; ontologies: number }> {
  const resp = await fetch("/health");
  if (!resp.ok) {
    throw new ServiceError("HttpError", `service returned ${resp.status}`);
  }
  return await resp.json();
}
