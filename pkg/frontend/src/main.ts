/**
 * Page wiring: read the form, call the service, render the ranking, and
 * drive the highlight toggles and the class detail panel. All state lives in
 * the last response; resubmitting always sends the form's current values.
 */

import {
  buildRequestBody,
  fetchHealth,
  postRecommend,
  ServiceError,
} from "./api.js";
import type { FormState, RecommendResponse } from "./api.js";
import { highlightSegments, memberColor, renderKeywordChips, renderTokenLine } from "./highlight.js";
import { classDetailsHtml, legendHtml, rankingTableHtml } from "./render.js";
import { parseWeightInput, validateWeights, weightSum } from "./weights.js";
import type { WeightState } from "./weights.js";

let lastResponse: RecommendResponse | null = null;
let activeRow: number | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function checkedValue(name: string): string {
  const node = document.querySelector<HTMLInputElement>(`input[name="${name}"]:checked`);
  return node ? node.value : "";
}

function readWeights(): WeightState {
  return {
    coverage: parseWeightInput(el<HTMLInputElement>("w-coverage").value),
    acceptance: parseWeightInput(el<HTMLInputElement>("w-acceptance").value),
    detail: parseWeightInput(el<HTMLInputElement>("w-detail").value),
    specialization: parseWeightInput(el<HTMLInputElement>("w-specialization").value),
  };
}

function readFormState(): FormState {
  return {
    input: el<HTMLTextAreaElement>("input-text").value,
    inputType: checkedValue("input-type") as FormState["inputType"],
    outputType: checkedValue("output-type") as FormState["outputType"],
    algorithm: el<HTMLSelectElement>("algorithm").value as FormState["algorithm"],
    weights: readWeights(),
    maxSetSize: Number(el<HTMLInputElement>("max-set-size").value),
    ontologyFilter: el<HTMLInputElement>("ontology-filter").value,
  };
}

/** Live weight feedback; an invalid combination blocks submission. */
function refreshWeightValidation(): void {
  const weights = readWeights();
  const message = validateWeights(weights);
  el("weight-sum").textContent = `sum ${weightSum(weights).toFixed(4)}`;
  el("weight-error").textContent = message ?? "";
  el<HTMLButtonElement>("submit-btn").disabled = message !== null;
}

function setBanner(text: string, isError: boolean): void {
  const banner = el("banner");
  banner.textContent = text;
  banner.className = isError ? "banner error" : "banner";
  banner.hidden = text === "";
}

function colorForEntry(entryIndex: number): (ontology: string) => string {
  const members = lastResponse!.entries[entryIndex].ontologies;
  return (ontology) => memberColor(Math.max(0, members.indexOf(ontology)));
}

function renderRanking(): void {
  const resp = lastResponse;
  if (resp === null) {
    return;
  }
  const isSetMode = resp.output_type === "sets";
  el("ranking").innerHTML = rankingTableHtml(resp.entries, activeRow, isSetMode);
  const meta =
    `${resp.entries.length} result${resp.entries.length === 1 ? "" : "s"}` +
    ` of ${resp.total_candidates} candidate${resp.total_candidates === 1 ? "" : "s"},` +
    ` ${resp.union_covered_words} input word${resp.union_covered_words === 1 ? "" : "s"} coverable`;
  el("result-meta").textContent = meta;
  el("results").hidden = false;
}

function renderHighlight(): void {
  const resp = lastResponse;
  const box = el("highlight-box");
  if (resp === null || activeRow === null) {
    box.hidden = true;
    return;
  }
  const entry = resp.entries[activeRow];
  const segments = highlightSegments(entry.annotations);
  const colorFor = colorForEntry(activeRow);
  const line =
    resp.keywords !== null && resp.keyword_spans !== null
      ? renderKeywordChips(resp.tokens, resp.keywords, resp.keyword_spans, segments, colorFor)
      : renderTokenLine(resp.tokens, segments, colorFor);
  el("legend").innerHTML = legendHtml(entry);
  el("highlight-line").innerHTML = line;
  box.hidden = false;
}

function hideDetails(): void {
  el("detail-panel").hidden = true;
}

async function submit(event: Event): Promise<void> {
  event.preventDefault();
  const form = readFormState();
  if (form.input.trim() === "") {
    el("form-error").textContent = "enter some text or keywords first";
    return;
  }
  el("form-error").textContent = "";
  if (validateWeights(form.weights) !== null) {
    return;
  }
  const button = el<HTMLButtonElement>("submit-btn");
  button.disabled = true;
  setBanner("", false);
  try {
    lastResponse = await postRecommend(buildRequestBody(form));
    activeRow = null;
    renderRanking();
    renderHighlight();
    hideDetails();
  } catch (err) {
    if (err instanceof ServiceError) {
      setBanner(`${err.kind}: ${err.message}`, true);
    } else {
      setBanner("service unreachable", true);
    }
  } finally {
    button.disabled = false;
    refreshWeightValidation();
  }
}

function onRankingClick(event: Event): void {
  const target = event.target as HTMLElement;
  const toggle = target.closest<HTMLElement>("[data-toggle]");
  if (toggle === null) {
    return;
  }
  const row = Number(toggle.dataset.toggle);
  activeRow = activeRow === row ? null : row;
  renderRanking();
  renderHighlight();
  hideDetails();
}

function onHighlightClick(event: Event): void {
  const target = event.target as HTMLElement;
  const mark = target.closest<HTMLElement>("mark.hl");
  if (mark === null || lastResponse === null || activeRow === null) {
    return;
  }
  const ann = lastResponse.entries[activeRow].annotations[Number(mark.dataset.ann)];
  if (ann === undefined) {
    return;
  }
  el("detail-body").innerHTML = classDetailsHtml(ann);
  el("detail-panel").hidden = false;
}

function init(): void {
  el("query-form").addEventListener("submit", (ev) => {
    void submit(ev);
  });
  el("ranking").addEventListener("click", onRankingClick);
  el("highlight-line").addEventListener("click", onHighlightClick);
  el("detail-close").addEventListener("click", hideDetails);
  for (const id of ["w-coverage", "w-acceptance", "w-detail", "w-specialization"]) {
    el(id).addEventListener("input", refreshWeightValidation);
  }
  refreshWeightValidation();
  fetchHealth()
    .then((h) => setBanner(`connected, ${h.ontologies} ontologies loaded`, false))
    .catch(() => setBanner("service unreachable", true));
}

init();
