/**
 * HTML builders for the ranking table, the per-set contribution bars, and the
 * matched-class detail panel. Every score cell prints a value from the
 * response verbatim; in particular the four criterion columns show the
 * service's display_scores, never anything recomputed from the raw scores.
 */

import type { AnnotationOut, EntryOut } from "./api.js";
import { escapeHtml, memberColor } from "./highlight.js";

export const CRITERION_COLUMNS = ["coverage", "acceptance", "detail", "specialization"] as const;

export function formatFinal(value: number): string {
  return value.toFixed(4);
}

function acronymBadges(entry: EntryOut, colorCoded: boolean): string {
  return entry.ontologies
    .map((acr, i) => {
      const style = colorCoded ? ` style="border-color:${memberColor(i)};color:${memberColor(i)}"` : "";
      return `<span class="badge"${style}>${escapeHtml(acr)}</span>`;
    })
    .join(" ");
}

/**
 * Stacked bar of each member's share of the set's raw coverage, colored to
 * match that member's highlight color. Widths come from the response's
 * contributions field.
 */
export function contributionBarHtml(entry: EntryOut): string {
  if (entry.contributions === null) {
    return "";
  }
  const parts = entry.ontologies.map((acr, i) => {
    const share = entry.contributions![acr] ?? 0;
    const pct = (share * 100).toFixed(1);
    return (
      `<span class="contrib-seg" data-member="${escapeHtml(acr)}"` +
      ` style="width:${pct}%;background:${memberColor(i)}"` +
      ` title="${escapeHtml(acr)} ${pct}% of set coverage"></span>`
    );
  });
  return `<div class="contrib-bar">${parts.join("")}</div>`;
}

export function rankingRowHtml(entry: EntryOut, rowIndex: number, isActive: boolean, isSetMode: boolean): string {
  const display = entry.display_scores;
  const scoreCells = CRITERION_COLUMNS.map(
    (c) => `<td class="num">${display[c]}</td>`,
  ).join("");
  const legacyCell =
    entry.legacy_score !== null ? `<td class="num">${entry.legacy_score}</td>` : "";
  const toggleLabel = isActive ? "hide" : "highlight";
  const toggleClass = isActive ? "toggle-btn active" : "toggle-btn";
  return (
    `<tr data-row="${rowIndex}">` +
    `<td class="num">${entry.position}</td>` +
    `<td>${acronymBadges(entry, isSetMode)}${contributionBarHtml(entry)}</td>` +
    `<td class="num">${formatFinal(entry.final_score)}</td>` +
    scoreCells +
    legacyCell +
    `<td class="num">${entry.annotation_count}</td>` +
    `<td><button type="button" class="${toggleClass}" data-toggle="${rowIndex}">${toggleLabel}</button></td>` +
    `</tr>`
  );
}

export function rankingTableHtml(entries: EntryOut[], activeIndex: number | null, isSetMode: boolean): string {
  if (entries.length === 0) {
    return `<p class="empty-note">No ontology in the corpus matched this input.</p>`;
  }
  const hasLegacy = entries[0].legacy_score !== null;
  const legacyHeader = hasLegacy ? `<th class="num">legacy</th>` : "";
  const header =
    `<tr><th class="num">#</th><th>${isSetMode ? "ontology set" : "ontology"}</th>` +
    `<th class="num">final</th>` +
    CRITERION_COLUMNS.map((c) => `<th class="num">${c}</th>`).join("") +
    legacyHeader +
    `<th class="num">anns</th><th></th></tr>`;
  const rows = entries
    .map((e, i) => rankingRowHtml(e, i, i === activeIndex, isSetMode))
    .join("");
  return `<table class="ranking"><thead>${header}</thead><tbody>${rows}</tbody></table>`;
}

/** Color legend for the active entry's members, shown next to the highlights. */
export function legendHtml(entry: EntryOut): string {
  const items = entry.ontologies.map((acr, i) => {
    return (
      `<span class="legend-item"><span class="legend-swatch" style="background:${memberColor(i)}"></span>` +
      `${escapeHtml(acr)}</span>`
    );
  });
  return items.join("");
}

const MATCH_TYPE_LABELS: Record<string, string> = {
  PREF: "preferred name",
  SYN: "synonym",
};

/** Side panel body for a clicked highlight; all data is already local. */
export function classDetailsHtml(ann: AnnotationOut): string {
  const d = ann.class_details;
  const synonyms =
    d.synonyms.length > 0
      ? d.synonyms.map((s) => `<li>${escapeHtml(s)}</li>`).join("")
      : "<li class=\"none\">none</li>";
  const matchLabel = MATCH_TYPE_LABELS[ann.match_type] ?? ann.match_type;
  return (
    `<h3>${escapeHtml(ann.class_label)}</h3>` +
    `<dl>` +
    `<dt>ontology</dt><dd>${escapeHtml(ann.ontology)}</dd>` +
    `<dt>class id</dt><dd>${escapeHtml(ann.class_id)}</dd>` +
    `<dt>matched via</dt><dd>${escapeHtml(matchLabel)}: "${escapeHtml(ann.matched_text)}"</dd>` +
    `<dt>word span</dt><dd>${ann.word_span[0]}-${ann.word_span[1]}</dd>` +
    `<dt>hierarchy level</dt><dd>${d.hierarchy_level}</dd>` +
    `<dt>definitions</dt><dd>${d.definitions}</dd>` +
    `<dt>properties</dt><dd>${d.properties}</dd>` +
    `<dt>synonyms</dt><dd><ul>${synonyms}</ul></dd>` +
    `</dl>`
  );
}
