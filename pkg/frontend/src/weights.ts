/**
 * Criterion weight form state and its live validation. The rule matches the
 * service exactly (non-negative, sum to 1 within 1e-9) so a form that passes
 * here is never rejected server-side for its weights, and vice versa.
 */

export interface WeightState {
  coverage: number;
  acceptance: number;
  detail: number;
  specialization: number;
}

export const DEFAULT_WEIGHTS: WeightState = {
  coverage: 0.55,
  acceptance: 0.15,
  detail: 0.15,
  specialization: 0.15,
};

export const SUM_TOLERANCE = 1e-9;

export function weightSum(w: WeightState): number {
  return w.coverage + w.acceptance + w.detail + w.specialization;
}

/** Null when valid, otherwise a message suitable for inline display. */
export function validateWeights(w: WeightState): string | null {
  const values = [w.coverage, w.acceptance, w.detail, w.specialization];
  if (values.some((v) => Number.isNaN(v))) {
    return "every weight needs a numeric value";
  }
  if (values.some((v) => v < 0)) {
    return "weights must be non-negative";
  }
  const sum = weightSum(w);
  if (Math.abs(sum - 1.0) > SUM_TOLERANCE) {
    return `weights must sum to 1 (currently ${sum.toFixed(4)})`;
  }
  return null;
}

/** Parse a text-field value; empty or non-numeric input becomes NaN. */
export function parseWeightInput(raw: string): number {
  const trimmed = raw.trim();
  if (trimmed === "") {
    return NaN;
  }
  return Number(trimmed);
}
