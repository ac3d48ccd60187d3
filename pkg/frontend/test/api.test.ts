import { afterEach, describe, expect, it, vi } from "vitest";

import {
  buildRequestBody,
  parseOntologyFilter,
  postRecommend,
  ServiceError,
} from "../src/api.js";
import type { FormState } from "../src/api.js";
import { DEFAULT_WEIGHTS } from "../src/weights.js";

function formState(overrides: Partial<FormState> = {}): FormState {
  return {
    input: "a thrombocyte is a kind of blood cell",
    inputType: "text",
    outputType: "ontologies",
    algorithm: "v2",
    weights: { ...DEFAULT_WEIGHTS },
    maxSetSize: 3,
    ontologyFilter: "",
    ...overrides,
  };
}

describe("parseOntologyFilter", () => {
  it("splits on commas and trims", () => {
    expect(parseOntologyFilter("SNOMEDCT, MEDDRA")).toEqual(["SNOMEDCT", "MEDDRA"]);
  });

  it("drops blank pieces", () => {
    expect(parseOntologyFilter(" , SNOMEDCT ,, ")).toEqual(["SNOMEDCT"]);
    expect(parseOntologyFilter("")).toEqual([]);
  });
});

describe("buildRequestBody", () => {
  it("always sends all four weights so resubmits match the form exactly", () => {
    const body = buildRequestBody(
      formState({ weights: { coverage: 0.7, acceptance: 0.1, detail: 0.1, specialization: 0.1 } }),
    );
    expect(body.wc).toBe(0.7);
    expect(body.wa).toBe(0.1);
    expect(body.wd).toBe(0.1);
    expect(body.ws).toBe(0.1);
  });

  it("passes through input settings and the set size", () => {
    const body = buildRequestBody(
      formState({ inputType: "keywords", outputType: "sets", algorithm: "v1", maxSetSize: 2 }),
    );
    expect(body.input_type).toBe("keywords");
    expect(body.output_type).toBe("sets");
    expect(body.algorithm).toBe("v1");
    expect(body.max_elements_set).toBe(2);
  });

  it("omits the ontology filter when the field is blank", () => {
    expect(buildRequestBody(formState()).ontologies).toBeUndefined();
    const body = buildRequestBody(formState({ ontologyFilter: "ONTA, ONTB" }));
    expect(body.ontologies).toEqual(["ONTA", "ONTB"]);
  });
});

describe("postRecommend", () => {
  afterEach(() => {
    vi.unstubAllGlobals();
  });

  it("returns the parsed response body on success", async () => {
    const payload = { entries: [], tokens: ["x"], total_candidates: 0 };
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => new Response(JSON.stringify(payload), { status: 200 })),
    );
    const resp = await postRecommend(buildRequestBody(formState()));
    expect(resp.tokens).toEqual(["x"]);
  });

  it("surfaces the service's own 400 error type and message", async () => {
    const body = { error: "InvalidWeights", detail: "weights must sum to 1" };
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => new Response(JSON.stringify(body), { status: 400 })),
    );
    const err = await postRecommend(buildRequestBody(formState())).catch((e) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect(err.kind).toBe("InvalidWeights");
    expect(err.message).toContain("sum to 1");
  });

  it("posts JSON to /recommend", async () => {
    const spy = vi.fn(async () => new Response("{}", { status: 200 }));
    vi.stubGlobal("fetch", spy);
    await postRecommend(buildRequestBody(formState()));
    expect(spy).toHaveBeenCalledWith(
      "/recommend",
      expect.objectContaining({ method: "POST" }),
    );
  });
});
