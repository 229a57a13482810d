import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, LatestOnly } from "../src/api.js";
import { fixture, fixtureService, jsonResponse } from "./helpers.js";

describe("ApiClient", () => {
  it("decodes model summaries", async () => {
    const api = new ApiClient(fixtureService());
    const { models } = await api.listModels();
    expect(models.map((m) => m.id)).toEqual(["decomposition", "security", "communication", "discovery"]);
    expect(models.map((m) => m.patterns)).toEqual([7, 8, 12, 6]);
  });

  it("fetches a full model with patterns and dot text", async () => {
    const api = new ApiClient(fixtureService());
    const model = await api.getModel("discovery");
    expect(model.patterns).toHaveLength(6);
    expect(model.dot.startsWith("digraph")).toBe(true);
  });

  it("surfaces error bodies as ApiError with code and status", async () => {
    const api = new ApiClient(fixtureService());
    await expect(api.createSession("warp")).rejects.toMatchObject({
      status: 404,
      code: "E_UNKNOWN_MODEL",
    });
  });

  it("maps arity violations to their service code", async () => {
    const api = new ApiClient(fixtureService());
    const error = await api.submitAnswer("fixture-session", "g-levels", []).catch((e) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect(error.status).toBe(fixture<{ status: number }>("error-choice-arity").status);
    expect(error.code).toBe("E_CHOICE_ARITY");
  });

  it("handles non-JSON error bodies", async () => {
    const api = new ApiClient(async () => new Response("boom", { status: 500 }));
    const error = await api.listModels().catch((e) => e);
    expect(error.code).toBe("E_HTTP");
  });
});

describe("LatestOnly", () => {
  it("aborts the previous request when a new one starts", async () => {
    const latest = new LatestOnly();
    const seen: string[] = [];
    const slow = latest.run(async (signal) => {
      await new Promise((resolve) => setTimeout(resolve, 30));
      if (!signal.aborted) {
        seen.push("slow");
      }
      return "slow";
    });
    const fast = latest.run(async () => {
      seen.push("fast");
      return "fast";
    });
    const [slowResult, fastResult] = await Promise.all([slow, fast]);
    expect(fastResult).toBe("fast");
    expect(slowResult).toBeUndefined(); // superseded
    expect(seen).toEqual(["fast"]);
  });

  it("propagates real failures but swallows aborted ones", async () => {
    const latest = new LatestOnly();
    await expect(
      latest.run(async () => {
        throw new Error("genuine");
      }),
    ).rejects.toThrow("genuine");

    const aborted = latest.run(async (signal) => {
      await new Promise((resolve) => setTimeout(resolve, 20));
      if (signal.aborted) {
        throw new Error("aborted fetch");
      }
      return 1;
    });
    const winner = latest.run(async () => 2);
    expect(await aborted).toBeUndefined();
    expect(await winner).toBe(2);
  });

  it("passes (method, path, body) through to the transport", async () => {
    const log = { requests: [] as { method: string; path: string; body: unknown }[] };
    const api = new ApiClient(fixtureService(log));
    await api.recommend("decomposition", { flexibility: 1 });
    expect(log.requests).toEqual([
      {
        method: "POST",
        path: "/recommend",
        body: { model: "decomposition", weights: { flexibility: 1 } },
      },
    ]);
  });
});

describe("jsonResponse helper", () => {
  it("round-trips payloads", async () => {
    const response = jsonResponse({ ok: 1 });
    expect(await response.json()).toEqual({ ok: 1 });
  });
});
