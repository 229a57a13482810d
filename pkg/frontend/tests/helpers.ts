import { readFileSync } from "node:fs";
import { join } from "node:path";

import { FetchLike } from "../src/api.js";

const FIXTURES_DIR = join(process.cwd(), "tests", "fixtures");

export function fixture<T = unknown>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES_DIR, `${name}.json`), "utf-8")) as T;
}

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export interface ServiceLog {
  requests: { method: string; path: string; body: unknown }[];
}

/** Replays the captured service fixtures; behaves like the real backend for
 * the flows the tests exercise. */
export function fixtureService(log: ServiceLog = { requests: [] }): FetchLike {
  return async (input: string, init?: RequestInit) => {
    const method = init?.method ?? "GET";
    const path = input.replace(/^https?:\/\/[^/]+/, "");
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    log.requests.push({ method, path, body });

    if (method === "GET" && path === "/models") {
      return jsonResponse(fixture("models"));
    }
    const modelMatch = path.match(/^\/models\/([a-z-]+)$/);
    if (method === "GET" && modelMatch) {
      return jsonResponse(fixture(`model-${modelMatch[1]}`));
    }
    if (method === "POST" && path === "/sessions") {
      const model = (body as { model: string }).model;
      if (model === "discovery" || model === "security") {
        return jsonResponse(fixture(`session-${model}-created`), 201);
      }
      return jsonResponse({ code: "E_UNKNOWN_MODEL", message: `unknown model '${model}'` }, 404);
    }
    if (method === "POST" && path === "/sessions/fixture-session/answers") {
      const { gateway, edges } = body as { gateway: string; edges: string[] };
      if (edges.length === 0) {
        const err = fixture<{ status: number; body: unknown }>("error-choice-arity");
        return jsonResponse(err.body, err.status);
      }
      if (gateway === "g-registration") {
        return jsonResponse(fixture("session-discovery-step1"));
      }
      if (gateway === "g-lookup") {
        return jsonResponse(fixture("session-discovery-step2"));
      }
      if (gateway === "g-levels") {
        return jsonResponse(fixture("session-security-levels"));
      }
      return jsonResponse({ code: "E_NOT_PENDING", message: `gateway '${gateway}' is not awaiting a decision` }, 409);
    }
    if (method === "GET" && path === "/sessions/fixture-session/result") {
      return jsonResponse(fixture("session-discovery-result"));
    }
    if (method === "POST" && path === "/recommend") {
      const { weights } = body as { weights: Record<string, number> };
      if ("sparkle" in weights) {
        const err = fixture<{ status: number; body: unknown }>("error-unknown-qa");
        return jsonResponse(err.body, err.status);
      }
      if (Object.keys(weights).length === 0) {
        return jsonResponse(fixture("recommend-decomposition-empty"));
      }
      return jsonResponse(fixture("recommend-decomposition-flexibility"));
    }
    if (method === "POST" && path === "/tradeoff") {
      const { patterns } = body as { patterns: string[] };
      if (patterns.includes("synchronous-messaging")) {
        return jsonResponse(fixture("tradeoff-sync-async"));
      }
      return jsonResponse(fixture("tradeoff-api-gateway"));
    }
    return jsonResponse({ code: "E_HTTP", message: `unmatched ${method} ${path}` }, 500);
  };
}

export function allModelFixtures() {
  return ["decomposition", "security", "communication", "discovery"].map((id) =>
    fixture<import("../src/api.js").ModelDetail>(`model-${id}`),
  );
}
