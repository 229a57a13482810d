// Slider what-if: flexibility=1 on decomposition must re-render with
// decomposed-by-subdomains first, showing exactly the service's score.

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient, RecommendBody } from "../src/api.js";
import { WeightsPanel, buildCatalog } from "../src/state.js";
import { renderWeights } from "../src/views/weights.js";
import { allModelFixtures, fixture, fixtureService } from "./helpers.js";

function setup(log = { requests: [] as { method: string; path: string; body: unknown }[] }) {
  const api = new ApiClient(fixtureService(log));
  const panel = new WeightsPanel(api, "decomposition");
  const catalog = buildCatalog(allModelFixtures());
  const root = document.createElement("div");
  document.body.replaceChildren(root);
  panel.subscribe(() => renderWeights(root, panel, catalog));
  renderWeights(root, panel, catalog);
  return { panel, root, catalog, log };
}

beforeEach(() => {
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
});

describe("weights panel", () => {
  it("shows one slider per known quality attribute", () => {
    const { root, catalog } = setup();
    expect(catalog.qaIds).toHaveLength(29);
    expect(root.querySelectorAll('input[type="range"]')).toHaveLength(29);
  });

  it("flexibility=1 puts subdomains first with the service's own score", async () => {
    const { panel, root } = setup();
    await panel.setWeight("flexibility", 1);
    const expected = fixture<RecommendBody>("recommend-decomposition-flexibility");
    expect(panel.state.ranking).toEqual(expected);

    const first = root.querySelector("ol.ranking li") as HTMLElement;
    expect(first.dataset.pattern).toBe("decomposed-by-subdomains");
    const score = first.querySelector(".score")!.textContent;
    expect(score).toBe(expected.ranking[0].score.toFixed(2)); // rendered from response only
    const chips = first.querySelector(".chips")!.textContent;
    expect(chips).toContain("+flexibility");
  });

  it("debounces slider input: two quick moves, one request, one final ranking", async () => {
    const { root, log, panel } = setup();
    const slider = root.querySelector('input[data-qa="flexibility"]') as HTMLInputElement;

    slider.value = "0.4";
    slider.dispatchEvent(new Event("input"));
    vi.advanceTimersByTime(100);
    slider.value = "1";
    slider.dispatchEvent(new Event("input"));
    vi.advanceTimersByTime(249);
    expect(log.requests.filter((r) => r.path === "/recommend")).toHaveLength(0);

    vi.advanceTimersByTime(1);
    await vi.waitFor(() => {
      expect(panel.state.ranking).not.toBeNull();
    });
    const recommends = log.requests.filter((r) => r.path === "/recommend");
    expect(recommends).toHaveLength(1);
    expect(recommends[0].body).toEqual({ model: "decomposition", weights: { flexibility: 1 } });
  });

  it("all sliders at zero renders all-zero scores from the service response", async () => {
    const { panel, root } = setup();
    await panel.refresh();
    const expected = fixture<RecommendBody>("recommend-decomposition-empty");
    expect(panel.state.ranking).toEqual(expected);
    const scores = [...root.querySelectorAll("ol.ranking .score")].map((n) => n.textContent);
    expect(scores).toEqual(expected.ranking.map((r) => r.score.toFixed(2)));
    expect(new Set(scores)).toEqual(new Set(["0.00"]));
  });

  it("clamps slider values into [0, 1]", async () => {
    const { panel } = setup();
    await panel.setWeight("flexibility", 7);
    expect(panel.state.weights.flexibility).toBe(1);
    await panel.setWeight("flexibility", -2);
    expect(panel.state.weights.flexibility).toBeUndefined();
  });

  it("renders 422 errors inline", async () => {
    const { panel, root } = setup();
    // bypass the slider clamp to simulate a rejected request
    panel.update({ weights: { sparkle: 1 } });
    await panel.refresh();
    expect(panel.state.error).toContain("E_UNKNOWN_QA");
    expect(root.querySelector(".error")!.textContent).toContain("sparkle");
  });
});
