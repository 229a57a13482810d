import { ApiClient, ModelDetail } from "./api.js";
import { WalkthroughFlow, WeightsPanel, WhatIfBasket, buildCatalog } from "./state.js";
import { renderBasket } from "./views/basket.js";
import { renderBrowser } from "./views/browser.js";
import { clear, el } from "./views/dom.js";
import { renderWalkthrough } from "./views/walkthrough.js";
import { renderWeights } from "./views/weights.js";

const TABS = ["walkthrough", "weights", "what-if", "browser"] as const;
type Tab = (typeof TABS)[number];

async function boot(root: HTMLElement): Promise<void> {
  const api = new ApiClient((input, init) => fetch(input, init));
  const summaries = await api.listModels();
  const models: ModelDetail[] = [];
  for (const summary of summaries.models) {
    models.push(await api.getModel(summary.id));
  }
  const catalog = buildCatalog(models);

  const flow = new WalkthroughFlow(api);
  const weights = new WeightsPanel(api, catalog.models[0]?.id ?? "all");
  const basket = new WhatIfBasket(api, () => new Set(catalog.patternById.keys()));

  let tab: Tab = "walkthrough";
  let browserModel = catalog.models[0]?.id ?? "";

  const nav = el("nav", { class: "tabs" });
  const body = el("main", { class: "tab-body" });

  const render = () => {
    clear(nav);
    for (const name of TABS) {
      nav.append(
        el(
          "button",
          {
            class: name === tab ? "tab active" : "tab",
            onclick: () => {
              tab = name;
              render();
            },
          },
          name,
        ),
      );
    }
    clear(body);
    const pane = el("div", { class: `pane ${tab}` });
    body.append(pane);
    if (tab === "walkthrough") {
      renderWalkthrough(pane, flow, catalog);
    } else if (tab === "weights") {
      renderWeights(pane, weights, catalog);
    } else if (tab === "what-if") {
      renderBasket(pane, basket, catalog);
    } else {
      renderBrowser(pane, catalog, browserModel, (id) => {
        browserModel = id;
        render();
      });
    }
  };

  flow.subscribe(render);
  weights.subscribe(render);
  basket.subscribe(render);

  clear(root);
  root.append(el("h1", {}, "Microservices pattern advisor"), nav, body);
  render();
}

const root = document.getElementById("app");
if (root) {
  boot(root).catch((error) => {
    root.textContent = `Failed to reach the advisor service: ${error}`;
  });
}
