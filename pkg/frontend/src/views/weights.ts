/** Slider per quality attribute; changes post /recommend (debounced 250 ms). */

import { SLIDER_DEBOUNCE_MS, debounce } from "../debounce.js";
import { Catalog, WeightsPanel } from "../state.js";
import { clear, el } from "./dom.js";

export function renderWeights(
  root: HTMLElement,
  panel: WeightsPanel,
  catalog: Catalog,
  waitMs: number = SLIDER_DEBOUNCE_MS,
): void {
  const { model, weights, ranking, error } = panel.state;
  clear(root);
  root.append(el("h2", {}, "Weights"));

  const picker = el(
    "div",
    { class: "model-picker" },
    ...[...catalog.models.map((m) => m.id), "all"].map((id) =>
      el(
        "button",
        {
          class: id === model ? "active" : "",
          onclick: () => {
            panel.setModel(id);
            void panel.refresh();
          },
        },
        id,
      ),
    ),
  );
  root.append(picker);

  const sliders = el("div", { class: "sliders" });
  const push = debounce((qa: string, value: number) => void panel.setWeight(qa, value), waitMs);
  for (const qa of catalog.qaIds) {
    const value = weights[qa] ?? 0;
    const input = el("input", {
      type: "range",
      min: "0",
      max: "1",
      step: "0.05",
      value: String(value),
      "data-qa": qa,
      oninput: (event) => {
        const target = event.target as HTMLInputElement;
        push(qa, Number(target.value));
      },
    });
    sliders.append(el("label", { class: "slider" }, el("span", {}, qa), input));
  }
  root.append(sliders);

  if (error) {
    root.append(el("p", { class: "error", role: "alert" }, error));
  }

  if (ranking) {
    const list = el("ol", { class: "ranking" });
    for (const row of ranking.ranking) {
      const chips = el("span", { class: "chips" });
      for (const c of row.contributions) {
        chips.append(el("span", { class: `chip ${c.polarity === "+" ? "plus" : "minus"}` }, `${c.polarity}${c.qa}`));
      }
      list.append(
        el(
          "li",
          { "data-pattern": row.pattern },
          el("span", { class: "score" }, row.score.toFixed(2)),
          el("span", { class: "name" }, row.name),
          chips,
        ),
      );
    }
    root.append(list);
  }
}
