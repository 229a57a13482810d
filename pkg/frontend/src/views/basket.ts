/** What-if explorer: toggle patterns in and out, trade-offs from /tradeoff only. */

import { Catalog, WhatIfBasket } from "../state.js";
import { clear, el } from "./dom.js";

export function renderBasket(root: HTMLElement, basket: WhatIfBasket, catalog: Catalog): void {
  const { basket: chosen, report, error } = basket.state;
  clear(root);
  root.append(el("h2", {}, "What-if basket"));

  const picker = el("div", { class: "pattern-picker" });
  for (const model of catalog.models) {
    const group = el("fieldset", {}, el("legend", {}, model.title));
    for (const pattern of model.patterns) {
      const active = chosen.includes(pattern.id);
      group.append(
        el(
          "button",
          {
            class: active ? "pattern active" : "pattern",
            "data-pattern": pattern.id,
            title: pattern.summary,
            onclick: () => void basket.toggle(pattern.id),
          },
          pattern.name,
        ),
      );
    }
    picker.append(group);
  }
  root.append(picker);

  if (error) {
    root.append(el("p", { class: "error", role: "alert" }, error));
  }

  if (chosen.length === 0) {
    root.append(el("p", { class: "hint empty" }, "Basket is empty; add patterns to compare."));
    return;
  }
  if (!report) {
    return;
  }

  const table = el("table", { class: "tradeoff" });
  table.append(
    el(
      "tr",
      {},
      el("th", {}, "quality attribute"),
      el("th", {}, "+"),
      el("th", {}, "-"),
      el("th", {}, "net"),
    ),
  );
  for (const row of report.qas) {
    const conflict = report.conflicts.includes(row.qa);
    const hover = [
      row.positive.length ? `+ ${row.positive.join(", ")}` : "",
      row.negative.length ? `- ${row.negative.join(", ")}` : "",
    ]
      .filter(Boolean)
      .join("  ");
    table.append(
      el(
        "tr",
        { class: conflict ? "conflict" : "", "data-qa": row.qa, title: hover },
        el("td", {}, conflict ? `${row.qa} ⚠` : row.qa),
        el("td", {}, String(row.plus)),
        el("td", {}, String(row.minus)),
        el("td", {}, String(row.net)),
      ),
    );
  }
  root.append(table);

  if (report.constraints.length > 0) {
    const list = el("ul", { class: "constraints" });
    for (const row of report.constraints) {
      list.append(el("li", {}, `${row.pattern}: ${row.text}`));
    }
    root.append(el("h3", {}, "Constraints"), list);
  }
}
