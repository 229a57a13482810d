/** Wizard over pending gateways: radios for exclusive, checkboxes for inclusive. */

import { PendingGateway } from "../api.js";
import { Catalog, WalkthroughFlow } from "../state.js";
import { clear, el } from "./dom.js";

function questionCard(
  flow: WalkthroughFlow,
  gateway: PendingGateway,
): HTMLElement {
  const exclusive = gateway.kind === "gateway_exclusive";
  const inputType = exclusive ? "radio" : "checkbox";
  const group = `gw-${gateway.gateway}`;
  const inputs: HTMLInputElement[] = [];

  const options = gateway.options.map((option) => {
    const input = el("input", {
      type: inputType,
      name: group,
      value: option.edge,
    });
    inputs.push(input);
    return el("label", { class: "option" }, input, option.condition ?? option.edge);
  });

  const submit = el(
    "button",
    {
      class: "answer",
      onclick: () => {
        const edges = inputs.filter((i) => i.checked).map((i) => i.value);
        if (edges.length > 0) {
          void flow.answer(gateway.gateway, edges);
        }
      },
    },
    "Answer",
  );

  return el(
    "section",
    { class: `card gateway ${exclusive ? "exclusive" : "inclusive"}`, "data-gateway": gateway.gateway },
    el("h3", {}, gateway.label ?? gateway.gateway),
    el("p", { class: "hint" }, exclusive ? "choose exactly one" : "choose one or more"),
    ...options,
    submit,
  );
}

export function renderWalkthrough(
  root: HTMLElement,
  flow: WalkthroughFlow,
  catalog: Catalog,
): void {
  const { model, session, result, error, busy } = flow.state;
  clear(root);

  const picker = el(
    "div",
    { class: "model-picker" },
    ...catalog.models.map((m) =>
      el(
        "button",
        { class: m.id === model ? "active" : "", onclick: () => void flow.start(m.id) },
        m.title,
      ),
    ),
  );
  root.append(el("h2", {}, "Walkthrough"), picker);

  if (error) {
    root.append(el("p", { class: "error", role: "alert" }, error));
  }
  if (!session) {
    if (!error) {
      root.append(el("p", { class: "hint" }, "Pick a decision model to begin."));
    }
    return;
  }

  if (session.selected.length > 0) {
    root.append(
      el(
        "p",
        { class: "selected-so-far" },
        "Selected so far: ",
        session.selected.map((p) => catalog.patternById.get(p)?.name ?? p).join(", "),
      ),
    );
  }

  for (const gateway of session.pending) {
    root.append(questionCard(flow, gateway));
  }

  if (busy) {
    root.append(el("p", { class: "hint" }, "…"));
  }

  if (result) {
    const resultCard = el("section", { class: "card result" }, el("h3", {}, "Result"));
    const list = el("ul", { class: "selected" });
    for (const pid of result.selected) {
      list.append(el("li", {}, catalog.patternById.get(pid)?.name ?? pid));
    }
    resultCard.append(list);
    if (result.constraints.length > 0) {
      resultCard.append(el("h4", {}, "Constraints"));
      const constraints = el("ul", { class: "constraints" });
      for (const row of result.constraints) {
        constraints.append(el("li", {}, `${row.pattern}: ${row.text}`));
      }
      resultCard.append(constraints);
    }
    if (result.suggestions.length > 0) {
      resultCard.append(
        el(
          "p",
          { class: "suggestions" },
          "Consider adding: ",
          result.suggestions
            .map((p) => catalog.patternById.get(p)?.name ?? p)
            .join(", "),
        ),
      );
    }
    if (result.tradeoff.conflicts.length > 0) {
      resultCard.append(
        el("p", { class: "conflicts" }, "Trade-off conflicts: " + result.tradeoff.conflicts.join(", ")),
      );
    }
    resultCard.append(el("button", { class: "restart", onclick: () => flow.reset() }, "Start over"));
    root.append(resultCard);
  }
}
