/** Decision-graph browser: pan/zoom SVG with clickable pattern nodes, and a
 * raw-DOT fallback when rendering fails. */

import { ModelDetail, NodeRecord } from "../api.js";
import { layoutModel } from "../graph.js";
import { Catalog } from "../state.js";
import { clear, el, svgEl } from "./dom.js";

const GATEWAY_MARKS: Record<string, string> = {
  gateway_exclusive: "X",
  gateway_inclusive: "O",
  gateway_parallel: "+",
};

function nodeShape(node: NodeRecord, x: number, y: number, onClick: (n: NodeRecord) => void): SVGElement {
  const group = svgEl("g", { class: `node ${node.kind}`, "data-node": node.id });
  if (node.kind === "start") {
    group.append(svgEl("circle", { cx: String(x), cy: String(y), r: "9", fill: "#222" }));
  } else if (node.kind === "pattern") {
    const rect = svgEl("rect", {
      x: String(x - 80),
      y: String(y - 18),
      width: "160",
      height: "36",
      rx: "10",
      class: "pattern-box",
    });
    group.append(rect);
    const text = svgEl("text", { x: String(x), y: String(y + 4), "text-anchor": "middle", class: "pattern-label" });
    text.textContent = node.pattern ?? node.id;
    group.append(text);
    group.addEventListener("click", () => onClick(node));
  } else {
    const d = 20;
    group.append(
      svgEl("polygon", {
        points: `${x},${y - d} ${x + d},${y} ${x},${y + d} ${x - d},${y}`,
        class: "gateway-diamond",
      }),
    );
    const text = svgEl("text", { x: String(x), y: String(y + 4), "text-anchor": "middle", class: "gateway-mark" });
    text.textContent = GATEWAY_MARKS[node.kind] ?? "?";
    group.append(text);
    if (node.label) {
      const title = svgEl("title");
      title.textContent = node.label;
      group.append(title);
    }
  }
  return group;
}

export function renderGraph(
  model: ModelDetail,
  onPatternClick: (node: NodeRecord) => void,
): SVGSVGElement {
  const layout = layoutModel(model.nodes, model.edges);
  const svg = svgEl("svg", {
    viewBox: `0 0 ${layout.width} ${layout.height}`,
    class: "graph",
    width: "100%",
  }) as SVGSVGElement;
  const world = svgEl("g", { class: "world" });
  svg.append(world);

  for (const edge of model.edges) {
    const from = layout.position(edge.from);
    const to = layout.position(edge.to);
    if (!from || !to) {
      throw new Error(`edge endpoint missing: ${edge.from} -> ${edge.to}`);
    }
    world.append(
      svgEl("line", {
        x1: String(from.x),
        y1: String(from.y),
        x2: String(to.x),
        y2: String(to.y),
        class: "flow-edge",
      }),
    );
    if (edge.condition) {
      const text = svgEl("text", {
        x: String((from.x + to.x) / 2),
        y: String((from.y + to.y) / 2 - 4),
        class: "condition",
        "text-anchor": "middle",
      });
      text.textContent = edge.condition;
      world.append(text);
    }
  }
  for (const placed of layout.nodes) {
    world.append(nodeShape(placed.node, placed.x, placed.y, onPatternClick));
  }

  // pan with drag, zoom with wheel
  let scale = 1;
  let panX = 0;
  let panY = 0;
  let dragging: { x: number; y: number } | null = null;
  const apply = () => world.setAttribute("transform", `translate(${panX} ${panY}) scale(${scale})`);
  svg.addEventListener("wheel", (event) => {
    event.preventDefault();
    scale = Math.min(4, Math.max(0.25, scale * (event.deltaY < 0 ? 1.1 : 0.9)));
    apply();
  });
  svg.addEventListener("mousedown", (event) => {
    dragging = { x: event.clientX - panX, y: event.clientY - panY };
  });
  svg.addEventListener("mousemove", (event) => {
    if (dragging) {
      panX = event.clientX - dragging.x;
      panY = event.clientY - dragging.y;
      apply();
    }
  });
  svg.addEventListener("mouseup", () => {
    dragging = null;
  });
  return svg;
}

export function renderBrowser(
  root: HTMLElement,
  catalog: Catalog,
  activeModel: string,
  onSelectModel: (id: string) => void,
): void {
  clear(root);
  root.append(el("h2", {}, "Model browser"));
  root.append(
    el(
      "div",
      { class: "model-picker" },
      ...catalog.models.map((m) =>
        el(
          "button",
          { class: m.id === activeModel ? "active" : "", onclick: () => onSelectModel(m.id) },
          m.title,
        ),
      ),
    ),
  );

  const model = catalog.models.find((m) => m.id === activeModel);
  if (!model) {
    root.append(el("p", { class: "error" }, `Unknown model: ${activeModel}`));
    return;
  }

  const card = el("aside", { class: "card explanation", hidden: "hidden" });
  const showPattern = (node: NodeRecord) => {
    const pattern = node.pattern ? catalog.patternById.get(node.pattern) : undefined;
    clear(card);
    card.removeAttribute("hidden");
    if (!pattern) {
      card.append(el("p", {}, node.id));
      return;
    }
    card.append(el("h3", {}, pattern.name), el("p", { class: "summary" }, pattern.summary));
    const impacts = el("ul", { class: "impacts" });
    for (const impact of pattern.impacts) {
      impacts.append(el("li", {}, `${impact.polarity} ${impact.qa}${impact.note ? ` (${impact.note})` : ""}`));
    }
    card.append(impacts);
    for (const constraint of pattern.constraints) {
      card.append(el("p", { class: "constraint" }, constraint));
    }
  };

  try {
    root.append(renderGraph(model, showPattern), card);
  } catch {
    // graph rendering failed; fall back to the raw DOT text
    root.append(el("pre", { class: "dot-fallback" }, model.dot));
  }
}
