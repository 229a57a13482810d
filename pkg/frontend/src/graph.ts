/** Layered left-to-right layout for the decision-graph browser. */

import { EdgeRecord, NodeRecord } from "./api.js";

export interface PlacedNode {
  node: NodeRecord;
  x: number;
  y: number;
  depth: number;
}

export interface Layout {
  nodes: PlacedNode[];
  width: number;
  height: number;
  position(id: string): PlacedNode | undefined;
}

export const COLUMN_WIDTH = 210;
export const ROW_HEIGHT = 64;
const MARGIN = 40;

/** Columns follow the longest path from the start node, rows keep node order. */
export function layoutModel(nodes: NodeRecord[], edges: EdgeRecord[]): Layout {
  const depth = new Map<string, number>();
  const start = nodes.find((n) => n.kind === "start");
  if (start) {
    depth.set(start.id, 0);
    let changed = true;
    let guard = 0;
    while (changed && guard < nodes.length + 1) {
      changed = false;
      guard += 1;
      for (const edge of edges) {
        const from = depth.get(edge.from);
        if (from === undefined) {
          continue;
        }
        const next = from + 1;
        if ((depth.get(edge.to) ?? -1) < next) {
          depth.set(edge.to, next);
          changed = true;
        }
      }
    }
  }

  const byColumn = new Map<number, NodeRecord[]>();
  for (const node of nodes) {
    const col = depth.get(node.id) ?? 0;
    const bucket = byColumn.get(col) ?? [];
    bucket.push(node);
    byColumn.set(col, bucket);
  }

  const placed: PlacedNode[] = [];
  const tallest = Math.max(1, ...[...byColumn.values()].map((c) => c.length));
  for (const [col, bucket] of byColumn) {
    const offset = ((tallest - bucket.length) * ROW_HEIGHT) / 2;
    bucket.forEach((node, row) => {
      placed.push({
        node,
        depth: col,
        x: MARGIN + col * COLUMN_WIDTH,
        y: MARGIN + offset + row * ROW_HEIGHT,
      });
    });
  }

  const columns = Math.max(1, ...[...byColumn.keys()].map((c) => c + 1));
  const layout: Layout = {
    nodes: placed,
    width: MARGIN * 2 + columns * COLUMN_WIDTH,
    height: MARGIN * 2 + tallest * ROW_HEIGHT,
    position: (id) => placed.find((p) => p.node.id === id),
  };
  return layout;
}
