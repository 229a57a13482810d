"""Graphviz DOT rendering of decision models (text only)."""

from __future__ import annotations

import textwrap

from .model import DecisionModel, NodeKind

_GATEWAY_MARK = {
    NodeKind.GATEWAY_EXCLUSIVE: "X",
    NodeKind.GATEWAY_INCLUSIVE: "O",
    NodeKind.GATEWAY_PARALLEL: "+",
}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _wrap(text: str, width: int = 28) -> str:
    return "\\n".join(textwrap.wrap(text, width))


def export_dot(model: DecisionModel, patterns=None) -> str:
    """Deterministic DOT digraph: diamonds for gateways (X/O/+), rounded boxes for
    patterns, octagons with dashed arrows for constraints, dir=both for complements."""
    names = {p.id: p.name for p in patterns or ()}
    lines = [f"digraph {_quote(model.id)} {{"]
    lines.append("  rankdir=TB;")
    lines.append(f"  subgraph {_quote('cluster_' + model.id)} {{")
    lines.append(f"    label={_quote(model.title)};")
    lines.append('    style="filled";')
    lines.append('    fillcolor="grey92";')

    constraint_edges = []
    for node in model.nodes:
        if node.kind is NodeKind.START:
            lines.append(
                f"    {_quote(node.id)} [shape=circle, label=\"\", width=0.22, "
                'style="filled", fillcolor="black"];'
            )
        elif node.kind in _GATEWAY_MARK:
            mark = _GATEWAY_MARK[node.kind]
            tooltip = f", tooltip={_quote(node.label)}" if node.label else ""
            lines.append(f"    {_quote(node.id)} [shape=diamond, label={_quote(mark)}{tooltip}];")
        else:
            label = _wrap(names.get(node.pattern_ref or "", node.pattern_ref or node.id))
            lines.append(
                f"    {_quote(node.id)} [shape=box, style=\"rounded,filled\", "
                f'fillcolor="white", label={_quote(label)}];'
            )
            pattern = next((p for p in patterns or () if p.id == node.pattern_ref), None)
            for i, constraint in enumerate(pattern.constraints if pattern else ()):
                cid = f"c-{node.id}-{i}"
                lines.append(
                    f"    {_quote(cid)} [shape=octagon, fontsize=9, label={_quote(_wrap(constraint))}];"
                )
                constraint_edges.append(f"  {_quote(cid)} -> {_quote(node.id)} [style=dashed];")

    for edge in model.flow_edges:
        label = f" [label={_quote(_wrap(edge.condition, 22))}]" if edge.condition else ""
        lines.append(f"    {_quote(edge.src)} -> {_quote(edge.dst)}{label};")
    lines.append("  }")

    for comp in model.complements_edges:
        lines.append(f"  {_quote(comp.a)} -> {_quote(comp.b)} [dir=both, style=bold];")
    lines.extend(constraint_edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
