"""Domain types for gateway-graph decision models and their structural validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping


AREAS = ("decomposition", "security", "communication", "discovery")


class NodeKind(str, Enum):
    START = "start"
    GATEWAY_EXCLUSIVE = "gateway_exclusive"
    GATEWAY_INCLUSIVE = "gateway_inclusive"
    GATEWAY_PARALLEL = "gateway_parallel"
    PATTERN = "pattern"


GATEWAY_KINDS = frozenset(
    {NodeKind.GATEWAY_EXCLUSIVE, NodeKind.GATEWAY_INCLUSIVE, NodeKind.GATEWAY_PARALLEL}
)

# Gateways that wait for a caller's answer; parallel gateways fire on their own.
DECISION_KINDS = frozenset({NodeKind.GATEWAY_EXCLUSIVE, NodeKind.GATEWAY_INCLUSIVE})


class Polarity(str, Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


class AdvisorError(Exception):
    """Domain error with a stable machine-readable code."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


class NotFoundError(AdvisorError):
    pass


@dataclass(frozen=True)
class QualityAttribute:
    id: str
    display_name: str
    aliases: tuple[str, ...] = ()


@dataclass(frozen=True)
class QaImpact:
    qa: str
    polarity: Polarity
    note: str | None = None


@dataclass(frozen=True)
class Pattern:
    id: str
    name: str
    area: str
    summary: str
    impacts: tuple[QaImpact, ...] = ()
    constraints: tuple[str, ...] = ()
    sources: tuple[str, ...] = ()


@dataclass(frozen=True)
class Node:
    id: str
    kind: NodeKind
    pattern_ref: str | None = None
    label: str | None = None


@dataclass(frozen=True)
class FlowEdge:
    src: str
    dst: str
    condition: str | None = None


@dataclass(frozen=True)
class ComplementsEdge:
    """Unordered pattern pair; stored with a <= b so symmetry is structural."""

    a: str
    b: str

    def __post_init__(self):
        if self.b < self.a:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    def other(self, pattern_id: str) -> str | None:
        if pattern_id == self.a:
            return self.b
        if pattern_id == self.b:
            return self.a
        return None


@dataclass(frozen=True)
class DecisionModel:
    id: str
    title: str
    nodes: tuple[Node, ...]
    flow_edges: tuple[FlowEdge, ...]
    complements_edges: tuple[ComplementsEdge, ...] = ()

    def node(self, node_id: str) -> Node:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise NotFoundError("E_UNKNOWN_NODE", f"no node {node_id!r} in model {self.id!r}")

    def start_node(self) -> Node:
        for n in self.nodes:
            if n.kind is NodeKind.START:
                return n
        raise NotFoundError("E_NO_START", f"model {self.id!r} has no start node")

    def pattern_ids(self) -> tuple[str, ...]:
        return tuple(n.pattern_ref for n in self.nodes if n.kind is NodeKind.PATTERN and n.pattern_ref)


@dataclass(frozen=True)
class Finding:
    code: str
    subject: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[Finding, ...] = ()
    warnings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> set[str]:
        return {f.code for f in self.errors} | {f.code for f in self.warnings}


@dataclass
class _ReportBuilder:
    errors: list[Finding] = field(default_factory=list)
    warnings: list[Finding] = field(default_factory=list)

    def error(self, code: str, subject: str, message: str) -> None:
        self.errors.append(Finding(code, subject, message))

    def warning(self, code: str, subject: str, message: str) -> None:
        self.warnings.append(Finding(code, subject, message))

    def build(self) -> ValidationReport:
        return ValidationReport(tuple(self.errors), tuple(self.warnings))


def validate_model(
    model: DecisionModel,
    patterns: Mapping[str, Pattern],
    qa_ids: Iterable[str] = (),
) -> ValidationReport:
    """Check one model against the structural invariants; never raises on bad input.

    Error codes: E_MULTI_START, E_NO_START, E_DUP_ID, E_DANGLING_REF,
    E_PATTERN_REF, E_AREA_MISMATCH, E_SELF_LOOP, E_GATEWAY_ARITY, E_CYCLE,
    E_UNREACHABLE. Warnings: W_NO_IMPACTS, W_ISOLATED_PATTERN.
    """
    rep = _ReportBuilder()
    nodes: dict[str, Node] = {}
    for n in model.nodes:
        if n.id in nodes:
            rep.error("E_DUP_ID", n.id, f"duplicate node id {n.id!r}")
        else:
            nodes[n.id] = n

    starts = [n for n in nodes.values() if n.kind is NodeKind.START]
    if not starts:
        rep.error("E_NO_START", model.id, "model has no start node")
    elif len(starts) > 1:
        for n in starts[1:]:
            rep.error("E_MULTI_START", n.id, "model has more than one start node")

    for n in nodes.values():
        if n.kind is NodeKind.PATTERN:
            if not n.pattern_ref:
                rep.error("E_PATTERN_REF", n.id, "pattern node without a pattern reference")
            elif n.pattern_ref not in patterns:
                rep.error("E_DANGLING_REF", n.id, f"unknown pattern {n.pattern_ref!r}")
            elif patterns[n.pattern_ref].area != model.id:
                rep.error(
                    "E_AREA_MISMATCH",
                    n.id,
                    f"pattern {n.pattern_ref!r} belongs to area {patterns[n.pattern_ref].area!r}",
                )
        elif n.pattern_ref:
            rep.error("E_PATTERN_REF", n.id, f"{n.kind.value} node carries a pattern reference")

    seen_edges: set[tuple[str, str]] = set()
    valid_edges: list[FlowEdge] = []
    for e in model.flow_edges:
        subject = f"{e.src}->{e.dst}"
        bad = False
        for endpoint in (e.src, e.dst):
            if endpoint not in nodes:
                rep.error("E_DANGLING_REF", subject, f"edge endpoint {endpoint!r} is not a node")
                bad = True
        if e.src == e.dst:
            rep.error("E_SELF_LOOP", subject, "flow edge loops on itself")
            bad = True
        if (e.src, e.dst) in seen_edges:
            rep.error("E_DUP_ID", subject, "duplicate flow edge")
            bad = True
        seen_edges.add((e.src, e.dst))
        if not bad:
            valid_edges.append(e)

    out_degree: dict[str, int] = {nid: 0 for nid in nodes}
    for e in valid_edges:
        out_degree[e.src] += 1
    for n in nodes.values():
        if n.kind in GATEWAY_KINDS and out_degree[n.id] < 2:
            rep.error(
                "E_GATEWAY_ARITY",
                n.id,
                f"{n.kind.value} has {out_degree[n.id]} outgoing edges, needs at least 2",
            )

    cyclic = _cycle_nodes(nodes.keys(), valid_edges)
    if cyclic:
        rep.error("E_CYCLE", cyclic[0], "flow edges form a cycle through " + ", ".join(cyclic))

    if len(starts) == 1 and not cyclic:
        reached = _reachable(starts[0].id, valid_edges)
        for nid in nodes:
            if nid not in reached:
                rep.error("E_UNREACHABLE", nid, "node not reachable from the start node")

    model_patterns = {n.pattern_ref for n in nodes.values() if n.kind is NodeKind.PATTERN and n.pattern_ref}
    seen_pairs: set[tuple[str, str]] = set()
    for c in model.complements_edges:
        subject = f"{c.a}~{c.b}"
        if c.a == c.b:
            rep.error("E_SELF_LOOP", subject, "complements edge pairs a pattern with itself")
            continue
        for endpoint in (c.a, c.b):
            if endpoint not in model_patterns:
                rep.error("E_DANGLING_REF", subject, f"{endpoint!r} is not a pattern of this model")
        if (c.a, c.b) in seen_pairs:
            rep.error("E_DUP_ID", subject, "duplicate complements edge")
        seen_pairs.add((c.a, c.b))

    for pid in sorted(model_patterns):
        p = patterns.get(pid)
        if p is not None and not p.impacts:
            rep.warning("W_NO_IMPACTS", pid, "pattern has no quality-attribute impacts")
    for pid, p in patterns.items():
        if p.area == model.id and pid not in model_patterns:
            rep.warning("W_ISOLATED_PATTERN", pid, "pattern of this area appears in no node")

    return rep.build()


def _cycle_nodes(node_ids: Iterable[str], edges: list[FlowEdge]) -> list[str]:
    """Kahn's algorithm; returns the nodes left on cycles (empty list if acyclic)."""
    indeg = {nid: 0 for nid in node_ids}
    adj: dict[str, list[str]] = {nid: [] for nid in indeg}
    for e in edges:
        adj[e.src].append(e.dst)
        indeg[e.dst] += 1
    queue = [nid for nid, d in indeg.items() if d == 0]
    removed = 0
    while queue:
        nid = queue.pop()
        removed += 1
        for succ in adj[nid]:
            indeg[succ] -= 1
            if indeg[succ] == 0:
                queue.append(succ)
    return sorted(nid for nid, d in indeg.items() if d > 0)


def _reachable(start: str, edges: list[FlowEdge]) -> set[str]:
    adj: dict[str, list[str]] = {}
    for e in edges:
        adj.setdefault(e.src, []).append(e.dst)
    seen = {start}
    stack = [start]
    while stack:
        for succ in adj.get(stack.pop(), []):
            if succ not in seen:
                seen.add(succ)
                stack.append(succ)
    return seen


def flow_successors(model: DecisionModel, node_id: str) -> list[FlowEdge]:
    """Outgoing flow edges of a node, in the model's stored (serialization) order."""
    model.node(node_id)
    return [e for e in model.flow_edges if e.src == node_id]


def reachable_patterns(model: DecisionModel, node_id: str) -> set[str]:
    """Pattern ids reachable from a node via flow edges (complements edges ignored)."""
    start = model.node(node_id)
    reached = _reachable(start.id, list(model.flow_edges))
    return {
        n.pattern_ref
        for n in model.nodes
        if n.id in reached and n.kind is NodeKind.PATTERN and n.pattern_ref
    }


def gateway_paths(model: DecisionModel, node_id: str) -> list[list[str]]:
    """All start-to-node paths, each as the list of non-empty edge conditions seen."""
    target = model.node(node_id).id
    adj: dict[str, list[FlowEdge]] = {}
    for e in model.flow_edges:
        adj.setdefault(e.src, []).append(e)
    paths: list[list[str]] = []

    def walk(nid: str, conditions: list[str]) -> None:
        if nid == target:
            paths.append(list(conditions))
            return
        for e in adj.get(nid, []):
            if e.condition:
                conditions.append(e.condition)
                walk(e.dst, conditions)
                conditions.pop()
            else:
                walk(e.dst, conditions)

    walk(model.start_node().id, [])
    return paths


def complement_neighbors(model: DecisionModel, pattern_id: str) -> list[str]:
    """Complement partners of one pattern within its model, sorted by id."""
    found = sorted({c.other(pattern_id) for c in model.complements_edges} - {None, pattern_id})
    return [p for p in found if p]
