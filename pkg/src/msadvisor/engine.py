"""Scoring, walkthrough sessions, complements closure, trade-off, and explanations.

Everything here is a pure function of (knowledge base, inputs); sessions are
immutable values, so callers own serialization of concurrent updates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .kb import KnowledgeBase
from .model import (
    AdvisorError,
    DecisionModel,
    FlowEdge,
    NodeKind,
    NotFoundError,
    Pattern,
    Polarity,
    DECISION_KINDS,
    complement_neighbors,
    flow_successors,
    gateway_paths,
)

ALL_MODELS = "all"


def to_weight(value) -> Fraction:
    """Exact weight from a CLI/JSON number; floats go through their shortest repr."""
    if isinstance(value, bool):
        raise AdvisorError("E_BAD_WEIGHT", "weight must be a number")
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value) if "/" in value else Fraction(repr(float(value)))
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise AdvisorError("E_BAD_WEIGHT", f"not a number: {value!r}") from exc
    raise AdvisorError("E_BAD_WEIGHT", f"weight has unsupported type {type(value).__name__}")


def resolve_weights(
    kb: KnowledgeBase,
    raw: Mapping[str, object],
    *,
    unit_interval: bool = False,
) -> dict[str, Fraction]:
    """Validate a weights mapping against the QA catalog, resolving aliases.

    The engine only requires weights to be finite and >= 0; `unit_interval`
    adds the [0, 1] bound that the CLI and HTTP surfaces enforce.
    """
    aliases = kb.alias_map()
    weights: dict[str, Fraction] = {}
    for name, value in raw.items():
        qa = aliases.get(name)
        if qa is None:
            raise NotFoundError("E_UNKNOWN_QA", f"unknown quality attribute {name!r}")
        weight = to_weight(value)
        if weight < 0:
            raise AdvisorError("E_BAD_WEIGHT", f"weight for {name!r} is negative")
        if unit_interval and weight > 1:
            raise AdvisorError("E_BAD_WEIGHT", f"weight for {name!r} is outside [0, 1]")
        weights[qa] = weight
    return weights


@dataclass(frozen=True)
class Contribution:
    qa: str
    polarity: Polarity
    weight: Fraction


@dataclass(frozen=True)
class RankingEntry:
    pattern_id: str
    name: str
    score: Fraction
    contributions: tuple[Contribution, ...]


@dataclass(frozen=True)
class Ranking:
    entries: tuple[RankingEntry, ...]


def _patterns_in_scope(kb: KnowledgeBase, model_id: str) -> list[Pattern]:
    if model_id == ALL_MODELS:
        return list(kb.patterns)
    model = kb.model(model_id)
    return [kb.pattern(pid) for pid in model.pattern_ids()]


def score_patterns(kb: KnowledgeBase, model_id: str, weights: Mapping[str, object]) -> Ranking:
    """Rank patterns by the weighted sum of their +/- impacts.

    score(p) = sum over impacts of weight(qa) * (+1 for "+", -1 for "-").
    Ties break by count of positive impacts (descending), then pattern name.
    """
    resolved = resolve_weights(kb, weights)
    entries = []
    for p in _patterns_in_scope(kb, model_id):
        score = Fraction(0)
        contributions = []
        for imp in p.impacts:
            weight = resolved.get(imp.qa, Fraction(0))
            if weight > 0:
                signed = weight if imp.polarity is Polarity.POSITIVE else -weight
                score += signed
                contributions.append(Contribution(imp.qa, imp.polarity, weight))
        positives = sum(1 for imp in p.impacts if imp.polarity is Polarity.POSITIVE)
        entries.append((score, positives, p, tuple(contributions)))
    entries.sort(key=lambda item: (-item[0], -item[1], item[2].name))
    return Ranking(
        tuple(
            RankingEntry(p.id, p.name, score, contributions)
            for score, _, p, contributions in entries
        )
    )


# --- walkthrough sessions ------------------------------------------------------


@dataclass(frozen=True)
class Decision:
    gateway: str
    edges: tuple[str, ...]


@dataclass(frozen=True)
class Session:
    session_id: str
    model_id: str
    tokens: tuple[str, ...]
    selected: tuple[str, ...]
    log: tuple[Decision, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.tokens

    @property
    def status(self) -> str:
        return "complete" if self.complete else "awaiting_decision"


@dataclass(frozen=True)
class PendingDecision:
    gateway: str
    kind: NodeKind
    label: str | None
    options: tuple[FlowEdge, ...]


def _advance(model: DecisionModel, seeds: Iterable[str], selected: list[str]) -> list[str]:
    """Push tokens forward until they park at exclusive/inclusive gateways or die.

    Start and parallel nodes fan out over every outgoing edge, pattern nodes
    record their pattern and forward; the model is validated acyclic, so this
    terminates. Returns the node ids now holding a parked token.
    """
    parked: list[str] = []
    work = list(seeds)
    visited: set[str] = set()
    while work:
        node_id = work.pop(0)
        node = model.node(node_id)
        if node.kind in DECISION_KINDS:
            if node_id not in parked:
                parked.append(node_id)
            continue
        if node_id in visited:
            continue
        visited.add(node_id)
        if node.kind is NodeKind.PATTERN and node.pattern_ref and node.pattern_ref not in selected:
            selected.append(node.pattern_ref)
        work.extend(e.dst for e in flow_successors(model, node_id))
    return parked


def _ordered_tokens(model: DecisionModel, tokens: Iterable[str]) -> tuple[str, ...]:
    order = {n.id: i for i, n in enumerate(model.nodes)}
    return tuple(sorted(set(tokens), key=order.__getitem__))


def start_session(kb: KnowledgeBase, model_id: str, session_id: str = "local") -> Session:
    """Open a walkthrough: one token at the start node, auto-advanced to the first decisions."""
    model = kb.model(model_id)
    selected: list[str] = []
    parked = _advance(model, [model.start_node().id], selected)
    return Session(session_id, model_id, _ordered_tokens(model, parked), tuple(selected))


def pending_decisions(kb: KnowledgeBase, session: Session) -> list[PendingDecision]:
    model = kb.model(session.model_id)
    pending = []
    for node_id in session.tokens:
        node = model.node(node_id)
        if node.kind in DECISION_KINDS:
            pending.append(
                PendingDecision(node_id, node.kind, node.label, tuple(flow_successors(model, node_id)))
            )
    return pending


def apply_answer(
    kb: KnowledgeBase, session: Session, gateway_id: str, chosen: Sequence[str]
) -> Session:
    """Fire a pending gateway along the chosen edges (named by their target node).

    Exclusive gateways take exactly one edge, inclusive ones at least one;
    parallel gateways never pend. The token at the gateway is consumed, one
    token is emitted per chosen edge, and auto-advance runs again.
    """
    model = kb.model(session.model_id)
    if gateway_id not in session.tokens:
        raise AdvisorError("E_NOT_PENDING", f"gateway {gateway_id!r} is not awaiting a decision")
    node = model.node(gateway_id)
    if node.kind not in DECISION_KINDS:
        raise AdvisorError("E_NOT_PENDING", f"node {gateway_id!r} is not a decision gateway")

    targets = list(dict.fromkeys(chosen))
    legal = {e.dst for e in flow_successors(model, gateway_id)}
    for target in targets:
        if target not in legal:
            raise AdvisorError(
                "E_BAD_EDGE", f"{gateway_id!r} has no outgoing edge to {target!r}"
            )
    if node.kind is NodeKind.GATEWAY_EXCLUSIVE and len(targets) != 1:
        raise AdvisorError(
            "E_CHOICE_ARITY",
            f"exclusive gateway {gateway_id!r} takes exactly one edge, got {len(targets)}",
        )
    if node.kind is NodeKind.GATEWAY_INCLUSIVE and not targets:
        raise AdvisorError(
            "E_CHOICE_ARITY", f"inclusive gateway {gateway_id!r} takes at least one edge"
        )

    selected = list(session.selected)
    remaining = [t for t in session.tokens if t != gateway_id]
    parked = _advance(model, targets, selected)
    return Session(
        session.session_id,
        session.model_id,
        _ordered_tokens(model, [*remaining, *parked]),
        tuple(selected),
        session.log + (Decision(gateway_id, tuple(targets)),),
    )


def replay_session(kb: KnowledgeBase, model_id: str, log: Iterable[Decision], session_id: str = "local") -> Session:
    session = start_session(kb, model_id, session_id)
    for decision in log:
        session = apply_answer(kb, session, decision.gateway, decision.edges)
    return session


# --- results -------------------------------------------------------------------


@dataclass(frozen=True)
class QaAggregate:
    qa: str
    plus: int
    minus: int
    net: int
    positive: tuple[str, ...]
    negative: tuple[str, ...]


@dataclass(frozen=True)
class TradeoffReport:
    patterns: tuple[str, ...]
    aggregates: tuple[QaAggregate, ...]
    conflicts: tuple[str, ...]
    constraints: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class SessionResult:
    selected: tuple[str, ...]
    constraints: tuple[tuple[str, str], ...]
    suggestions: tuple[str, ...]
    report: TradeoffReport
    log: tuple[Decision, ...]


def tradeoff_report(kb: KnowledgeBase, pattern_ids: Iterable[str]) -> TradeoffReport:
    """Per-QA +/- tallies over a pattern set; a QA with both signs is a conflict."""
    chosen = set()
    for pid in pattern_ids:
        kb.pattern(pid)
        chosen.add(pid)
    patterns = [p for p in kb.patterns if p.id in chosen]

    aggregates = []
    conflicts = []
    for qa in kb.qa_catalog:
        positive = tuple(
            p.id
            for p in patterns
            if any(i.qa == qa.id and i.polarity is Polarity.POSITIVE for i in p.impacts)
        )
        negative = tuple(
            p.id
            for p in patterns
            if any(i.qa == qa.id and i.polarity is Polarity.NEGATIVE for i in p.impacts)
        )
        if not positive and not negative:
            continue
        aggregates.append(
            QaAggregate(qa.id, len(positive), len(negative), len(positive) - len(negative), positive, negative)
        )
        if positive and negative:
            conflicts.append(qa.id)

    constraints = tuple((p.id, text) for p in patterns for text in p.constraints)
    return TradeoffReport(
        tuple(p.id for p in patterns), tuple(aggregates), tuple(conflicts), constraints
    )


def complements_closure(kb: KnowledgeBase, model_id: str, pattern_ids: Iterable[str]) -> set[str]:
    """One-hop complements neighborhood of a pattern set, minus the set itself."""
    model = kb.model(model_id)
    members = set(model.pattern_ids())
    chosen = set(pattern_ids)
    foreign = chosen - members
    if foreign:
        raise NotFoundError(
            "E_UNKNOWN_PATTERN",
            f"pattern {sorted(foreign)[0]!r} is not part of model {model_id!r}",
        )
    neighbors: set[str] = set()
    for edge in model.complements_edges:
        if edge.a in chosen:
            neighbors.add(edge.b)
        if edge.b in chosen:
            neighbors.add(edge.a)
    return neighbors - chosen


def session_result(kb: KnowledgeBase, session: Session) -> SessionResult:
    if not session.complete:
        pending = ", ".join(session.tokens)
        raise AdvisorError("E_INCOMPLETE", f"session still awaiting decisions at: {pending}")
    report = tradeoff_report(kb, session.selected)
    suggestions = complements_closure(kb, session.model_id, set(session.selected))
    return SessionResult(
        selected=session.selected,
        constraints=report.constraints,
        suggestions=tuple(sorted(suggestions)),
        report=report,
        log=session.log,
    )


# --- explanations ----------------------------------------------------------------


@dataclass(frozen=True)
class ExplanationCard:
    pattern: Pattern
    complements: tuple[str, ...]
    paths: tuple[tuple[str, ...], ...]


def explain_pattern(kb: KnowledgeBase, pattern_id: str) -> ExplanationCard:
    """Everything the KB knows about one pattern, plus how walkthroughs reach it."""
    pattern = kb.pattern(pattern_id)
    complements: tuple[str, ...] = ()
    paths: tuple[tuple[str, ...], ...] = ()
    try:
        model = kb.model(pattern.area)
    except NotFoundError:
        model = None
    if model is not None:
        complements = tuple(complement_neighbors(model, pattern_id))
        if any(n.kind is NodeKind.PATTERN and n.pattern_ref == pattern_id for n in model.nodes):
            node_id = next(
                n.id for n in model.nodes if n.kind is NodeKind.PATTERN and n.pattern_ref == pattern_id
            )
            paths = tuple(tuple(p) for p in gateway_paths(model, node_id))
    return ExplanationCard(pattern, complements, paths)
