"""Knowledge-base container, JSON (de)serialization, KB-wide validation, lint."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .model import (
    AREAS,
    AdvisorError,
    ComplementsEdge,
    DecisionModel,
    Finding,
    FlowEdge,
    Node,
    NodeKind,
    NotFoundError,
    Pattern,
    Polarity,
    QaImpact,
    QualityAttribute,
    ValidationReport,
    validate_model,
)


class KbParseError(AdvisorError):
    """Document cannot be parsed into a knowledge-base candidate."""

    def __init__(self, message: str):
        super().__init__("E_PARSE", message)


class KbValidationError(AdvisorError):
    """Parsed fine but violates structural invariants; carries the full report."""

    def __init__(self, report: ValidationReport):
        lines = "; ".join(f"{f.code} {f.subject}: {f.message}" for f in report.errors)
        super().__init__("E_INVALID_KB", f"knowledge base invalid: {lines}")
        self.report = report


@dataclass(frozen=True)
class KnowledgeBase:
    version: str
    qa_catalog: tuple[QualityAttribute, ...]
    patterns: tuple[Pattern, ...]
    models: tuple[DecisionModel, ...]

    def qa(self, qa_id: str) -> QualityAttribute:
        for q in self.qa_catalog:
            if q.id == qa_id:
                return q
        raise NotFoundError("E_UNKNOWN_QA", f"unknown quality attribute {qa_id!r}")

    def pattern(self, pattern_id: str) -> Pattern:
        for p in self.patterns:
            if p.id == pattern_id:
                return p
        raise NotFoundError("E_UNKNOWN_PATTERN", f"unknown pattern {pattern_id!r}")

    def model(self, model_id: str) -> DecisionModel:
        for m in self.models:
            if m.id == model_id:
                return m
        raise NotFoundError("E_UNKNOWN_MODEL", f"unknown model {model_id!r}")

    def alias_map(self) -> dict[str, str]:
        """Canonical id for every QA id and alias."""
        table: dict[str, str] = {}
        for q in self.qa_catalog:
            table[q.id] = q.id
            for alias in q.aliases:
                table[alias] = q.id
        return table

    def resolve_qa(self, name: str) -> str | None:
        return self.alias_map().get(name)


def validate_kb(kb: KnowledgeBase) -> ValidationReport:
    """KB-wide invariants plus every model's structural validation."""
    errors: list[Finding] = []
    warnings: list[Finding] = []

    claimed: dict[str, str] = {}
    for q in kb.qa_catalog:
        for name in (q.id, *q.aliases):
            if name in claimed and claimed[name] != q.id:
                errors.append(Finding("E_DUP_ID", name, f"QA name also used by {claimed[name]!r}"))
            elif name in claimed:
                errors.append(Finding("E_DUP_ID", name, "duplicate QA name"))
            claimed[name] = q.id

    qa_ids = {q.id for q in kb.qa_catalog}
    patterns: dict[str, Pattern] = {}
    for p in kb.patterns:
        if p.id in patterns:
            errors.append(Finding("E_DUP_ID", p.id, "duplicate pattern id"))
            continue
        patterns[p.id] = p
        seen_qas: set[str] = set()
        for imp in p.impacts:
            if imp.qa not in qa_ids:
                errors.append(Finding("E_DANGLING_REF", p.id, f"impact names unknown QA {imp.qa!r}"))
            if imp.qa in seen_qas:
                errors.append(Finding("E_DUP_ID", p.id, f"more than one impact on {imp.qa!r}"))
            seen_qas.add(imp.qa)

    model_ids: set[str] = set()
    for m in kb.models:
        if m.id in model_ids:
            errors.append(Finding("E_DUP_ID", m.id, "duplicate model id"))
        model_ids.add(m.id)
        sub = validate_model(m, patterns, qa_ids)
        errors.extend(Finding(f.code, f"{m.id}:{f.subject}", f.message) for f in sub.errors)
        warnings.extend(Finding(f.code, f"{m.id}:{f.subject}", f.message) for f in sub.warnings)

    return ValidationReport(tuple(errors), tuple(warnings))


def lint_kb(kb: KnowledgeBase) -> ValidationReport:
    """Style lint for a loadable KB; emits warnings only."""
    warnings: list[Finding] = []
    referenced: set[str] = set()
    for p in kb.patterns:
        if not p.impacts:
            warnings.append(Finding("W_NO_IMPACTS", p.id, "pattern has no quality-attribute impacts"))
        for imp in p.impacts:
            referenced.add(imp.qa)
        for i, text in enumerate(p.constraints):
            if not text.strip():
                warnings.append(Finding("W_NO_CONSTRAINT_TEXT", p.id, f"constraint {i} is empty"))
    for q in kb.qa_catalog:
        if q.id not in referenced:
            warnings.append(Finding("W_UNUSED_QA", q.id, "no pattern impacts this quality attribute"))
    return ValidationReport((), tuple(warnings))


# --- wire format -------------------------------------------------------------
#
# Top level: {"kb_version", "qa_catalog", "patterns", "models"}; unknown keys
# are rejected everywhere. Optional values are serialized as null so that
# serialize -> load -> serialize is byte-stable.

_KIND_VALUES = {k.value for k in NodeKind}


def serialize_kb(kb: KnowledgeBase) -> str:
    doc = {
        "kb_version": kb.version,
        "qa_catalog": [
            {"id": q.id, "display_name": q.display_name, "aliases": list(q.aliases)}
            for q in kb.qa_catalog
        ],
        "patterns": [
            {
                "id": p.id,
                "name": p.name,
                "area": p.area,
                "summary": p.summary,
                "impacts": [
                    {"qa": i.qa, "polarity": i.polarity.value, "note": i.note} for i in p.impacts
                ],
                "constraints": list(p.constraints),
                "sources": list(p.sources),
            }
            for p in kb.patterns
        ],
        "models": [
            {
                "id": m.id,
                "title": m.title,
                "nodes": [
                    {"id": n.id, "kind": n.kind.value, "pattern": n.pattern_ref, "label": n.label}
                    for n in m.nodes
                ],
                "edges": [
                    {"from": e.src, "to": e.dst, "condition": e.condition} for e in m.flow_edges
                ],
                "complements": [{"a": c.a, "b": c.b} for c in m.complements_edges],
            }
            for m in kb.models
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_kb(text: str) -> KnowledgeBase:
    """Parse and validate a KB document; QA aliases are resolved to canonical ids.

    Raises KbParseError for malformed documents (with position info) and
    KbValidationError when the parsed KB has structural errors.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise KbParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc

    top = _obj(raw, "$", {"kb_version", "qa_catalog", "patterns", "models"})
    version = _str(top, "$", "kb_version")

    qas = []
    for i, entry in enumerate(_list(top, "$", "qa_catalog")):
        at = f"qa_catalog[{i}]"
        rec = _obj(entry, at, {"id", "display_name", "aliases"}, optional={"aliases"})
        qas.append(
            QualityAttribute(
                id=_str(rec, at, "id"),
                display_name=_str(rec, at, "display_name"),
                aliases=tuple(_str_list(rec, at, "aliases")),
            )
        )

    kb_for_aliases = KnowledgeBase(version, tuple(qas), (), ())
    aliases = kb_for_aliases.alias_map()

    patterns = []
    for i, entry in enumerate(_list(top, "$", "patterns")):
        at = f"patterns[{i}]"
        rec = _obj(
            entry,
            at,
            {"id", "name", "area", "summary", "impacts", "constraints", "sources"},
            optional={"impacts", "constraints", "sources"},
        )
        area = _str(rec, at, "area")
        if area not in AREAS:
            raise KbParseError(f"{at}.area: {area!r} is not one of {sorted(AREAS)}")
        impacts = []
        for j, imp in enumerate(_list(rec, at, "impacts") if "impacts" in rec else []):
            iat = f"{at}.impacts[{j}]"
            irec = _obj(imp, iat, {"qa", "polarity", "note"}, optional={"note"})
            polarity = _str(irec, iat, "polarity")
            if polarity not in (Polarity.POSITIVE.value, Polarity.NEGATIVE.value):
                raise KbParseError(f'{iat}.polarity: expected "+" or "-", got {polarity!r}')
            qa_name = _str(irec, iat, "qa")
            impacts.append(
                QaImpact(
                    qa=aliases.get(qa_name, qa_name),
                    polarity=Polarity(polarity),
                    note=_opt_str(irec, iat, "note"),
                )
            )
        patterns.append(
            Pattern(
                id=_str(rec, at, "id"),
                name=_str(rec, at, "name"),
                area=area,
                summary=_str(rec, at, "summary"),
                impacts=tuple(impacts),
                constraints=tuple(_str_list(rec, at, "constraints")),
                sources=tuple(_str_list(rec, at, "sources")),
            )
        )

    models = []
    for i, entry in enumerate(_list(top, "$", "models")):
        at = f"models[{i}]"
        rec = _obj(entry, at, {"id", "title", "nodes", "edges", "complements"}, optional={"complements"})
        model_id = _str(rec, at, "id")
        if model_id not in AREAS:
            raise KbParseError(f"{at}.id: {model_id!r} is not one of {sorted(AREAS)}")
        nodes = []
        for j, nd in enumerate(_list(rec, at, "nodes")):
            nat = f"{at}.nodes[{j}]"
            nrec = _obj(nd, nat, {"id", "kind", "pattern", "label"}, optional={"pattern", "label"})
            kind = _str(nrec, nat, "kind")
            if kind not in _KIND_VALUES:
                raise KbParseError(f"{nat}.kind: {kind!r} is not one of {sorted(_KIND_VALUES)}")
            nodes.append(
                Node(
                    id=_str(nrec, nat, "id"),
                    kind=NodeKind(kind),
                    pattern_ref=_opt_str(nrec, nat, "pattern"),
                    label=_opt_str(nrec, nat, "label"),
                )
            )
        edges = []
        for j, ed in enumerate(_list(rec, at, "edges")):
            eat = f"{at}.edges[{j}]"
            erec = _obj(ed, eat, {"from", "to", "condition"}, optional={"condition"})
            edges.append(
                FlowEdge(
                    src=_str(erec, eat, "from"),
                    dst=_str(erec, eat, "to"),
                    condition=_opt_str(erec, eat, "condition"),
                )
            )
        complements = []
        for j, ce in enumerate(_list(rec, at, "complements") if "complements" in rec else []):
            cat = f"{at}.complements[{j}]"
            crec = _obj(ce, cat, {"a", "b"})
            complements.append(ComplementsEdge(_str(crec, cat, "a"), _str(crec, cat, "b")))
        models.append(
            DecisionModel(
                id=model_id,
                title=_str(rec, at, "title"),
                nodes=tuple(nodes),
                flow_edges=tuple(edges),
                complements_edges=tuple(complements),
            )
        )

    kb = KnowledgeBase(version, tuple(qas), tuple(patterns), tuple(models))
    report = validate_kb(kb)
    if not report.ok:
        raise KbValidationError(report)
    return kb


def load_kb_file(path) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return load_kb(fh.read())


def _obj(value: Any, at: str, keys: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(value, dict):
        raise KbParseError(f"{at}: expected an object")
    unknown = set(value) - keys
    if unknown:
        raise KbParseError(f"{at}: unknown key {sorted(unknown)[0]!r}")
    missing = keys - optional - set(value)
    if missing:
        raise KbParseError(f"{at}: missing key {sorted(missing)[0]!r}")
    return value


def _str(rec: dict, at: str, key: str) -> str:
    value = rec.get(key)
    if not isinstance(value, str):
        raise KbParseError(f"{at}.{key}: expected a string")
    return value


def _opt_str(rec: dict, at: str, key: str) -> str | None:
    value = rec.get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        raise KbParseError(f"{at}.{key}: expected a string or null")
    return value


def _list(rec: dict, at: str, key: str) -> list:
    value = rec.get(key)
    if not isinstance(value, list):
        raise KbParseError(f"{at}.{key}: expected a list")
    return value


def _str_list(rec: dict, at: str, key: str) -> list[str]:
    value = rec.get(key)
    if value is None:
        return []
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise KbParseError(f"{at}.{key}: expected a list of strings")
    return value
