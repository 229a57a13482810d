"""Canonical JSON payloads shared by the CLI and the HTTP service.

Both surfaces emit these exact bytes, so `recommend` and `tradeoff` outputs
are comparable across transports.
"""

from __future__ import annotations

import json
from typing import Any

from .dot import export_dot
from .engine import (
    ExplanationCard,
    PendingDecision,
    Ranking,
    Session,
    SessionResult,
    TradeoffReport,
)
from .kb import KnowledgeBase
from .model import DecisionModel, Finding, Pattern, ValidationReport


def canonical_json(payload: Any) -> str:
    """Compact, key-order-preserving encoding with a trailing newline."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"), allow_nan=False) + "\n"


def pattern_payload(p: Pattern) -> dict:
    return {
        "id": p.id,
        "name": p.name,
        "area": p.area,
        "summary": p.summary,
        "impacts": [{"qa": i.qa, "polarity": i.polarity.value, "note": i.note} for i in p.impacts],
        "constraints": list(p.constraints),
        "sources": list(p.sources),
    }


def model_payload(kb: KnowledgeBase, model: DecisionModel) -> dict:
    return {
        "id": model.id,
        "title": model.title,
        "nodes": [
            {"id": n.id, "kind": n.kind.value, "pattern": n.pattern_ref, "label": n.label}
            for n in model.nodes
        ],
        "edges": [{"from": e.src, "to": e.dst, "condition": e.condition} for e in model.flow_edges],
        "complements": [{"a": c.a, "b": c.b} for c in model.complements_edges],
        "patterns": [pattern_payload(kb.pattern(pid)) for pid in model.pattern_ids()],
        "dot": export_dot(model, kb.patterns),
    }


def model_list_payload(kb: KnowledgeBase) -> dict:
    return {
        "models": [
            {"id": m.id, "title": m.title, "patterns": len(m.pattern_ids())} for m in kb.models
        ]
    }


def ranking_payload(model_id: str, ranking: Ranking) -> dict:
    return {
        "model": model_id,
        "ranking": [
            {
                "pattern": e.pattern_id,
                "name": e.name,
                "score": float(e.score),
                "contributions": [
                    {"qa": c.qa, "polarity": c.polarity.value, "weight": float(c.weight)}
                    for c in e.contributions
                ],
            }
            for e in ranking.entries
        ],
    }


def tradeoff_payload(report: TradeoffReport) -> dict:
    return {
        "patterns": list(report.patterns),
        "qas": [
            {
                "qa": a.qa,
                "plus": a.plus,
                "minus": a.minus,
                "net": a.net,
                "positive": list(a.positive),
                "negative": list(a.negative),
            }
            for a in report.aggregates
        ],
        "conflicts": list(report.conflicts),
        "constraints": [{"pattern": pid, "text": text} for pid, text in report.constraints],
    }


def pending_payload(pending: list[PendingDecision]) -> list[dict]:
    return [
        {
            "gateway": p.gateway,
            "kind": p.kind.value,
            "label": p.label,
            "options": [{"edge": e.dst, "condition": e.condition} for e in p.options],
        }
        for p in pending
    ]


def session_payload(session: Session, pending: list[PendingDecision]) -> dict:
    return {
        "session": session.session_id,
        "model": session.model_id,
        "status": session.status,
        "selected": list(session.selected),
        "pending": pending_payload(pending),
    }


def result_payload(session: Session, result: SessionResult) -> dict:
    return {
        "session": session.session_id,
        "model": session.model_id,
        "selected": list(result.selected),
        "constraints": [{"pattern": pid, "text": text} for pid, text in result.constraints],
        "suggestions": list(result.suggestions),
        "tradeoff": tradeoff_payload(result.report),
        "log": [{"gateway": d.gateway, "edges": list(d.edges)} for d in result.log],
    }


def explanation_payload(card: ExplanationCard) -> dict:
    payload = pattern_payload(card.pattern)
    payload["complements"] = list(card.complements)
    payload["paths"] = [list(p) for p in card.paths]
    return payload


def report_payload(report: ValidationReport) -> dict:
    def rows(findings: tuple[Finding, ...]) -> list[dict]:
        return [{"code": f.code, "subject": f.subject, "message": f.message} for f in findings]

    return {"errors": rows(report.errors), "warnings": rows(report.warnings)}
