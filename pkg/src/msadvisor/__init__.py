"""Decision-support engine for selecting microservices architecture patterns."""

from .builtin import builtin_kb
from .dot import export_dot
from .engine import (
    Decision,
    ExplanationCard,
    PendingDecision,
    Ranking,
    Session,
    SessionResult,
    TradeoffReport,
    apply_answer,
    complements_closure,
    explain_pattern,
    pending_decisions,
    replay_session,
    resolve_weights,
    score_patterns,
    session_result,
    start_session,
    tradeoff_report,
)
from .kb import (
    KbParseError,
    KbValidationError,
    KnowledgeBase,
    lint_kb,
    load_kb,
    load_kb_file,
    serialize_kb,
    validate_kb,
)
from .model import (
    AdvisorError,
    ComplementsEdge,
    DecisionModel,
    FlowEdge,
    Node,
    NodeKind,
    NotFoundError,
    Pattern,
    Polarity,
    QaImpact,
    QualityAttribute,
    ValidationReport,
    flow_successors,
    reachable_patterns,
    validate_model,
)

__version__ = "0.1.0"

__all__ = [
    "AdvisorError",
    "ComplementsEdge",
    "Decision",
    "DecisionModel",
    "ExplanationCard",
    "FlowEdge",
    "KbParseError",
    "KbValidationError",
    "KnowledgeBase",
    "Node",
    "NodeKind",
    "NotFoundError",
    "Pattern",
    "PendingDecision",
    "Polarity",
    "QaImpact",
    "QualityAttribute",
    "Ranking",
    "Session",
    "SessionResult",
    "TradeoffReport",
    "ValidationReport",
    "apply_answer",
    "builtin_kb",
    "complements_closure",
    "explain_pattern",
    "export_dot",
    "flow_successors",
    "lint_kb",
    "load_kb",
    "load_kb_file",
    "pending_decisions",
    "reachable_patterns",
    "replay_session",
    "resolve_weights",
    "score_patterns",
    "serialize_kb",
    "session_result",
    "start_session",
    "tradeoff_report",
    "validate_kb",
    "validate_model",
]
