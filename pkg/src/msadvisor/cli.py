"""Command-line interface; the headless surface over the whole engine.

Exit codes: 0 success, 1 domain error (unknown ids, invalid KB), 2 usage error.
Machine-readable output (--format json) goes to stdout only; prompts and
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import payloads
from .builtin import builtin_kb
from .dot import export_dot
from .engine import (
    Decision,
    apply_answer,
    explain_pattern,
    pending_decisions,
    score_patterns,
    session_result,
    start_session,
    resolve_weights,
    tradeoff_report,
)
from .kb import KbParseError, KbValidationError, KnowledgeBase, lint_kb, load_kb_file
from .model import AdvisorError, NodeKind


class UsageError(Exception):
    pass


def parse_weights(kb: KnowledgeBase, tokens: list[str]) -> dict[str, Fraction]:
    """Turn repeated `qa=value` flags into validated weights in [0, 1].

    Aliases resolve to canonical QA ids; a repeated QA keeps the last value
    (with a warning on stderr); malformed or unknown tokens are usage errors.
    """
    weights: dict[str, Fraction] = {}
    for token in tokens:
        name, sep, value = token.partition("=")
        if not sep or not name or not value:
            raise UsageError(f"weight {token!r} must look like qa=number")
        try:
            resolved = resolve_weights(kb, {name: value}, unit_interval=True)
        except AdvisorError as exc:
            raise UsageError(f"weight {token!r}: {exc.message}") from exc
        ((qa, weight),) = resolved.items()
        if qa in weights:
            print(f"warning: weight for {qa!r} given twice, keeping {value}", file=sys.stderr)
        weights[qa] = weight
    return weights


def _load_kb(path: str | None) -> KnowledgeBase:
    return load_kb_file(path) if path else builtin_kb()


def _emit_json(payload) -> None:
    sys.stdout.write(payloads.canonical_json(payload))


def _known_model(kb: KnowledgeBase, model_id: str) -> str:
    if model_id != "all":
        kb.model(model_id)
    return model_id


def _cmd_models_list(kb: KnowledgeBase, args) -> int:
    if args.format == "json":
        _emit_json(payloads.model_list_payload(kb))
        return 0
    for m in kb.models:
        print(f"{m.id:<16} {len(m.pattern_ids()):>2} patterns  {m.title}")
    return 0


def _cmd_patterns_show(kb: KnowledgeBase, args) -> int:
    card = explain_pattern(kb, args.pattern_id)
    if args.format == "json":
        _emit_json(payloads.explanation_payload(card))
        return 0
    p = card.pattern
    print(f"{p.name} ({p.id})")
    print(f"area: {p.area}")
    print(f"summary: {p.summary}")
    if p.impacts:
        print("impacts:")
        for imp in p.impacts:
            note = f"  ({imp.note})" if imp.note else ""
            print(f"  {imp.polarity.value} {imp.qa}{note}")
    if p.constraints:
        print("constraints:")
        for text in p.constraints:
            print(f"  - {text}")
    if card.complements:
        print("complements: " + ", ".join(card.complements))
    for path in card.paths:
        print("path: " + " -> ".join(path))
    return 0


def _cmd_recommend(kb: KnowledgeBase, args) -> int:
    weights = parse_weights(kb, args.weight or [])
    model_id = _known_model(kb, args.model)
    ranking = score_patterns(kb, model_id, weights)
    if args.format == "json":
        _emit_json(payloads.ranking_payload(model_id, ranking))
        return 0
    for i, entry in enumerate(ranking.entries, start=1):
        print(f"{i:>2}. {float(entry.score):+g}  {entry.name} ({entry.pattern_id})")
    return 0


def _cmd_tradeoff(kb: KnowledgeBase, args) -> int:
    pattern_ids = [p for p in args.patterns.split(",") if p]
    report = tradeoff_report(kb, pattern_ids)
    if args.format == "json":
        _emit_json(payloads.tradeoff_payload(report))
        return 0
    for agg in report.aggregates:
        flag = "  CONFLICT" if agg.qa in report.conflicts else ""
        print(f"{agg.qa:<24} +{agg.plus} -{agg.minus} net {agg.net:+d}{flag}")
    for pid, text in report.constraints:
        print(f"constraint [{pid}]: {text}")
    return 0


def _cmd_validate(args) -> int:
    try:
        kb = load_kb_file(args.kb_file)
    except KbValidationError as exc:
        if args.format == "json":
            _emit_json(payloads.report_payload(exc.report))
        else:
            for f in exc.report.errors:
                print(f"error {f.code} at {f.subject}: {f.message}")
            for f in exc.report.warnings:
                print(f"warning {f.code} at {f.subject}: {f.message}")
            print(f"{len(exc.report.errors)} errors, {len(exc.report.warnings)} warnings")
        print(f"E_INVALID_KB: {args.kb_file} failed validation", file=sys.stderr)
        return 1
    lint = lint_kb(kb)
    if args.format == "json":
        _emit_json(payloads.report_payload(lint))
        return 0
    for f in lint.warnings:
        print(f"warning {f.code} at {f.subject}: {f.message}")
    print(f"0 errors, {len(lint.warnings)} warnings")
    return 0


def _cmd_export_dot(kb: KnowledgeBase, args) -> int:
    text = export_dot(kb.model(args.model), kb.patterns)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def _read_script(path: str) -> list[Decision]:
    try:
        entries = json.loads(Path(path).read_text(encoding="utf-8"))
        return [Decision(e["gateway"], tuple(e["edges"])) for e in entries]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read decision script {path!r}: {exc}") from exc


def _prompt_choice(pending) -> tuple[str, list[str]]:
    gateway = pending[0]
    say = sys.stderr.write
    say(f"\n{gateway.label or gateway.gateway}\n")
    for i, option in enumerate(gateway.options, start=1):
        say(f"  {i}. {option.condition or option.dst}\n")
    if gateway.kind is NodeKind.GATEWAY_EXCLUSIVE:
        say("choose one: ")
    else:
        say("choose one or more (comma-separated): ")
    sys.stderr.flush()
    answer = input("")
    picks = []
    for part in answer.replace(" ", "").split(","):
        if not part:
            continue
        if not part.isdigit() or not 1 <= int(part) <= len(gateway.options):
            raise UsageError(f"choice {part!r} is not an option number")
        picks.append(gateway.options[int(part) - 1].dst)
    return gateway.gateway, picks


def _cmd_walk(kb: KnowledgeBase, args) -> int:
    session = start_session(kb, args.model)
    if args.script:
        for decision in _read_script(args.script):
            session = apply_answer(kb, session, decision.gateway, decision.edges)
    while not session.complete:
        pending = pending_decisions(kb, session)
        gateway, picks = _prompt_choice(pending)
        session = apply_answer(kb, session, gateway, picks)
    result = session_result(kb, session)
    if args.format == "json":
        _emit_json(payloads.result_payload(session, result))
        return 0
    print("selected:")
    for pid in result.selected:
        print(f"  - {kb.pattern(pid).name} ({pid})")
    for pid, text in result.constraints:
        print(f"constraint [{pid}]: {text}")
    if result.suggestions:
        print("suggested complements: " + ", ".join(result.suggestions))
    for qa in result.report.conflicts:
        print(f"trade-off conflict on {qa}")
    return 0


def _cmd_report(kb: KnowledgeBase, args) -> int:
    from .report import write_ranking_report, write_tradeoff_report

    out_dir = Path(args.out)
    written: list[Path] = []
    if args.model:
        weights = parse_weights(kb, args.weight or [])
        model_id = _known_model(kb, args.model)
        written += write_ranking_report(score_patterns(kb, model_id, weights), out_dir)
    if args.patterns:
        pattern_ids = [p for p in args.patterns.split(",") if p]
        written += write_tradeoff_report(tradeoff_report(kb, pattern_ids), out_dir)
    if not written:
        raise UsageError("report needs --model (ranking) and/or --patterns (trade-off)")
    if args.format == "json":
        _emit_json({"written": [str(p) for p in written]})
    else:
        for path in written:
            print(f"wrote {path}")
    return 0


def _cmd_serve(kb: KnowledgeBase, args) -> int:
    import uvicorn

    from .service import create_app

    static_dir = args.static if args.static and Path(args.static).is_dir() else None
    app = create_app(kb, static_dir=static_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msadvisor",
        description="Decision support for selecting microservices architecture patterns.",
    )
    parser.add_argument("--kb", metavar="PATH", help="knowledge-base JSON file (default: built-in)")
    parser.add_argument("--format", choices=["table", "json"], default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    models = sub.add_parser("models", help="list decision models")
    models_sub = models.add_subparsers(dest="action", required=True)
    models_sub.add_parser("list")

    patterns = sub.add_parser("patterns", help="inspect patterns")
    patterns_sub = patterns.add_subparsers(dest="action", required=True)
    show = patterns_sub.add_parser("show")
    show.add_argument("pattern_id")

    recommend = sub.add_parser("recommend", help="rank patterns by weighted quality attributes")
    recommend.add_argument("--model", required=True, help="model id or 'all'")
    recommend.add_argument("--weight", action="append", metavar="QA=VALUE")

    walk = sub.add_parser("walk", help="interactive walkthrough of one decision model")
    walk.add_argument("model")
    walk.add_argument("--script", metavar="FILE", help="JSON decision log to replay")

    tradeoff = sub.add_parser("tradeoff", help="quality-attribute trade-offs of a pattern set")
    tradeoff.add_argument("--patterns", required=True, metavar="A,B,C")

    validate = sub.add_parser("validate", help="validate a knowledge-base file")
    validate.add_argument("kb_file")

    export = sub.add_parser("export-dot", help="Graphviz DOT text for one model")
    export.add_argument("model")
    export.add_argument("-o", "--output", metavar="FILE")

    rep = sub.add_parser("report", help="write ranking/trade-off CSVs and figures")
    rep.add_argument("--model", help="model id or 'all' for a ranking report")
    rep.add_argument("--weight", action="append", metavar="QA=VALUE")
    rep.add_argument("--patterns", metavar="A,B,C", help="pattern set for a trade-off report")
    rep.add_argument("--out", required=True, metavar="DIR")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="0.0.0.0")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--static", metavar="DIR", help="directory with the built web UI")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "validate":
            return _cmd_validate(args)
        kb = _load_kb(args.kb)
        if args.command == "models":
            return _cmd_models_list(kb, args)
        if args.command == "patterns":
            return _cmd_patterns_show(kb, args)
        if args.command == "recommend":
            return _cmd_recommend(kb, args)
        if args.command == "walk":
            return _cmd_walk(kb, args)
        if args.command == "tradeoff":
            return _cmd_tradeoff(kb, args)
        if args.command == "export-dot":
            return _cmd_export_dot(kb, args)
        if args.command == "report":
            return _cmd_report(kb, args)
        if args.command == "serve":
            return _cmd_serve(kb, args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (KbParseError, KbValidationError) as exc:
        print(f"{exc.code}: {exc.message}", file=sys.stderr)
        return 1
    except AdvisorError as exc:
        print(f"{exc.code}: {exc.message}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"E_IO: {exc}", file=sys.stderr)
        return 1
    except (EOFError, KeyboardInterrupt):
        print("aborted", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
