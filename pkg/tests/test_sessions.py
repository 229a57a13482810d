"""Walkthrough token semantics, results, complements closure, trade-offs, explanations."""

from __future__ import annotations

import random

import pytest

from msadvisor import (
    AdvisorError,
    DecisionModel,
    FlowEdge,
    KnowledgeBase,
    Node,
    NodeKind,
    NotFoundError,
    apply_answer,
    complements_closure,
    explain_pattern,
    pending_decisions,
    replay_session,
    session_result,
    start_session,
    tradeoff_report,
)


def test_decomposition_opens_on_the_team_size_question(kb):
    session = start_session(kb, "decomposition")
    assert session.selected == ()
    pending = pending_decisions(kb, session)
    assert [p.gateway for p in pending] == ["g-team-size"]
    assert "team size" in (pending[0].label or "").lower()


def test_discovery_parallel_preselects_the_registry(kb):
    session = start_session(kb, "discovery")
    assert "service-registry" in session.selected
    assert [p.gateway for p in pending_decisions(kb, session)] == ["g-registration", "g-lookup"]


def test_security_opens_on_the_inclusive_level_gateway(kb):
    pending = pending_decisions(kb, start_session(kb, "security"))
    assert len(pending) == 1
    gateway = pending[0]
    assert gateway.kind is NodeKind.GATEWAY_INCLUSIVE
    assert [o.condition for o in gateway.options] == [
        "application level",
        "communication level",
        "code level",
    ]


def test_communication_opens_on_the_scope_choice(kb):
    pending = pending_decisions(kb, start_session(kb, "communication"))
    gateway = pending[0]
    assert gateway.kind is NodeKind.GATEWAY_EXCLUSIVE
    assert [o.condition for o in gateway.options] == [
        "client-to-service interaction",
        "inter-service communication",
    ]


def test_discovery_walkthrough_to_completion(kb):
    session = start_session(kb, "discovery")
    session = apply_answer(kb, session, "g-registration", ["self-registration"])
    session = apply_answer(kb, session, "g-lookup", ["client-side-service-discovery"])
    assert session.complete
    assert set(session.selected) == {
        "service-registry",
        "self-registration",
        "client-side-service-discovery",
    }
    result = session_result(kb, session)
    assert "microservice-chassis" in result.suggestions
    assert any("5-9" not in text for _, text in result.constraints)  # discovery constraints only


def test_inclusive_all_levels_opens_three_gateways(kb):
    session = start_session(kb, "security")
    session = apply_answer(kb, session, "g-levels", ["g-application", "g-communication", "g-code"])
    assert [p.gateway for p in pending_decisions(kb, session)] == [
        "g-application",
        "g-communication",
        "g-code",
    ]


def test_exclusive_gateway_rejects_two_edges(kb):
    session = start_session(kb, "decomposition")
    with pytest.raises(AdvisorError) as err:
        apply_answer(kb, session, "g-team-size", ["g-driver", "g-source"])
    assert err.value.code == "E_CHOICE_ARITY"
    assert "exclusive" in err.value.message


def test_inclusive_gateway_rejects_empty_choice(kb):
    session = start_session(kb, "security")
    with pytest.raises(AdvisorError) as err:
        apply_answer(kb, session, "g-levels", [])
    assert err.value.code == "E_CHOICE_ARITY"
    assert "inclusive" in err.value.message


def test_non_outgoing_edge_rejected(kb):
    session = start_session(kb, "decomposition")
    with pytest.raises(AdvisorError) as err:
        apply_answer(kb, session, "g-team-size", ["service-per-team"])
    assert err.value.code == "E_BAD_EDGE"


def test_answering_non_pending_gateway_rejected(kb):
    session = start_session(kb, "decomposition")
    with pytest.raises(AdvisorError) as err:
        apply_answer(kb, session, "g-driver", ["service-per-team"])
    assert err.value.code == "E_NOT_PENDING"


def test_result_on_incomplete_session_lists_pending(kb):
    session = start_session(kb, "discovery")
    with pytest.raises(AdvisorError) as err:
        session_result(kb, session)
    assert err.value.code == "E_INCOMPLETE"
    assert "g-registration" in err.value.message


def test_service_per_team_surfaces_the_ownership_rule(kb):
    session = start_session(kb, "decomposition")
    session = apply_answer(kb, session, "g-team-size", ["g-driver"])
    session = apply_answer(kb, session, "g-driver", ["service-per-team"])
    assert session.complete and session.selected == ("service-per-team",)
    result = session_result(kb, session)
    assert any("5-9 people" in text for _, text in result.constraints)
    assert set(result.suggestions) == {
        "decomposed-by-subdomains",
        "decomposed-by-business-capabilities",
    }


def _single_pattern_kb(kb) -> KnowledgeBase:
    model = DecisionModel(
        id="discovery",
        title="one stop",
        nodes=(
            Node("start", NodeKind.START),
            Node("service-registry", NodeKind.PATTERN, pattern_ref="service-registry"),
        ),
        flow_edges=(FlowEdge("start", "service-registry"),),
    )
    return KnowledgeBase(kb.version, kb.qa_catalog, kb.patterns, (model,))


def test_start_to_single_pattern_completes_immediately(kb):
    tiny = _single_pattern_kb(kb)
    session = start_session(tiny, "discovery")
    assert session.complete
    assert session.selected == ("service-registry",)
    assert pending_decisions(tiny, session) == []


def test_empty_selection_yields_empty_result(kb):
    result = tradeoff_report(kb, [])
    assert result.patterns == () and result.aggregates == () and result.conflicts == ()


def _random_walk(kb, model_id: str, rng: random.Random):
    session = start_session(kb, model_id)
    steps = 0
    while not session.complete:
        steps += 1
        assert steps < 100, "walkthrough did not terminate"
        pending = pending_decisions(kb, session)
        assert pending, "awaiting_decision session must expose pending gateways"
        gateway = rng.choice(pending)
        options = [e.dst for e in gateway.options]
        if gateway.kind is NodeKind.GATEWAY_EXCLUSIVE:
            picks = [rng.choice(options)]
        else:
            picks = rng.sample(options, rng.randint(1, len(options)))
        session = apply_answer(kb, session, gateway.gateway, picks)
    return session


@pytest.mark.parametrize("model_id", ["decomposition", "security", "communication", "discovery"])
def test_random_walkthroughs_terminate_and_replay(kb, model_id):
    rng = random.Random(20240811)
    for _ in range(25):
        session = _random_walk(kb, model_id, rng)
        assert session.tokens == ()  # complete means zero tokens
        assert set(session.selected) <= set(kb.model(model_id).pattern_ids())
        replayed = replay_session(kb, model_id, session.log)
        assert replayed.selected == session.selected
        assert replayed.tokens == session.tokens == ()
        if model_id == "discovery":
            assert "service-registry" in session.selected


def test_gateway_arity_law_over_logs(kb):
    rng = random.Random(7)
    for model_id in ["security", "communication"]:
        session = _random_walk(kb, model_id, rng)
        model = kb.model(model_id)
        for decision in session.log:
            kind = model.node(decision.gateway).kind
            if kind is NodeKind.GATEWAY_EXCLUSIVE:
                assert len(decision.edges) == 1
            else:
                assert len(decision.edges) >= 1


def test_closure_examples(kb):
    assert complements_closure(kb, "decomposition", {"service-per-team"}) == {
        "decomposed-by-subdomains",
        "decomposed-by-business-capabilities",
    }
    assert complements_closure(kb, "communication", set()) == set()
    assert complements_closure(kb, "communication", {"asynchronous-messaging"}) == {
        "publish-subscribe-messaging",
        "publish-asynchronous-messaging",
        "asynchronous-request-reply",
        "idempotent-consumer",
    }


def test_closure_symmetry(kb):
    for model in kb.models:
        members = model.pattern_ids()
        for p in members:
            for q in members:
                if p == q:
                    continue
                p_in_q = p in complements_closure(kb, model.id, {q})
                q_in_p = q in complements_closure(kb, model.id, {p})
                assert p_in_q == q_in_p


def test_closure_rejects_foreign_patterns(kb):
    with pytest.raises(NotFoundError):
        complements_closure(kb, "discovery", {"api-gateway"})


def test_tradeoff_sync_async_conflict(kb):
    report = tradeoff_report(kb, ["synchronous-messaging", "asynchronous-messaging"])
    assert "coupling" in report.conflicts
    scalability = next(a for a in report.aggregates if a.qa == "scalability")
    assert scalability.net == 2 and scalability.minus == 0


def test_tradeoff_api_gateway_has_no_conflicts(kb):
    report = tradeoff_report(kb, ["api-gateway"])
    negatives = {a.qa for a in report.aggregates if a.minus}
    positives = {a.qa for a in report.aggregates if a.plus}
    assert negatives == {"response-time", "complexity"}
    assert positives == {"security", "availability", "portability"}
    assert report.conflicts == ()


def test_tradeoff_conflict_soundness(kb):
    report = tradeoff_report(kb, [p.id for p in kb.patterns])
    for agg in report.aggregates:
        assert (agg.qa in report.conflicts) == (agg.plus > 0 and agg.minus > 0)


def test_tradeoff_unknown_pattern(kb):
    with pytest.raises(NotFoundError) as err:
        tradeoff_report(kb, ["warp-drive"])
    assert "warp-drive" in err.value.message


def test_explanations(kb):
    card = explain_pattern(kb, "edge-level-authorization")
    assert any("defense-in-depth" in text for text in card.pattern.constraints)
    assert card.complements == ("https-enforcement",)

    registry = explain_pattern(kb, "service-registry")
    assert registry.pattern.summary == "Hold the dynamic IP addresses of all service instances"

    rpi = explain_pattern(kb, "remote-procedure-invocation")
    assert rpi.complements == ()

    with pytest.raises(NotFoundError):
        explain_pattern(kb, "hyperdrive")
