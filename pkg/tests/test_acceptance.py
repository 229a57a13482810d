"""Acceptance suite: one test per release criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v` to see one line per criterion.
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction
from pathlib import Path

from fastapi.testclient import TestClient

from msadvisor import (
    NodeKind,
    apply_answer,
    builtin_kb,
    export_dot,
    load_kb,
    pending_decisions,
    replay_session,
    score_patterns,
    serialize_kb,
    start_session,
)
from msadvisor.cli import main
from msadvisor.service import create_app
from test_engine import brute_force_ranking
from test_kb import EXPECTED_COMPLEMENTS

GOLDEN = Path(__file__).parent / "golden"

# Frozen catalog descriptions, one per pattern, keyed by id.
EXPECTED_SUMMARIES = {
    "decomposed-by-subdomains": "Define services corresponding to Domain-Driven Design (DDD) subdomains.",
    "decomposed-by-business-capabilities": "Define services corresponding to business capabilities.",
    "service-per-team": "Break down the application into microservices that individual teams can manage.",
    "decomposed-by-transactions": (
        "An application typically needs to call multiple microservices to complete one business "
        "transaction. To avoid latency issues, services can be defined based on business transactions."
    ),
    "scenario-analysis": "Identify the business capabilities by analyzing the nouns and verbs from given business scenarios.",
    "graph-based-approach": (
        "Identify microservices from the source code of existing monolithic applications by "
        "graph clustering and visualization techniques."
    ),
    "data-flow-driven-approach": (
        "Follow a top-down approach in which data flow diagrams contain the business requirements "
        "that are later partitioned through a formal algebra algorithm for identifying microservices."
    ),
    "access-and-identity-tokens": "Verifies that a user is authorized to perform specific operations or not",
    "layered-defense": "Protect microservices systems by introducing multiple gateways and API-lead architecture",
    "service-level-authorization": "Give freedom to each microservice to control and enforce the access control policies for communication",
    "edge-level-authorization": "Secure the edge points (API gateway) of microservices",
    "https-enforcement": "Suggests using HTTPS instead of HTTP to secure communication between microservices.",
    "api-rate-limiting": "Slow down the attacks from intruders",
    "encrypt-and-protect-secrets": (
        "Use tools (e.g., HashiCorp Vault, Microsoft Azure Key Vault, Amazon KMS) to secure the "
        "API key, user credentials, and other credentials related to microservices."
    ),
    "scan-dependencies": "Scanning programs are used to detect the security vulnerabilities that may occurs because of dependency issues",
    "api-gateway": "Provide a single entry point to clients for accessing microservices",
    "bff": "Define a separate API gateway according to type of application client",
    "aggregator-microservice": "Collect related items of data from multiple microservices",
    "proxy-microservices": "Collect related items of data from multiple microservices through dumb and smart proxies",
    "remote-procedure-invocation": "Establish inter-service communication via a request/reply-based protocol",
    "asynchronous-messaging": "Message sender does not wait for response of corresponding recipient microservices",
    "publish-subscribe-messaging": "Allow sender microservice to broadcast the message to zero or more recipient microservices",
    "publish-asynchronous-messaging": (
        "Allow sender microservice to broadcast the message to one or more recipient microservices "
        "and get the response from some recipient microservices"
    ),
    "asynchronous-request-reply": (
        "Allow sender microservice to directly send a request message to a recipient microservice "
        "and get the immediate response"
    ),
    "synchronous-messaging": "Message sender waits for response of corresponding recipient microservices",
    "idempotent-consumer": "Detect and discard duplicate messages from sender microservices",
    "anti-corruption-layer": "Used to communicate the polyglot microservices",
    "service-registry": "Hold the dynamic IP addresses of all service instances",
    "client-side-service-discovery": "Directly access the dynamic addresses of service instances from service registry",
    "server-side-service-discovery": "Access the dynamic addresses of service instances via routers from service registry",
    "microservice-chassis": "Enable the implementation of client-side service pattern via Microservices chassis frameworks",
    "self-registration": (
        "Enables microservices to register their instances with service registry on service "
        "startup and update service status periodically"
    ),
    "3rd-party-registration": "3rd party registration pattern is an alternative solution of Self registration pattern",
}


def _passed(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


def test_c1_builtin_catalog_fidelity():
    started = time.perf_counter()
    kb = builtin_kb()
    counts: dict[str, int] = {}
    for p in kb.patterns:
        counts[p.area] = counts.get(p.area, 0) + 1
    assert counts == {"decomposition": 7, "security": 8, "communication": 12, "discovery": 6}
    assert len(kb.patterns) == 33
    assert {p.id for p in kb.patterns} == set(EXPECTED_SUMMARIES)
    for p in kb.patterns:
        assert p.summary == EXPECTED_SUMMARIES[p.id], p.id
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"catalog fidelity checks took {elapsed:.2f}s"
    _passed("C1 built-in catalog fidelity (7/8/12/6, summaries verbatim, <1s)")


def test_c2_complements_fidelity():
    kb = builtin_kb()
    pairs = {frozenset({c.a, c.b}) for m in kb.models for c in m.complements_edges}
    assert pairs == EXPECTED_COMPLEMENTS
    assert len(pairs) == 14
    _passed("C2 complements fidelity (exactly the 14 pairs)")


def test_c3_impact_spot_checks():
    kb = builtin_kb()

    def impact(pid: str, qa: str) -> str:
        matches = [i.polarity.value for i in kb.pattern(pid).impacts if i.qa == qa]
        assert matches, f"{pid} has no impact on {qa}"
        return matches[0]

    assert impact("decomposed-by-business-capabilities", "flexibility") == "-"
    assert impact("service-level-authorization", "latency") == "-"
    assert impact("api-gateway", "response-time") == "-"
    assert impact("3rd-party-registration", "scalability") == "+"
    assert impact("3rd-party-registration", "coupling") == "+"
    _passed("C3 impact spot-checks (one per design area)")


def test_c4_scoring_matches_independent_tally():
    started = time.perf_counter()
    kb = builtin_kb()
    doc = json.loads(serialize_kb(kb))
    qa_ids = [q["id"] for q in doc["qa_catalog"]]
    assert len(qa_ids) == 29
    for qa in qa_ids:
        for model_id in ("decomposition", "security", "communication", "discovery"):
            engine = [(e.pattern_id, e.score) for e in score_patterns(kb, model_id, {qa: 1}).entries]
            oracle = brute_force_ranking(doc, model_id, {qa: Fraction(1)})
            assert engine == oracle, (qa, model_id)
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"scoring oracle sweep took {elapsed:.2f}s"
    _passed("C4 scoring oracle (29 QAs x 4 models, exact, <5s)")


def test_c5_ranking_properties_over_1000_random_vectors():
    kb = builtin_kb()
    rng = random.Random(118)
    models = ("decomposition", "security", "communication", "discovery")
    qa_ids = [q.id for q in kb.qa_catalog]
    checked = 0
    while checked < 1000:
        model_id = models[checked % 4]
        w1 = {qa: Fraction(rng.randint(0, 100), 100) for qa in rng.sample(qa_ids, rng.randint(1, 8))}
        w2 = {qa: Fraction(rng.randint(0, 100), 100) for qa in rng.sample(qa_ids, rng.randint(1, 8))}
        c = Fraction(rng.randint(1, 400), 100)

        base = score_patterns(kb, model_id, w1)
        scaled = score_patterns(kb, model_id, {qa: w * c for qa, w in w1.items()})
        assert [e.pattern_id for e in base.entries] == [e.pattern_id for e in scaled.entries]
        for b, s in zip(base.entries, scaled.entries):
            assert s.score == b.score * c  # exact rational arithmetic

        merged = dict(w1)
        for qa, w in w2.items():
            merged[qa] = merged.get(qa, Fraction(0)) + w
        s1 = {e.pattern_id: e.score for e in base.entries}
        s2 = {e.pattern_id: e.score for e in score_patterns(kb, model_id, w2).entries}
        s12 = {e.pattern_id: e.score for e in score_patterns(kb, model_id, merged).entries}
        assert s12 == {pid: s1[pid] + s2[pid] for pid in s1}
        checked += 1
    _passed("C5 argmax invariance + additivity (1000 random weight vectors, exact)")


def test_c6_gateway_semantics_randomized_walkthroughs():
    kb = builtin_kb()
    rng = random.Random(3177)
    for model_id in ("decomposition", "security", "communication", "discovery"):
        for _ in range(40):
            session = start_session(kb, model_id)
            steps = 0
            while not session.complete:
                steps += 1
                assert steps < 64, "walkthrough must terminate"
                pending = pending_decisions(kb, session)
                gateway = rng.choice(pending)
                options = [e.dst for e in gateway.options]
                if gateway.kind is NodeKind.GATEWAY_EXCLUSIVE:
                    picks = [rng.choice(options)]
                else:
                    picks = rng.sample(options, rng.randint(1, len(options)))
                before = set(session.tokens)
                session = apply_answer(kb, session, gateway.gateway, picks)
                # token conservation: the answered gateway's token is consumed,
                # and any new tokens sit at decision gateways downstream
                assert gateway.gateway not in session.tokens
                assert before - {gateway.gateway} <= set(session.tokens)
            assert session.tokens == ()
            replayed = replay_session(kb, model_id, session.log)
            assert replayed.selected == session.selected
            if model_id == "discovery":
                assert "service-registry" in session.selected
    _passed("C6 gateway semantics (termination, token conservation, deterministic replay)")


def _mutate(doc: dict, fn) -> dict:
    clone = json.loads(json.dumps(doc))
    fn(clone)
    return clone


def test_c7_validation_soundness_canned_mutations():
    kb = builtin_kb()
    doc = json.loads(serialize_kb(kb))

    def model(clone, mid="decomposition"):
        return next(m for m in clone["models"] if m["id"] == mid)

    mutations = [
        ("E_CYCLE", lambda c: model(c)["edges"].append({"from": "service-per-team", "to": "g-team-size", "condition": None})),
        ("E_UNREACHABLE", lambda c: model(c)["edges"].remove(next(e for e in model(c)["edges"] if e["to"] == "scenario-analysis"))),
        ("E_GATEWAY_ARITY", lambda c: model(c, "discovery")["edges"].remove(next(e for e in model(c, "discovery")["edges"] if e["to"] == "3rd-party-registration"))),
        ("E_DANGLING_REF", lambda c: model(c)["complements"].append({"a": "service-per-team", "b": "ghost-pattern"})),
        ("E_DANGLING_REF", lambda c: model(c)["edges"].append({"from": "g-driver", "to": "nowhere", "condition": None})),
        ("E_DUP_ID", lambda c: model(c)["nodes"].append(dict(model(c)["nodes"][1]))),
        ("E_MULTI_START", lambda c: (model(c)["nodes"].append({"id": "start2", "kind": "start", "pattern": None, "label": None}), model(c)["edges"].append({"from": "start2", "to": "g-team-size", "condition": None}))),
        ("E_SELF_LOOP", lambda c: model(c)["edges"].append({"from": "g-driver", "to": "g-driver", "condition": None})),
        ("E_PATTERN_REF", lambda c: model(c)["nodes"].__setitem__(4, {**model(c)["nodes"][4], "pattern": None})),
        ("E_AREA_MISMATCH", lambda c: next(p for p in c["patterns"] if p["id"] == "scenario-analysis").__setitem__("area", "security")),
    ]
    assert len(mutations) == 10
    for expected, fn in mutations:
        mutated = _mutate(doc, fn)
        try:
            load_kb(json.dumps(mutated))
        except Exception as exc:
            codes = {f.code for f in exc.report.errors}  # type: ignore[attr-defined]
            assert expected in codes, f"wanted {expected}, got {codes}"
        else:
            raise AssertionError(f"mutation for {expected} loaded cleanly")
    _passed("C7 validation soundness (10 canned mutations, expected codes)")


def test_c8_round_trips_and_goldens():
    kb = builtin_kb()
    doc = serialize_kb(kb)
    assert load_kb(doc) == kb
    assert serialize_kb(load_kb(doc)) == doc
    assert serialize_kb(kb) == serialize_kb(kb)
    for model in kb.models:
        rendered = export_dot(model, kb.patterns)
        assert rendered == export_dot(model, kb.patterns)
        golden = (GOLDEN / f"{model.id}.dot").read_text(encoding="utf-8")
        assert rendered == golden, f"{model.id} DOT drifted from golden"
    _passed("C8 round-trips (load/serialize identity, byte-deterministic DOT vs goldens)")


RECOMMEND_FIXTURES = [
    ("decomposition", {"flexibility": 1.0}),
    ("decomposition", {}),
    ("decomposition", {"performance": 0.5, "coupling": 0.5}),
    ("security", {"latency": 1.0}),
    ("security", {"security": 1.0, "complexity": 0.25}),
    ("security", {"confidentiality": 0.7, "integrity": 0.3}),
    ("communication", {"latency": 1.0}),
    ("communication", {"scalability": 0.9, "testability": 0.1}),
    ("communication", {"response-time": 1.0}),
    ("discovery", {"coupling": 1.0}),
    ("discovery", {"scalability": 0.4, "resilience": 0.6}),
    ("all", {"availability": 1.0}),
]

TRADEOFF_FIXTURES = [
    ["api-gateway"],
    ["synchronous-messaging", "asynchronous-messaging"],
    ["service-per-team"],
    ["service-registry", "self-registration", "client-side-service-discovery"],
    ["edge-level-authorization", "https-enforcement"],
    ["decomposed-by-transactions", "scenario-analysis"],
    ["bff", "aggregator-microservice"],
    ["layered-defense", "api-rate-limiting", "scan-dependencies"],
]


def test_c9_cli_service_parity(capsys):
    client = TestClient(create_app())
    compared = 0
    for model_id, weights in RECOMMEND_FIXTURES:
        argv = ["--format", "json", "recommend", "--model", model_id]
        for qa, value in weights.items():
            argv += ["--weight", f"{qa}={json.dumps(value)}"]
        assert main(argv) == 0
        cli_bytes = capsys.readouterr().out.encode("utf-8")
        http_bytes = client.post("/recommend", json={"model": model_id, "weights": weights}).content
        assert cli_bytes == http_bytes, (model_id, weights)
        compared += 1
    for patterns in TRADEOFF_FIXTURES:
        assert main(["--format", "json", "tradeoff", "--patterns", ",".join(patterns)]) == 0
        cli_bytes = capsys.readouterr().out.encode("utf-8")
        http_bytes = client.post("/tradeoff", json={"patterns": patterns}).content
        assert cli_bytes == http_bytes, patterns
        compared += 1
    assert compared == 20
    _passed("C9 CLI/service parity (20 fixtures byte-identical)")
