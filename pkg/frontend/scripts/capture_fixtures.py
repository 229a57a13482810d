#!/usr/bin/env python3
"""Capture live service responses as JSON fixtures for the UI test suite.

Session ids are rewritten to a stable placeholder so fixtures stay
deterministic. Re-run after backend changes: python scripts/capture_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from msadvisor.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
SESSION_PLACEHOLDER = "fixture-session"


def stable(payload, sid: str):
    text = json.dumps(payload).replace(sid, SESSION_PLACEHOLDER)
    return json.loads(text)


def write(name: str, payload) -> None:
    path = FIXTURES / name
    path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {path.relative_to(Path.cwd()) if path.is_relative_to(Path.cwd()) else path}")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    write("models.json", client.get("/models").json())
    for model_id in ("decomposition", "security", "communication", "discovery"):
        write(f"model-{model_id}.json", client.get(f"/models/{model_id}").json())

    created = client.post("/sessions", json={"model": "discovery"}).json()
    sid = created["session"]
    write("session-discovery-created.json", stable(created, sid))
    step1 = client.post(
        f"/sessions/{sid}/answers",
        json={"gateway": "g-registration", "edges": ["self-registration"]},
    ).json()
    write("session-discovery-step1.json", stable(step1, sid))
    step2 = client.post(
        f"/sessions/{sid}/answers",
        json={"gateway": "g-lookup", "edges": ["client-side-service-discovery"]},
    ).json()
    write("session-discovery-step2.json", stable(step2, sid))
    result = client.get(f"/sessions/{sid}/result").json()
    write("session-discovery-result.json", stable(result, sid))

    security = client.post("/sessions", json={"model": "security"}).json()
    ssid = security["session"]
    write("session-security-created.json", stable(security, ssid))
    error_409 = client.post(f"/sessions/{ssid}/answers", json={"gateway": "g-levels", "edges": []})
    write("error-choice-arity.json", {"status": error_409.status_code, "body": error_409.json()})
    all_levels = client.post(
        f"/sessions/{ssid}/answers",
        json={"gateway": "g-levels", "edges": ["g-application", "g-communication", "g-code"]},
    ).json()
    write("session-security-levels.json", stable(all_levels, ssid))

    write(
        "recommend-decomposition-flexibility.json",
        client.post("/recommend", json={"model": "decomposition", "weights": {"flexibility": 1.0}}).json(),
    )
    write(
        "recommend-decomposition-empty.json",
        client.post("/recommend", json={"model": "decomposition", "weights": {}}).json(),
    )
    write(
        "tradeoff-sync-async.json",
        client.post(
            "/tradeoff", json={"patterns": ["synchronous-messaging", "asynchronous-messaging"]}
        ).json(),
    )
    write(
        "tradeoff-api-gateway.json",
        client.post("/tradeoff", json={"patterns": ["api-gateway"]}).json(),
    )

    error_422 = client.post("/recommend", json={"model": "decomposition", "weights": {"sparkle": 1}})
    write("error-unknown-qa.json", {"status": error_422.status_code, "body": error_422.json()})


if __name__ == "__main__":
    main()
