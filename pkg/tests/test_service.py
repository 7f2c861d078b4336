"""HTTP endpoints, sessions, and CLI/HTTP output identity."""

from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from quiverforge.cli import cli_main
from quiverforge.serialization import dumps_canonical, quiver_hash, quiver_from_dict
from quiverforge.service import create_app

from helpers import REMARK_ARROWS

P3 = {"n": 3, "arrows": [[1, 2, 1], [2, 3, 1]]}
REMARK = {"n": 6, "arrows": [[i, j, m] for i, j, m in REMARK_ARROWS]}


@pytest.fixture()
def client():
    return TestClient(create_app())


def test_health(client):
    resp = client.get("/api/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True
    assert "result" in body


def test_mutate_vertex(client):
    resp = client.post("/api/mutate", json={"quiver": P3, "vertex": 2})
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True
    assert body["result"] == {"n": 3, "arrows": [[1, 3, 1], [2, 1, 1], [3, 2, 1]]}


def test_mutate_sequence_involution(client):
    resp = client.post("/api/mutate", json={"quiver": P3, "sequence": [2, 2]})
    assert resp.json()["result"] == P3


def test_analyze_remark(client):
    resp = client.post("/api/analyze", json={"quiver": REMARK})
    assert resp.json()["result"]["covering_pairs"] == [[6, 5]]


def test_search_endpoint(client):
    resp = client.post("/api/search", json={"quiver": P3, "budget": {"max_iso_classes": 2}})
    body = resp.json()["result"]
    assert body["truncation_reason"] == "node_cap"
    resp = client.post("/api/search", json={"quiver": P3})
    assert resp.json()["result"]["exhausted"] is True


def test_certify_and_checkcert_endpoints(client):
    resp = client.post("/api/certify", json={"quiver": P3, "class": "banff"})
    body = resp.json()["result"]
    assert body["verdict"] == "certified"
    resp2 = client.post(
        "/api/checkcert",
        json={"quiver": P3, "class": "banff", "certificate": body["certificate"]},
    )
    assert resp2.json()["result"]["valid"] is True


def test_error_codes(client):
    # malformed body
    resp = client.post("/api/mutate", content=b"{oops", headers={"content-type": "application/json"})
    assert resp.status_code == 400
    # missing fields
    resp = client.post("/api/mutate", json={"quiver": P3})
    assert resp.status_code == 400
    # malformed quiver document
    resp = client.post("/api/analyze", json={"quiver": {"n": 2}})
    assert resp.status_code == 400
    # domain invariant violation
    resp = client.post(
        "/api/analyze", json={"quiver": {"n": 2, "arrows": [[1, 2, 1], [2, 1, 1]]}}
    )
    assert resp.status_code == 422
    assert resp.json()["ok"] is False
    # mutation at a vertex outside the quiver
    resp = client.post("/api/mutate", json={"quiver": P3, "vertex": 9})
    assert resp.status_code == 422


def test_session_lifecycle(client):
    resp = client.post("/api/session", json={"quiver": P3})
    body = resp.json()["result"]
    sid = body["id"]
    base_hash = body["hash"]
    assert body["history"] == []

    resp = client.post(f"/api/session/{sid}/mutate", json={"vertex": 2})
    mutated = resp.json()["result"]
    assert mutated["hash"] != base_hash
    assert len(mutated["history"]) == 1

    resp = client.post(f"/api/session/{sid}/undo", json={})
    undone = resp.json()["result"]
    assert undone["hash"] == base_hash
    assert undone["history"] == []


def test_session_replay_invariant(client):
    resp = client.post("/api/session", json={"quiver": P3})
    sid = resp.json()["result"]["id"]
    steps = [2, 1, 3, 3, 2]
    snapshots = []
    for v in steps:
        body = client.post(f"/api/session/{sid}/mutate", json={"vertex": v}).json()["result"]
        snapshots.append(body)
    # replaying the recorded history from the base reproduces every hash
    replay = quiver_from_dict(P3)
    from quiverforge.quiver import mutate

    history = snapshots[-1]["history"]
    assert [entry[0] for entry in history] == steps
    for step, expected_hash in history:
        replay = mutate(replay, step)
        assert quiver_hash(replay) == expected_hash
    # interleave undo and a fresh mutation
    client.post(f"/api/session/{sid}/undo", json={})
    body = client.post(f"/api/session/{sid}/mutate", json={"vertex": 1}).json()["result"]
    replay = quiver_from_dict(P3)
    for step, expected_hash in body["history"]:
        replay = mutate(replay, step)
        assert quiver_hash(replay) == expected_hash


def test_undo_with_empty_history(client):
    resp = client.post("/api/session", json={"quiver": P3})
    sid = resp.json()["result"]["id"]
    resp = client.post(f"/api/session/{sid}/undo", json={})
    assert resp.status_code == 422


def test_unknown_session_is_404(client):
    resp = client.post("/api/session/deadbeef/mutate", json={"vertex": 1})
    assert resp.status_code == 404


def test_session_expiry():
    client = TestClient(create_app(session_ttl_seconds=0.0))
    resp = client.post("/api/session", json={"quiver": P3})
    sid = resp.json()["result"]["id"]
    resp = client.post(f"/api/session/{sid}/mutate", json={"vertex": 1})
    assert resp.status_code == 404


def test_cli_and_http_results_are_byte_identical(client, tmp_path, capsys):
    remark_path = tmp_path / "remark.json"
    remark_path.write_text(json.dumps(REMARK))

    assert cli_main(["analyze", str(remark_path)]) == 0
    cli_bytes = capsys.readouterr().out.strip()
    http_result = client.post("/api/analyze", json={"quiver": REMARK}).json()["result"]
    assert cli_bytes == dumps_canonical(http_result)

    assert cli_main(["certify", str(remark_path), "--class", "louise"]) == 0
    cli_bytes = capsys.readouterr().out.strip()
    http_result = client.post(
        "/api/certify", json={"quiver": REMARK, "class": "louise"}
    ).json()["result"]
    assert cli_bytes == dumps_canonical(http_result)

    assert cli_main(["search", str(remark_path), "--max-classes", "10"]) == 0
    cli_bytes = capsys.readouterr().out.strip()
    http_result = client.post(
        "/api/search", json={"quiver": REMARK, "budget": {"max_iso_classes": 10}}
    ).json()["result"]
    assert cli_bytes == dumps_canonical(http_result)
