import json

import pytest
from fastapi.testclient import TestClient

from qck.service import SessionStore, create_app


@pytest.fixture()
def client(tmp_path):
    app = create_app(SessionStore(str(tmp_path / "state")))
    with TestClient(app) as c:
        yield c


@pytest.fixture()
def a2_session(client):
    res = client.post("/api/seeds", json={"cartan": "A2", "word": [1, 2, 1]})
    assert res.status_code == 200
    return res.json()


def test_create_seed(a2_session):
    assert a2_session["seed"]["B"] == [[0], [-1], [1]]
    assert a2_session["id"]


def test_create_seed_rejects_bad_word(client):
    res = client.post("/api/seeds", json={"cartan": "A2", "word": [1, 1]})
    assert res.status_code == 400


def test_create_seed_with_matrix(client):
    res = client.post(
        "/api/seeds", json={"cartan": {"matrix": [[2, -1], [-1, 2]]}, "word": [1, 2, 1]}
    )
    assert res.status_code == 200


def test_get_seed_and_unknown_id(client, a2_session):
    sid = a2_session["id"]
    res = client.get(f"/api/seeds/{sid}")
    assert res.status_code == 200
    assert res.json()["seed"] == a2_session["seed"]
    assert client.get("/api/seeds/nope").status_code == 404


def test_mutate_and_undo_byte_identical(client, a2_session):
    sid = a2_session["id"]
    before = client.get(f"/api/seeds/{sid}").content
    res = client.post(f"/api/seeds/{sid}/mutate", json={"k": 1})
    assert res.status_code == 200
    assert res.json()["m_k"] == 0
    assert res.json()["seed"]["D"][0] == {"phi": [0, 0], "alpha": [0, -1]}
    res = client.post(f"/api/seeds/{sid}/undo")
    assert res.status_code == 200
    after = client.get(f"/api/seeds/{sid}").content
    assert before == after


def test_mutate_frozen_400(client, a2_session):
    sid = a2_session["id"]
    res = client.post(f"/api/seeds/{sid}/mutate", json={"k": 2})
    assert res.status_code == 400
    assert res.json()["detail"] == "FrozenDirection"


def test_dry_run_idempotent_and_stateless(client, a2_session):
    sid = a2_session["id"]
    before = client.get(f"/api/seeds/{sid}").content
    r1 = client.post(f"/api/seeds/{sid}/mutate", json={"k": 1, "dry_run": True})
    r2 = client.post(f"/api/seeds/{sid}/mutate", json={"k": 1, "dry_run": True})
    assert r1.status_code == r2.status_code == 200
    assert r1.content == r2.content
    assert client.get(f"/api/seeds/{sid}").content == before


def test_dry_run_matches_commit(client, a2_session):
    sid = a2_session["id"]
    preview = client.post(f"/api/seeds/{sid}/mutate", json={"k": 1, "dry_run": True}).json()
    commit = client.post(f"/api/seeds/{sid}/mutate", json={"k": 1}).json()
    assert preview["seed"] == commit["seed"]
    assert preview["exchanged_variable"] == commit["exchanged_variable"]


def test_variables_endpoint(client, a2_session):
    sid = a2_session["id"]
    client.post(f"/api/seeds/{sid}/mutate", json={"k": 1})
    res = client.get(f"/api/seeds/{sid}/variables")
    assert res.status_code == 200
    payload = res.json()
    assert payload["variables"][0] == [
        {"exp": [-1, 0, 1], "coef": [[0, 1]]},
        {"exp": [-1, 1, 0], "coef": [[0, 1]]},
    ]
    assert payload["denominator_support"][0] == [1]


def test_undo_empty_history_400(client, a2_session):
    sid = a2_session["id"]
    assert client.post(f"/api/seeds/{sid}/undo").status_code == 400


def test_verify_endpoint_pass_and_fail(client, a2_session):
    ok = client.post(
        "/api/verify",
        json={"check": "commutation", "params": {"cartan": "A2", "word": [1, 2, 1], "pair": [2, 1]}},
    )
    assert ok.status_code == 200
    assert ok.json()["pass"] is True

    seed = dict(a2_session["seed"])
    seed["L"] = [list(r) for r in seed["L"]]
    seed["L"][1][0] = 2
    seed["L"][0][1] = -2
    bad = client.post(
        "/api/verify", json={"check": "seed-conditions", "params": {"seed": seed}}
    )
    assert bad.status_code == 422
    assert bad.json()["pass"] is False

    unknown = client.post("/api/verify", json={"check": "nope", "params": {}})
    assert unknown.status_code == 400


def test_verify_endpoint_tsystem_and_delta(client):
    ok = client.post(
        "/api/verify",
        json={"check": "tsystem", "params": {"cartan": "A2", "u": [1, 2], "v": [], "i": 1}},
    )
    assert ok.status_code == 200
    ok = client.post(
        "/api/verify",
        json={"check": "delta", "params": {"cartan": "A2", "x": [2, 1], "i": 2}},
    )
    assert ok.status_code == 200


def test_sessions_persist_across_app_instances(tmp_path):
    root = str(tmp_path / "state")
    with TestClient(create_app(SessionStore(root))) as c1:
        sid = c1.post("/api/seeds", json={"cartan": "A2", "word": [1, 2, 1]}).json()["id"]
        c1.post(f"/api/seeds/{sid}/mutate", json={"k": 1})
    with TestClient(create_app(SessionStore(root))) as c2:
        res = c2.get(f"/api/seeds/{sid}")
        assert res.status_code == 200
        assert res.json()["history"][0]["k"] == 1
