import pytest

from server import create_app


@pytest.fixture
def client():
    app = create_app()
    app.config["TESTING"] = True
    return app.test_client()


def test_index_page(client):
    res = client.get("/")
    assert res.status_code == 200
    assert b"Matchbound Prover" in res.data


def test_semirings_are_listed(client):
    keys = {s["key"]: s for s in client.get("/api/semirings").get_json()}
    assert {"boolean", "natural", "fuzzy", "matchbox"} <= set(keys)
    assert keys["fuzzy"]["idempotent"] is True
    assert keys["natural"]["idempotent"] is False


def test_prove_returns_certificate(client):
    res = client.post("/api/prove", json={"srs": "a a -> a b a"})
    assert res.status_code == 200
    data = res.get_json()
    assert data["metrics"]["outcome"] == "success"
    assert data["metrics"]["bound"] == 2
    assert data["certificate"]["bound"] == 2
    assert len(data["certificate"]["states"]) == 7
    assert data["dot"].startswith("digraph certificate {")
    assert data["report"].startswith("YES")


def test_prove_limit_has_no_certificate(client):
    res = client.post("/api/prove", json={"srs": "a -> a a", "limits": {"max_steps": 20}})
    data = res.get_json()
    assert data["metrics"]["outcome"] == "limit"
    assert data["metrics"]["limit_kind"] == "max_steps"
    assert data["certificate"] is None


def test_verify_round_trip(client):
    cert = client.post("/api/prove", json={"srs": "a a -> a b a"}).get_json()["certificate"]
    data = client.post("/api/verify", json={"certificate": cert}).get_json()
    assert data["ok"] is True
    assert data["failures"] == []

    cert["edges"] = [e for e in cert["edges"] if not (e["label"]["kind"] == "lambda" and e["from"] != e["to"])]
    data = client.post("/api/verify", json={"certificate": cert}).get_json()
    assert data["ok"] is False
    assert {f["check"] for f in data["failures"]} == {"compatible"}


def test_chain_endpoint(client):
    data = client.post("/api/chain", json={"words": [["b", "b", "b"], ["b", "b", "c"]]}).get_json()
    assert data["cost"] == 3
    assert data["dump"].startswith("chain: ")


@pytest.mark.parametrize("path, body, fragment", [
    ("/api/prove", {"srs": "-> a"}, "line 1"),
    ("/api/prove", {"srs": 3}, "srs"),
    ("/api/prove", {"srs": "a -> b", "preset": "huge"}, "unknown preset"),
    ("/api/prove", {"srs": "a -> b", "limits": {"max_steps": -1}}, "max_steps"),
    ("/api/verify", {"certificate": []}, "expected a JSON object"),
    ("/api/chain", {"words": []}, "at least one word"),
    ("/api/chain", {"words": "ab"}, "words"),
])
def test_bad_requests_are_400(client, path, body, fragment):
    res = client.post(path, json=body)
    assert res.status_code == 400
    assert fragment in res.get_json()["error"]


def test_non_json_body_is_400(client):
    res = client.post("/api/prove", data="hello", content_type="text/plain")
    assert res.status_code == 400
