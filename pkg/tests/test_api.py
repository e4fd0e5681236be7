import pytest
from fastapi.testclient import TestClient

from api import app


@pytest.fixture
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_baseline(client):
    response = client.get("/baseline", params={"edges": 3, "colors": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["summary"] == "2/9 ≈ 0.2222"
    assert body["values"]["baseline"] == "2/9"


def test_baseline_rejects_negative_edges(client):
    assert client.get("/baseline", params={"edges": -1, "colors": 3}).status_code == 422


def test_count_builtin(client):
    response = client.post("/count", json={"graph": "K4-e", "coloring": "fig-k5"})
    assert response.status_code == 200
    body = response.json()
    assert body["count"] == 10
    assert body["fraction_exact"] == "1/3"


def test_count_inline_payload(client):
    payload = {"n": 3, "r": 3, "colors": [[0, 1, 0], [0, 2, 1], [1, 2, 2]]}
    response = client.post("/count", json={"graph": "K3", "coloring": payload})
    assert response.status_code == 200
    assert response.json()["count"] == 1


def test_count_bad_graph_is_a_client_error(client):
    response = client.post("/count", json={"graph": "X9", "coloring": "fig-k5"})
    assert response.status_code == 400


def test_count_unknown_coloring(client):
    response = client.post("/count", json={"graph": "K3", "coloring": "nowhere.json"})
    assert response.status_code == 400


def test_bounds_complete(client):
    body = client.get("/bounds/complete", params={"a": 4}).json()
    assert body["holds"] is True
    assert body["summary"] == "not 6-anti-common: TRUE"


def test_bounds_complete_over_cap(client):
    assert client.get("/bounds/complete", params={"a": 13}).status_code == 422


@pytest.mark.parametrize("e, holds", [(14, True), (13, False)])
def test_bounds_dense2(client, e, holds):
    body = client.get("/bounds/dense2", params={"m": 6, "e": e}).json()
    assert body["holds"] is holds


def test_bounds_dense2_domain(client):
    assert client.get("/bounds/dense2", params={"m": 1, "e": 3}).status_code == 400


def test_bounds_dense1_not_applicable(client):
    body = client.get("/bounds/dense1", params={"m": 6, "e": 14, "c": "0.99"}).json()
    assert body["applicable"] is False


def test_bounds_dense1_indeterminate_is_a_server_error(client):
    assert client.get("/bounds/dense1", params={"m": 6, "e": 12, "c": "0.8"}).status_code == 500


def test_bounds_recolor_and_blowup_coef(client):
    assert client.get("/bounds/recolor", params={"rb": 4, "r": 3, "e": 3}).json()["values"]["lower_bound"] == "2/1"
    body = client.get("/bounds/blowup-coef", params={"a": 5, "t": 10, "m": 4}).json()
    assert body["values"]["coefficient"] == "1/62"
