"""HTTP service endpoints: happy paths, wire formats, and error mapping."""

import pytest
from fastapi.testclient import TestClient

from antiramsey.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app, raise_server_exceptions=False) as c:
        yield c


K4 = {"n": 4, "r": 2, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]}
K3 = {"n": 3, "r": 2, "edges": [[0, 1], [0, 2], [1, 2]]}
BOWTIE = {"n": 5, "r": 2, "edges": [[0, 1], [0, 2], [1, 2], [2, 3], [2, 4], [3, 4]]}


def test_health(client):
    doc = client.get("/health").json()
    assert doc["status"] == "ok"


def test_chromatic(client):
    resp = client.post("/chromatic", json={"graph": K4})
    assert resp.status_code == 200
    assert resp.json() == {"chi": 4}


def test_critical(client):
    doc = client.post("/critical", json={"graph": K4}).json()
    assert doc["edge_critical"] is True
    assert doc["witness_edge"] == [0, 1]


def test_doubly_critical(client):
    doc = client.post("/doubly-critical", json={"graph": BOWTIE, "p": 3}).json()
    assert doc["doubly_critical"] is True


def test_class_and_witness(client):
    doc = client.post("/class", json={"graph": K4, "p": 3}).json()
    assert doc["class"] == 2
    assert doc["witness"] == {"blocks": [[0, 1], [2, 3]]}
    doc = client.post("/config-witness", json={"graph": BOWTIE, "p": 3}).json()
    assert doc["witness"] is not None


def test_expand(client):
    doc = client.post("/expand", json={"graph": K3, "r": 3}).json()
    assert doc["hypergraph"]["n"] == 6
    assert len(doc["edge_provenance"]) == 3


def test_turan(client):
    assert client.post("/turan", json={"n": 6, "p": 4, "r": 3, "count_only": True}).json() == {
        "t": 8
    }
    doc = client.post("/turan", json={"n": 6, "p": 4, "r": 3}).json()
    assert doc["t"] == 8 and len(doc["hypergraph"]["edges"]) == 8


def test_colorings(client):
    doc = client.post("/color-r3", json={"n": 6, "p": 4, "ell": 2}).json()
    colors = {rec["color"] for rec in doc["colors"]}
    assert len(colors) == 9
    doc = client.post("/color-general", json={"n": 8, "p": 5, "r": 4}).json()
    assert len({rec["color"] for rec in doc["colors"]}) == 17
    doc = client.post(
        "/color-trivial",
        json={"n": 4, "r": 2, "extremal": {"n": 4, "r": 2, "edges": [[0, 1]]}},
    ).json()
    assert len({rec["color"] for rec in doc["colors"]}) == 2


def test_rainbow_find_roundtrip(client):
    coloring = client.post("/color-r3", json={"n": 6, "p": 4, "ell": 2}).json()
    pattern = client.post("/expand", json={"graph": K3, "r": 3}).json()["hypergraph"]
    doc = client.post(
        "/rainbow-find", json={"coloring": coloring, "pattern": pattern}
    ).json()
    assert doc["found"] is True
    assert len(doc["copy"]["edges"]) == 3


def test_classify_pairs(client):
    doc = client.post(
        "/classify-pairs",
        json={"graph": {"n": 10, "r": 3, "edges": []}, "skeleton": K4},
    ).json()
    assert doc["threshold"] == 16
    assert len(doc["small_pairs"]) == 45


def test_oracles(client):
    doc = client.post("/ar-oracle", json={"n": 4, "r": 2, "skeleton": K3}).json()
    assert doc["value"] == 4 and doc["certified"]
    doc = client.post(
        "/ex-oracle", json={"n": 4, "r": 2, "family": [K3]}
    ).json()
    assert doc["value"] == 4


def test_f_endpoints(client):
    turan = client.post("/turan", json={"n": 6, "p": 4, "r": 3}).json()
    payload = {"graph": turan["hypergraph"], "partition": turan["partition"]}
    assert client.post("/f-potential", json=payload).json() == {"value": 24}
    doc = client.post(
        "/f-max", json={"graph": turan["hypergraph"], "k": 3, "mode": "exact"}
    ).json()
    assert doc["value"] == 24

    doc = client.post("/crossing-split", json=payload).json()
    assert doc["non_crossing"] == []


def test_closeness(client):
    turan = client.post("/turan", json={"n": 6, "p": 4, "r": 3}).json()
    doc = client.post("/closeness", json={"graph": turan["hypergraph"], "p": 4}).json()
    assert doc["value"] == 0


def test_verify_endpoints(client):
    doc = client.post(
        "/verify-small", json={"n": 4, "r": 2, "skeleton": K3}
    ).json()
    assert doc["passed"] is True
    doc = client.post("/scan", json={"max_vertices": 4, "p": 3}).json()
    assert doc["corpus_size"] == 1  # K4 is the only one through 4 vertices


def test_domain_error_shape(client):
    resp = client.post("/chromatic", json={"graph": {"n": 3, "r": 3, "edges": []}})
    assert resp.status_code == 400
    err = resp.json()["error"]
    assert err["kind"] == "wrong-uniformity"


def test_budget_error_kind(client):
    resp = client.post(
        "/ar-oracle", json={"n": 5, "r": 2, "skeleton": K3, "budget_nodes": 3}
    )
    assert resp.status_code == 400
    assert resp.json()["error"]["kind"] == "budget"


def test_validation_error_is_422(client):
    resp = client.post("/chromatic", json={"graph": {"n": 3}})
    assert resp.status_code == 422


def test_extend_skeleton_endpoint(client):
    host_edges = [list(e) for e in __import__("itertools").combinations(range(11), 3)]
    coloring = {
        "host": {"n": 11, "r": 3, "edges": host_edges},
        "colors": [{"edge": e, "color": i} for i, e in enumerate(host_edges)],
    }
    doc = client.post(
        "/extend-skeleton",
        json={"coloring": coloring, "skeleton": K3, "vertex_map": [[0, 0], [1, 1], [2, 2]]},
    ).json()
    assert doc["success"] is True


def test_collection_endpoint(client):
    host_edges = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    coloring = {
        "host": {"n": 4, "r": 2, "edges": host_edges},
        "colors": [{"edge": e, "color": i} for i, e in enumerate(host_edges)],
    }
    p2 = {"n": 3, "r": 2, "edges": [[0, 1], [1, 2]]}
    doc = client.post("/collection", json={"coloring": coloring, "pattern": p2}).json()
    assert doc["size"] == 3
