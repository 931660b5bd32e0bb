import pytest
from fastapi.testclient import TestClient

from hahnfield.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_eval_series(client):
    response = client.post("/eval", json={"expr": "(1+t)*(1-t)"})
    assert response.status_code == 200
    body = response.json()
    assert body["kind"] == "series"
    assert body["text"] == "1 - t^2"
    assert body["series"] == {
        "group": "q",
        "coeff": "q",
        "terms": [["0", "1"], ["2", "-1"]],
    }
    assert "truncated_below" not in body  # exclude_none keeps exact results clean


def test_eval_lazy_series_marks_truncation(client):
    response = client.post("/eval", json={"expr": "1/(1-t)", "bound": "4"})
    body = response.json()
    assert body["truncated_below"] == "4"
    assert body["text"].endswith("(truncated below 4)")


def test_eval_default_display_bound(client):
    response = client.post("/eval", json={"expr": "1/(1-t)"})
    assert response.json()["truncated_below"] == "10"


def test_eval_support_and_valuation(client):
    body = client.post("/eval", json={"expr": "sp(t^(-1) + t^2)"}).json()
    assert body["kind"] == "support" and body["support"] == ["-1", "2"]
    body = client.post("/eval", json={"expr": "v(t - t)"}).json()
    assert body["kind"] == "valuation" and body["valuation"] == "inf"


def test_eval_parse_error_shape(client):
    response = client.post("/eval", json={"expr": "t^(1/0)"})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["kind"] == "parse_error"
    assert detail["position"] == 3


def test_eval_eval_error_shape(client):
    response = client.post("/eval", json={"expr": "1/0"})
    assert response.status_code == 400
    assert response.json()["detail"]["kind"] == "eval_error"


def test_eval_bad_selector_is_usage_error(client):
    response = client.post("/eval", json={"expr": "t", "group": "nope"})
    assert response.status_code == 400
    assert response.json()["detail"]["kind"] == "usage_error"


def test_check_pass_and_fail(client):
    body = client.post(
        "/check", json={"model": "hahn", "samples": 60, "seed": 7}
    ).json()
    assert body["passed"] is True
    assert len(body["checks"]) == 8 + 16 + 1
    body = client.post(
        "/check", json={"model": "mutant:bad-tau-hom", "samples": 60, "seed": 7}
    ).json()
    assert body["passed"] is False
    t7 = next(c for c in body["checks"] if c["axiom"] == "T7")
    assert t7["status"] == "fail" and t7["counterexample"] is not None


def test_check_unknown_model(client):
    response = client.post("/check", json={"model": "nosuch"})
    assert response.status_code == 400
    assert response.json()["detail"]["kind"] == "usage_error"


def test_check_validation_error(client):
    response = client.post("/check", json={"model": "hahn", "samples": 0})
    assert response.status_code == 422


def test_embed_roundtrip(client):
    body = client.post(
        "/embed", json={"expr": "2 + t^(1/2)", "max_terms": 10}
    ).json()
    assert body["exhausted"] is True
    assert body["terms"] == [["0", "2"], ["1/2", "1"]]
    assert body["text"] == "[(0,2),(1/2,1)] exhausted"
    assert body["residual_valuation"] == "inf"


def test_embed_geometric_prefix(client):
    body = client.post(
        "/embed", json={"expr": "1/(1-t)", "max_terms": 3}
    ).json()
    assert body["terms"] == [["0", "1"], ["1", "1"], ["2", "1"]]
    assert body["exhausted"] is False
    assert body["residual_valuation"] == "3"


def test_embed_missing_budget(client):
    response = client.post("/embed", json={"expr": "1+t"})
    assert response.status_code == 400
    assert response.json()["detail"]["kind"] == "usage_error"


def test_embed_empty(client):
    body = client.post("/embed", json={"expr": "0", "max_terms": 5}).json()
    assert body["terms"] == [] and body["exhausted"] is True
    assert body["text"] == "[] exhausted"


def test_embed_rejects_support_expression(client):
    response = client.post("/embed", json={"expr": "sp(t)", "max_terms": 3})
    assert response.status_code == 400
