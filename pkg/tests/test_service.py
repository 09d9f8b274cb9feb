import json
import shutil

import pytest
from fastapi.testclient import TestClient

from facultas.service import create_app

from conftest import KB_PATH

WORKED = {
    "candidate_id": "a1",
    "bsc": "Software",
    "msc": "Artificial Intelligence",
    "phd": "Artificial Intelligence",
    "taught": ["AI", "DB", "AD"],
    "experience": 4,
}


@pytest.fixture()
def kb_file(tmp_path):
    path = tmp_path / "kb.json"
    shutil.copy(KB_PATH, path)
    return path


@pytest.fixture()
def client(kb_file):
    return TestClient(create_app(kb_file))


def test_health(client):
    body = client.get("/health").json()
    assert body == {"status": "ok", "revision": 1}


def test_schema_endpoint(client):
    body = client.get("/schema").json()
    assert body["courses"] == ["DB", "NS", "AI", "CN", "AD"]
    assert body["faculty_name"] == "Computer Science"


def test_recommend_worked_example(client):
    response = client.post("/recommend", json=WORKED)
    assert response.status_code == 200
    body = response.json()
    assert body["final"] == "AD"
    assert body["vote_counts"] == {"AD": 1}
    assert body["votes"][0]["firing"]["course_scores"] == {
        "DB": 3, "NS": 1, "AI": 4, "CN": 1, "AD": 5,
    }
    flags = [a["satisfied"] for a in body["votes"][0]["firing"]["rules"][0]["antecedents"]]
    assert flags == [True] * 5


def test_recommend_weights_off_query(client):
    body = client.post("/recommend?weights=off", json=WORKED).json()
    assert body["final"] == "AD"
    assert set(body["votes"][0]["weights"].values()) == {1}


def test_structurally_bad_body_is_a_400_report(client):
    response = client.post("/recommend", json={"candidate_id": "x"})
    assert response.status_code == 400
    assert any("bsc" in v for v in response.json()["violations"])


def test_domain_bad_candidate_is_a_400_report(client):
    response = client.post("/recommend", json={**WORKED, "bsc": "Physics"})
    assert response.status_code == 400
    assert response.json()["violations"] == ["bsc: value 'Physics' not in bsc domain"]


def test_whatif_with_any_override_keeps_uniform_panel_verdict(client):
    # the bundled expert has identical experience everywhere, so every
    # config yields all-equal weights and the argmax cannot move
    plain = client.post("/recommend", json=WORKED).json()["final"]
    whatif = client.post(
        "/recommend/whatif",
        json={
            "candidate": WORKED,
            "weight_config": {"threshold": 0, "floor": 0.5, "peak": 20, "spread": 5},
        },
    ).json()["final"]
    assert whatif == plain == "AD"


def test_whatif_never_touches_the_stored_kb(client):
    before = client.get("/kb")
    for _ in range(3):
        client.post(
            "/recommend/whatif",
            json={
                "candidate": WORKED,
                "weight_config": {"threshold": 12, "floor": 0.9, "peak": 30, "spread": 2},
            },
        )
    after = client.get("/kb")
    assert after.content == before.content
    assert after.headers["etag"] == before.headers["etag"]


def test_whatif_threshold_can_flip_the_verdict(tmp_path):
    raw = json.loads(KB_PATH.read_text())
    raw["experts"][0]["profile"]["per_course_experience"] = {
        "AI": 15, "AD": 2, "DB": 2, "NS": 2, "CN": 2,
    }
    path = tmp_path / "panel.json"
    path.write_text(json.dumps(raw))
    client = TestClient(create_app(path))

    assert client.post("/recommend", json=WORKED).json()["final"] == "AI"
    flipped = client.post(
        "/recommend/whatif",
        json={
            "candidate": WORKED,
            "weight_config": {"threshold": 16, "floor": 0.1, "peak": 16, "spread": 10},
        },
    ).json()
    assert flipped["final"] == "AD"  # every expert floored, raw scores win again


def test_kb_put_round_trip(client, kb_file):
    got = client.get("/kb")
    etag = got.headers["etag"]
    assert etag == '"1"'
    doc = got.json()
    doc["weight_config"]["floor"] = 0.2

    response = client.put("/kb", json=doc, headers={"If-Match": etag})
    assert response.status_code == 200
    assert response.json() == {"revision": 2}
    assert client.get("/kb").json()["weight_config"]["floor"] == 0.2
    # the file is rewritten on successful PUT
    assert json.loads(kb_file.read_text())["weight_config"]["floor"] == 0.2


def test_kb_put_requires_revision_header(client):
    doc = client.get("/kb").json()
    response = client.put("/kb", json=doc)
    assert response.status_code == 400
    assert any("If-Match" in v for v in response.json()["violations"])


def test_kb_put_stale_revision_conflicts(client):
    doc = client.get("/kb").json()
    assert client.put("/kb", json=doc, headers={"If-Match": '"1"'}).status_code == 200
    stale = client.put("/kb", json=doc, headers={"If-Match": '"1"'})
    assert stale.status_code == 409


def test_kb_put_invalid_document_changes_nothing(client, kb_file):
    before_file = kb_file.read_text()
    doc = client.get("/kb").json()
    doc["experts"] = []
    response = client.put("/kb", json=doc, headers={"If-Match": '"1"'})
    assert response.status_code == 400
    assert response.json()["violations"] == ["experts: empty"]
    assert client.get("/kb").headers["etag"] == '"1"'
    assert kb_file.read_text() == before_file


def test_assign_endpoint(client):
    weak = {"candidate_id": "weak", "bsc": "Hardware", "taught": [], "experience": 0}
    response = client.post("/assign", json={"course": "AD", "candidates": [WORKED, weak]})
    assert response.status_code == 200
    body = response.json()
    assert body["selected"] == "a1"
    assert body["candidates"][0]["votes_for_course"] == 1


def test_assign_unknown_course(client):
    response = client.post("/assign", json={"course": "XX", "candidates": [WORKED]})
    assert response.status_code == 400
    assert "unknown course" in response.json()["violations"][0]


def test_unknown_route_is_404(client):
    assert client.get("/nothing-here").status_code == 404


def test_cli_json_matches_service_payload(client):
    from click.testing import CliRunner

    from facultas.cli import main
    from conftest import APPLICANT_CSV

    result = CliRunner().invoke(main, ["recommend", str(KB_PATH), str(APPLICANT_CSV), "--json"])
    (cli_payload,) = json.loads(result.stdout)
    service_payload = client.post("/recommend", json=WORKED).json()
    assert cli_payload == service_payload
