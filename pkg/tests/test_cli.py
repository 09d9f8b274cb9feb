import json
import shutil

import pytest
from click.testing import CliRunner

from facultas.cli import main

from conftest import APPLICANT_CSV, FIXTURES, KB_PATH, SCHEMA_PATH

CANDIDATES_CSV = FIXTURES / "candidates.csv"


@pytest.fixture()
def runner():
    return CliRunner()


def test_validate_bundled_kb(runner):
    result = runner.invoke(main, ["validate", str(KB_PATH)])
    assert result.exit_code == 0
    assert result.stdout == "OK\n"


def test_validate_json_flag(runner):
    result = runner.invoke(main, ["validate", str(KB_PATH), "--json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"valid": True, "violations": []}


def test_validate_invalid_kb_exits_one(runner, tmp_path, table1_raw):
    raw = json.loads(json.dumps(table1_raw))
    raw["experts"] = []
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(raw))
    result = runner.invoke(main, ["validate", str(path)])
    assert result.exit_code == 1
    assert "experts: empty" in result.stdout


def test_validate_unparseable_file(runner, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    result = runner.invoke(main, ["validate", str(path)])
    assert result.exit_code == 1
    assert "invalid JSON" in result.stdout


def test_unknown_flag_is_a_usage_error(runner):
    result = runner.invoke(main, ["validate", str(KB_PATH), "--frobnicate"])
    assert result.exit_code == 2


def test_missing_subcommand_argument_is_a_usage_error(runner):
    result = runner.invoke(main, ["assign", str(KB_PATH), str(CANDIDATES_CSV)])
    assert result.exit_code == 2  # --course is required


def test_recommend_plain(runner):
    result = runner.invoke(main, ["recommend", str(KB_PATH), str(CANDIDATES_CSV)])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "a1 -> AD"
    assert len(lines) == 3


def test_recommend_explain_is_stable_and_carries_the_trace(runner):
    args = ["recommend", str(KB_PATH), str(APPLICANT_CSV), "--explain"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout
    out = first.stdout
    assert out.startswith("a1 -> AD\n")
    for fragment in ("score 5/5", "score 3/5", "score 1/5", "score 4/5"):
        assert fragment in out
    assert "[x] taught includes AD" in out
    assert "[ ] experience >= 5" in out


def test_recommend_json_payload(runner):
    result = runner.invoke(main, ["recommend", str(KB_PATH), str(APPLICANT_CSV), "--json"])
    assert result.exit_code == 0
    (payload,) = json.loads(result.stdout)
    assert payload["final"] == "AD"
    assert payload["votes"][0]["firing"]["course_scores"] == {
        "DB": 3, "NS": 1, "AI": 4, "CN": 1, "AD": 5,
    }


def test_recommend_weights_off_matches_plain_scores(runner):
    result = runner.invoke(
        main, ["recommend", str(KB_PATH), str(APPLICANT_CSV), "--weights", "off", "--json"]
    )
    (payload,) = json.loads(result.stdout)
    assert payload["final"] == "AD"
    assert set(payload["votes"][0]["weights"].values()) == {1}


def test_recommend_bad_candidate_file_exits_one(runner, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("candidate_id,bsc,msc,phd,taught,experience\nx,Physics,,,AI,1\n")
    result = runner.invoke(main, ["recommend", str(KB_PATH), str(bad)])
    assert result.exit_code == 1
    assert "not in bsc domain" in result.stdout


def test_assign_course(runner):
    result = runner.invoke(main, ["assign", str(KB_PATH), str(CANDIDATES_CSV), "--course", "AD"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "AD: a1"


def test_assign_unknown_course_exits_one(runner):
    result = runner.invoke(main, ["assign", str(KB_PATH), str(CANDIDATES_CSV), "--course", "XX"])
    assert result.exit_code == 1
    assert "unknown course" in result.stdout


def test_build_caches_rules(runner, tmp_path):
    kb_path = tmp_path / "kb.json"
    shutil.copy(KB_PATH, kb_path)
    result = runner.invoke(main, ["build", str(kb_path), "--mode", "direct"])
    assert result.exit_code == 0
    doc = json.loads(kb_path.read_text())
    assert doc["compiled"]["mode"] == "direct"
    assert len(doc["compiled"]["rule_sets"][0]["rules"]) == 5
    check = runner.invoke(main, ["validate", str(kb_path)])
    assert check.exit_code == 0


def test_build_tree_mode_stores_trees(runner, tmp_path):
    kb_path = tmp_path / "kb.json"
    out_path = tmp_path / "compiled.json"
    shutil.copy(KB_PATH, kb_path)
    result = runner.invoke(
        main, ["build", str(kb_path), "--mode", "tree", "--out", str(out_path)]
    )
    assert result.exit_code == 0
    doc = json.loads(out_path.read_text())
    assert doc["rule_mode"] == "tree"
    assert doc["compiled"]["trees"][0]["root"]["attribute"] == "msc"
    # original untouched when --out is given
    assert "compiled" not in json.loads(kb_path.read_text())


def test_synth_then_evaluate_round(runner, tmp_path):
    data = tmp_path / "data.csv"
    kb = tmp_path / "kb.json"
    result = runner.invoke(
        main,
        [
            "synth", str(SCHEMA_PATH), "-n", "30", "--noise", "0", "--seed", "5",
            "--experts", "3", "--dataset-out", str(data), "--kb-out", str(kb),
        ],
    )
    assert result.exit_code == 0, result.output
    outcome = runner.invoke(main, ["evaluate", str(kb), str(data)])
    assert outcome.exit_code == 0
    average = outcome.stdout.strip().splitlines()[-1]
    assert average.startswith("Average")
    assert average.endswith("100.00")


def test_synth_json_bundle(runner):
    result = runner.invoke(
        main, ["synth", str(SCHEMA_PATH), "-n", "4", "--seed", "2", "--json"]
    )
    assert result.exit_code == 0
    bundle = json.loads(result.stdout)
    assert len(bundle["dataset"]) == 4
    assert {row["course"] for row in bundle["questionnaire"]["rows"]} == {
        "DB", "NS", "AI", "CN", "AD",
    }


def test_evaluate_json_report(runner, tmp_path):
    data = tmp_path / "data.csv"
    kb = tmp_path / "kb.json"
    runner.invoke(
        main,
        [
            "synth", str(SCHEMA_PATH), "-n", "10", "--seed", "1",
            "--dataset-out", str(data), "--kb-out", str(kb),
        ],
    )
    result = runner.invoke(main, ["evaluate", str(kb), str(data), "--json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["average"] == 100.0
    assert report["faculties"][0]["n_total"] == 10


def test_serve_rejects_malformed_address(runner):
    result = runner.invoke(main, ["serve", str(KB_PATH), "--addr", "nonsense"])
    assert result.exit_code == 2
