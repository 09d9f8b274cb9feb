"""Acceptance suite: one test per release criterion, at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion. The whole suite exercises the Python package only; the web client
is not required.
"""

import itertools
import math
import random
import time

import pytest
from click.testing import CliRunner

from facultas.cli import main as cli_main
from facultas.evaluation import accuracy, evaluate, synth_generate, synthetic_kb
from facultas.induction import (
    TrainingSample,
    _candidate_splits,
    build_id3,
    classify_sample,
    information_gain,
    leaves,
    samples_from_questionnaire,
    tree_from_questionnaire,
)
from facultas.rules import (
    course_scores,
    pick_course,
    recommend_unweighted,
    rule_matches_sample,
    rules_from_questionnaire,
)
from facultas.schema import ExpertProfile, load_schema
from facultas.weighting import expert_weight, recommend_weighted
from facultas.voting import majority_vote
from factories import random_candidate, random_questionnaire, random_schema

from conftest import APPLICANT_CSV, KB_PATH, SCHEMA_PATH
from test_induction import oracle_gain
from test_rules import _duplicated_ruleset
from test_voting import vote

ALL_NOMINALS = frozenset({"bsc", "msc", "phd"})


def _pass(label: str) -> None:
    print(f"PASS {label}")


def test_worked_example_golden_vector(table1_kb, worked_candidate):
    ruleset = rules_from_questionnaire(table1_kb.experts[0].questionnaire)
    report = course_scores(ruleset, worked_candidate, table1_kb.schema)
    by_rule = {t.rule_id: t.score for t in report.rules}
    assert by_rule == {"r1": 5, "r2": 3, "r3": 1, "r4": 4, "r5": 1}
    course, _ = recommend_unweighted(ruleset, worked_candidate, table1_kb.schema)
    assert course == "AD"

    best = math.inf
    for _ in range(5):
        start = time.perf_counter()
        rs = rules_from_questionnaire(table1_kb.experts[0].questionnaire)
        recommend_unweighted(rs, worked_candidate, table1_kb.schema)
        best = min(best, time.perf_counter() - start)
    assert best < 0.010, f"golden query took {best * 1000:.2f} ms"
    _pass(
        "Worked-example golden vector: firing scores {r1:5, r2:3, r3:1, r4:4, r5:1}, "
        f"recommendation AD, {best * 1000:.2f} ms"
    )


def test_accuracy_arithmetic():
    assert f"{accuracy(26, 30):.2f}" == "86.66"
    assert f"{accuracy(28, 30):.2f}" == "93.33"
    assert f"{accuracy(23, 30):.2f}" == "76.66"
    for n in (1, 4, 30, 120):
        assert f"{accuracy(n, n):.2f}" == "100.00"
        assert f"{accuracy(0, n):.2f}" == "0.00"
    _pass("Accuracy arithmetic: truncation reproduces 86.66 / 93.33 / 76.66 exactly")


def test_synthetic_substitute_for_private_dataset():
    schema = load_schema(SCHEMA_PATH)
    seeds = range(20)
    start = time.perf_counter()
    means = []
    for noise in (0.0, 0.25, 0.5, 1.0):
        scores = []
        for seed in seeds:
            dataset, questionnaire = synth_generate(schema, 120, noise, seed=seed)
            kb = synthetic_kb(schema, questionnaire, n_experts=5)
            scores.append(evaluate(kb, dataset).accuracy)
        if noise == 0.0:
            assert all(f"{a:.2f}" == "100.00" for a in scores)
        means.append(sum(scores) / len(scores))
    elapsed = time.perf_counter() - start
    for higher, lower in zip(means, means[1:]):
        assert higher >= lower - 1e-9, means
    assert elapsed < 5.0, f"sweep took {elapsed:.2f} s"
    _pass(
        "Synthetic evaluation: noise-0 exact 100.00 on 20 seeds; mean accuracy "
        f"{[round(m, 2) for m in means]} non-increasing; sweep {elapsed:.2f} s"
    )


def _fixture_pool(questionnaire):
    pool = list(samples_from_questionnaire(questionnaire))
    AI, CS, SW, ADF = (
        "Artificial Intelligence",
        "Computer Structure",
        "Software",
        "Algorithm Designing",
    )
    pool += [
        TrainingSample((SW,), (SW,), (AI,), ("DB", "AI"), 2.0, "DB"),
        TrainingSample(("Hardware",), (AI,), (CS,), ("CN",), 6.0, "CN"),
        TrainingSample((SW, "Hardware"), (CS, ADF), (SW,), (), 3.0, "AD"),
        TrainingSample(("Hardware",), (SW,), (AI,), ("NS",), 5.0, "NS"),
    ]
    features = {(s.bsc, s.msc, s.phd, s.taught, s.experience) for s in pool}
    assert len(features) == len(pool)  # conflict-free by construction
    return pool


def test_induction_oracle_suite(questionnaire, schema):
    pool = _fixture_pool(questionnaire)
    checked_gains = 0
    checked_trees = 0
    for size in range(1, 9):
        for subset in itertools.combinations(pool, size):
            subset = list(subset)
            for split in _candidate_splits(subset, ALL_NOMINALS):
                assert information_gain(subset, split) == pytest.approx(
                    oracle_gain(subset, split), abs=1e-9
                )
                assert oracle_gain(subset, split) >= -1e-12
                checked_gains += 1
            tree = build_id3(subset, schema, "e1")
            assert tree == build_id3(subset, schema, "e1")
            for sample in subset:
                assert classify_sample(tree, sample) == sample.label
            checked_trees += 1
    _pass(
        f"Induction oracle suite: {checked_gains} gains within 1e-9 of brute force, "
        f"{checked_trees} trees consistent and deterministic"
    )


def test_rule_extraction_properties():
    from facultas.rules import extract_rules

    for seed in range(100):
        rng = random.Random(seed)
        schema = random_schema(rng)
        q = random_questionnaire(schema, rng)
        tree = tree_from_questionnaire(q, schema)
        ruleset = extract_rules(tree)
        assert len(ruleset.rules) == len(leaves(tree))
        for sample in samples_from_questionnaire(q):
            matching = [r for r in ruleset.rules if rule_matches_sample(r, sample)]
            assert [r.consequent for r in matching] == [sample.label]

    for seed in range(100):
        rng = random.Random(1000 + seed)
        schema = random_schema(rng)
        ruleset = rules_from_questionnaire(random_questionnaire(schema, rng))
        duplicated = _duplicated_ruleset(ruleset, rng)
        for _ in range(3):
            candidate = random_candidate(schema, rng)
            assert (
                course_scores(duplicated, candidate, schema).course_scores
                == course_scores(ruleset, candidate, schema).course_scores
            )
    _pass(
        "Rule extraction: |rules| = |leaves| and one-full-match on 100 trees; "
        "duplication equivalence on 100 rule sets"
    )


def test_weighting_properties(table1_kb, worked_candidate):
    cfg = table1_kb.weight_config
    assert expert_weight(cfg.peak, cfg) == 1.0
    rng = random.Random(7)
    for _ in range(200):
        x = rng.uniform(0, cfg.threshold - 1e-9)
        assert expert_weight(x, cfg) == cfg.floor

    for case in range(200):
        case_rng = random.Random(case)
        catalog = tuple(f"C{i}" for i in range(case_rng.randint(2, 6)))
        weighted = {c: case_rng.randint(0, 9) * case_rng.choice([0.1, 0.5, 1.0]) for c in catalog}
        fractions = {c: case_rng.randint(0, 10) / 10 for c in catalog}
        factor = case_rng.choice([0.25, 0.5, 2.0, 4.0, 8.0])
        scaled = {c: weighted[c] * factor for c in catalog}
        assert pick_course(catalog, weighted, fractions) == pick_course(
            catalog, scaled, fractions
        )

    ruleset = rules_from_questionnaire(table1_kb.experts[0].questionnaire)
    profile = ExpertProfile("e1", {"AD": 2, "DB": 2, "NS": 2, "CN": 2, "AI": 15})
    outcome = recommend_weighted(ruleset, profile, worked_candidate, cfg, table1_kb.schema)
    assert outcome.course == "AI"
    _pass(
        "Weighting: peak weight 1.0, exact floor below threshold, 200 scale-invariant "
        "cases, trust-in-AI flip resolves to AI"
    )


def test_voting_properties():
    catalog = ("DB", "NS", "AI", "CN", "AD")
    majority = majority_vote([vote("a", "AD"), vote("b", "AD"), vote("c", "DB")], catalog)
    assert majority.final == "AD"

    unanimous = majority_vote([vote(f"e{i}", "CN") for i in range(5)], catalog)
    assert unanimous.final == "CN"

    votes = [
        vote("a", "AD", {"AD": 2.0}),
        vote("b", "DB", {"DB": 1.5}),
        vote("c", "AD", {"AD": 0.5}),
        vote("d", "NS", {"NS": 4.0}),
    ]
    rng = random.Random(3)
    baseline = majority_vote(votes, catalog).final
    for _ in range(20):
        rng.shuffle(votes)
        assert majority_vote(votes, catalog).final == baseline
    doubled = votes + [
        vote(v.expert_id + "'", v.recommended, dict(v.weighted_scores)) for v in votes
    ]
    assert majority_vote(doubled, catalog).final == baseline

    assert majority_vote([vote("a", None), vote("b", None)], catalog).final is None
    _pass(
        "Voting: unanimity, permutation invariance, duplication robustness, "
        "{AD,AD,DB} majority, all-abstain gives none"
    )


def test_cli_end_to_end(tmp_path, table1_raw):
    runner = CliRunner()
    args = ["recommend", str(KB_PATH), str(APPLICANT_CSV), "--explain"]
    first = runner.invoke(cli_main, args)
    second = runner.invoke(cli_main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout
    assert first.stdout.startswith("a1 -> AD\n")

    ok = runner.invoke(cli_main, ["validate", str(KB_PATH)])
    assert ok.exit_code == 0

    import json

    broken = json.loads(json.dumps(table1_raw))
    broken["experts"] = []
    broken_path = tmp_path / "broken.json"
    broken_path.write_text(json.dumps(broken))
    invalid = runner.invoke(cli_main, ["validate", str(broken_path)])
    assert invalid.exit_code == 1
    assert "experts: empty" in invalid.stdout

    usage = runner.invoke(cli_main, ["validate", str(KB_PATH), "--no-such-flag"])
    assert usage.exit_code == 2
    _pass(
        "CLI: recommend --explain byte-identical across runs; validate exit codes "
        "follow the 0/1/2 contract"
    )
