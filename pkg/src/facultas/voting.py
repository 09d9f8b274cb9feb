"""Combining per-expert verdicts: majority voting and per-course selection.

Each expert's weighted recommendation counts as one vote; the course with
the most votes wins. Ties fall to the largest sum of weighted scores for the
tied courses across all experts, then to catalog order. The dual action
picks, for a given course, the candidate recommended for it by the most
experts.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .induction import tree_from_questionnaire
from .rules import FiringReport, RuleSet, extract_rules, rules_from_questionnaire
from .schema import (
    CandidateProfile,
    ExpertProfile,
    KnowledgeBaseDoc,
    WeightFunctionConfig,
    _num,
)
from .weighting import WeightedOutcome, recommend_weighted

TIE_UNANIMOUS = "unanimous"
TIE_MAJORITY = "majority"
TIE_WEIGHTED_SCORE = "weighted-score"
TIE_CATALOG = "catalog"

# Floor 1.0 pins every weight to exactly 1, whatever the experience.
_UNIT_WEIGHTS = WeightFunctionConfig(threshold=math.inf, floor=1.0, peak=math.inf, spread=1.0)


@dataclass(frozen=True)
class ExpertVote:
    expert_id: str
    recommended: str | None
    weighted_scores: dict[str, float]
    weights: dict[str, float]
    firing: FiringReport

    def to_json(self) -> dict:
        return {
            "expert_id": self.expert_id,
            "recommended": self.recommended,
            "weighted_scores": dict(self.weighted_scores),
            "weights": dict(self.weights),
            "firing": self.firing.to_json(),
        }


@dataclass(frozen=True)
class FinalRecommendation:
    candidate_id: str
    final: str | None
    vote_counts: dict[str, int]
    tie_break: str | None
    votes: tuple[ExpertVote, ...]

    def to_json(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "final": self.final,
            "vote_counts": dict(self.vote_counts),
            "tie_break": self.tie_break,
            "votes": [v.to_json() for v in self.votes],
        }


def majority_vote(
    votes: Sequence[ExpertVote], catalog: Sequence[str], candidate_id: str = ""
) -> FinalRecommendation:
    """Pick the course recommended by the most experts.

    Experts with nothing to recommend abstain rather than veto. Count ties
    fall to the largest total weighted score over all experts, then to
    catalog order; if every expert abstained there is no recommendation.
    """
    if not votes:
        raise ValueError("majority_vote needs at least one vote")
    counts = Counter(v.recommended for v in votes if v.recommended is not None)
    ordered_counts = {c: counts[c] for c in catalog if c in counts}
    if not counts:
        return FinalRecommendation(candidate_id, None, {}, None, tuple(votes))

    top = max(counts.values())
    tied = [c for c in catalog if counts.get(c) == top]
    if len(tied) == 1:
        note = TIE_UNANIMOUS if len(counts) == 1 else TIE_MAJORITY
        return FinalRecommendation(candidate_id, tied[0], ordered_counts, note, tuple(votes))

    sums = {c: sum(v.weighted_scores.get(c, 0.0) for v in votes) for c in tied}
    best = max(sums.values())
    by_score = [c for c in tied if sums[c] == best]
    note = TIE_WEIGHTED_SCORE if len(by_score) == 1 else TIE_CATALOG
    return FinalRecommendation(candidate_id, by_score[0], ordered_counts, note, tuple(votes))


def compile_rule_sets(kb: KnowledgeBaseDoc) -> list[RuleSet]:
    """Derive each expert's rule set according to the KB's rule mode."""
    out = []
    for entry in kb.experts:
        if kb.rule_mode == "tree":
            tree = tree_from_questionnaire(entry.questionnaire, kb.schema)
            out.append(extract_rules(tree))
        else:
            out.append(rules_from_questionnaire(entry.questionnaire))
    return out


def _vote(outcome: WeightedOutcome) -> ExpertVote:
    return ExpertVote(
        expert_id=outcome.expert_id,
        recommended=outcome.course,
        weighted_scores={c: _num(round(s, 12)) for c, s in outcome.weighted_scores.items()},
        weights={c: _num(round(w, 12)) for c, w in outcome.weights.items()},
        firing=outcome.report,
    )


def recommend_candidate(
    kb: KnowledgeBaseDoc,
    candidate: CandidateProfile,
    use_weights: bool = True,
    rule_sets: Sequence[RuleSet] | None = None,
) -> FinalRecommendation:
    """Full pipeline: per-expert firing scores, weighting, then the vote.

    ``rule_sets`` lets callers reuse compiled rules across many candidates;
    with ``use_weights`` off every course weight is 1, reproducing the plain
    max-firing-score recommendation per expert.
    """
    if rule_sets is None:
        rule_sets = compile_rule_sets(kb)
    votes = []
    for entry, rules in zip(kb.experts, rule_sets):
        if use_weights:
            outcome = recommend_weighted(rules, entry.profile, candidate, kb.weight_config, kb.schema)
        else:
            blank = ExpertProfile(expert_id=entry.profile.expert_id)
            outcome = recommend_weighted(rules, blank, candidate, _UNIT_WEIGHTS, kb.schema)
        votes.append(_vote(outcome))
    return majority_vote(votes, kb.schema.courses, candidate.candidate_id)


@dataclass(frozen=True)
class CandidateStanding:
    candidate_id: str
    votes_for_course: int
    summed_weighted_score: float

    def to_json(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "votes_for_course": self.votes_for_course,
            "summed_weighted_score": _num(round(self.summed_weighted_score, 12)),
        }


@dataclass(frozen=True)
class CourseSelection:
    course: str
    selected: str | None
    standings: tuple[CandidateStanding, ...]

    def to_json(self) -> dict:
        return {
            "course": self.course,
            "selected": self.selected,
            "candidates": [s.to_json() for s in self.standings],
        }


def select_instructor_for_course(
    kb: KnowledgeBaseDoc,
    course: str,
    candidates: Sequence[CandidateProfile],
    use_weights: bool = True,
) -> CourseSelection:
    """Pick the candidate recommended for the course by the most experts.

    Ties fall to the largest summed weighted score for the course, then to
    candidate id order; when no expert recommends the course for anyone,
    nobody is selected.
    """
    if course not in kb.schema.courses:
        raise ValueError(f"unknown course {course!r}")
    if not candidates:
        raise ValueError("select_instructor_for_course needs at least one candidate")
    rule_sets = compile_rule_sets(kb)
    standings = []
    for candidate in candidates:
        rec = recommend_candidate(kb, candidate, use_weights, rule_sets)
        votes = sum(1 for v in rec.votes if v.recommended == course)
        score = sum(v.weighted_scores.get(course, 0.0) for v in rec.votes)
        standings.append(CandidateStanding(candidate.candidate_id, votes, score))

    ranked = sorted(
        standings,
        key=lambda s: (-s.votes_for_course, -s.summed_weighted_score, s.candidate_id),
    )
    selected = ranked[0].candidate_id if ranked[0].votes_for_course > 0 else None
    return CourseSelection(course, selected, tuple(standings))
