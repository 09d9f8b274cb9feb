"""Expert opinion weighting by relevant teaching experience.

An expert who has barely taught a course gets the floor weight for it; from
the threshold upward the weight follows a Gaussian bump, so very old
experience is discounted again instead of being trusted forever.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rules import FiringReport, RuleSet, course_scores, pick_course
from .schema import CandidateProfile, ExpertProfile, FacultySchema, WeightFunctionConfig


def expert_weight(experience: float, cfg: WeightFunctionConfig) -> float:
    """Weight in (0, 1] for an opinion backed by `experience` units of teaching.

    Below the threshold the weight is pinned to the configured floor;
    above it the Gaussian is NOT clamped to the floor, so stale expertise
    far past the peak can legitimately fall below it.
    """
    if experience < 0:
        raise ValueError("experience must be >= 0")
    if experience < cfg.threshold:
        return cfg.floor
    return math.exp(-((experience - cfg.peak) ** 2) / (2 * cfg.spread**2))


def course_weights(
    profile: ExpertProfile, schema: FacultySchema, cfg: WeightFunctionConfig
) -> dict[str, float]:
    return {
        course: expert_weight(profile.experience_for(course), cfg)
        for course in schema.courses
    }


@dataclass(frozen=True)
class WeightedOutcome:
    """One expert's weighted verdict for one candidate."""

    expert_id: str
    course: str | None
    weighted_scores: dict[str, float]
    weights: dict[str, float]
    report: FiringReport


def recommend_weighted(
    rules: RuleSet,
    profile: ExpertProfile,
    candidate: CandidateProfile,
    cfg: WeightFunctionConfig,
    schema: FacultySchema,
) -> WeightedOutcome:
    """Score courses as best-firing-score times the expert's course weight.

    The argmax uses the same tie-break chain as the unweighted path
    (satisfied fraction, then catalog order); an all-zero weighted vector
    yields no recommendation.
    """
    if profile.expert_id != rules.expert_id:
        raise ValueError(
            f"profile {profile.expert_id!r} does not match rule set {rules.expert_id!r}"
        )
    report = course_scores(rules, candidate, schema)
    weights = course_weights(profile, schema, cfg)
    weighted = {c: report.course_scores[c] * weights[c] for c in schema.courses}
    course = pick_course(schema.courses, weighted, report.best_fraction)
    return WeightedOutcome(profile.expert_id, course, weighted, weights, report)
