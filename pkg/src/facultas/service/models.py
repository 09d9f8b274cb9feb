"""Pydantic request/response bodies for the HTTP service.

Response models mirror the engine's own JSON payloads one to one, so the
CLI's --json output and the service bodies stay interchangeable.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class CandidateBody(BaseModel):
    candidate_id: str
    bsc: str
    msc: str | None = None
    phd: str | None = None
    taught: list[str] = Field(default_factory=list)
    experience: float


class WeightConfigBody(BaseModel):
    threshold: float
    floor: float
    peak: float
    spread: float


class WhatIfBody(BaseModel):
    candidate: CandidateBody
    weight_config: WeightConfigBody


class AssignBody(BaseModel):
    course: str
    candidates: list[CandidateBody]


class AntecedentOut(BaseModel):
    description: str
    satisfied: bool


class RuleTraceOut(BaseModel):
    rule_id: str
    consequent: str
    score: int
    antecedent_count: int
    antecedents: list[AntecedentOut]


class FiringOut(BaseModel):
    expert_id: str
    rules: list[RuleTraceOut]
    course_scores: dict[str, int]


class VoteOut(BaseModel):
    expert_id: str
    recommended: str | None
    weighted_scores: dict[str, float]
    weights: dict[str, float]
    firing: FiringOut


class RecommendationOut(BaseModel):
    candidate_id: str
    final: str | None
    vote_counts: dict[str, int]
    tie_break: str | None
    votes: list[VoteOut]


class StandingOut(BaseModel):
    candidate_id: str
    votes_for_course: int
    summed_weighted_score: float


class AssignOut(BaseModel):
    course: str
    selected: str | None
    candidates: list[StandingOut]


class HealthOut(BaseModel):
    status: str
    revision: int


class PutKbOut(BaseModel):
    revision: int
