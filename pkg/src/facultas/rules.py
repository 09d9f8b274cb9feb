"""Rule sets and partial-match inference.

A rule is a conjunction of antecedents over the candidate attributes with a
course as consequent. Candidates rarely satisfy every antecedent, so each
rule is scored by the number of antecedents it satisfies (its firing score)
and each course gets the maximum score among the rules recommending it.

Rule sets come from two sources: ``direct`` mode turns every questionnaire
row into one rule carrying all of its requirements; ``tree`` mode extracts
one rule per leaf of the induced decision tree, antecedents being the tests
along the root-to-leaf path (false sides of binary tests become negated
antecedents).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from .induction import (
    ATTRIBUTE_ORDER,
    Branch,
    DecisionNode,
    DecisionTree,
    Leaf,
    NominalSplit,
    SetSplit,
    TrainingSample,
)
from .schema import CandidateProfile, FacultySchema, Questionnaire, _num

NOMINAL_IN = "nominal_in"
SET_CONTAINS_ALL = "set_contains_all"
NUMERIC_GE = "numeric_ge"


@dataclass(frozen=True)
class Predicate:
    """One antecedent: a test on a single candidate attribute."""

    attribute: str
    kind: str
    values: tuple[str, ...] = ()
    courses: tuple[str, ...] = ()
    threshold: float = 0.0
    negated: bool = False

    def describe(self) -> str:
        if self.kind == NOMINAL_IN:
            base = f"{self.attribute} = {' or '.join(self.values)}"
        elif self.kind == SET_CONTAINS_ALL:
            base = f"taught includes {'+'.join(self.courses)}"
        else:
            base = f"experience >= {self.threshold:g}"
        return f"not ({base})" if self.negated else base

    def holds_for(self, candidate: CandidateProfile) -> bool:
        """Evaluate against a candidate; an absent degree never satisfies."""
        if self.kind == NOMINAL_IN:
            value = candidate.degree(self.attribute)
            if value is None:
                return False
            result = value in self.values
        elif self.kind == SET_CONTAINS_ALL:
            result = set(self.courses) <= set(candidate.taught)
        else:
            result = candidate.experience >= self.threshold
        return result != self.negated

    def holds_for_sample(self, sample: TrainingSample) -> bool:
        """Evaluate against a training row, mirroring induction's routing."""
        if self.kind == NOMINAL_IN:
            result = set(sample.nominal(self.attribute)) == set(self.values)
        elif self.kind == SET_CONTAINS_ALL:
            result = set(self.courses) <= set(sample.taught)
        else:
            result = sample.experience >= self.threshold
        return result != self.negated

    def to_json(self) -> dict:
        out: dict = {"attribute": self.attribute, "kind": self.kind, "negated": self.negated}
        if self.kind == NOMINAL_IN:
            out["values"] = list(self.values)
        elif self.kind == SET_CONTAINS_ALL:
            out["courses"] = list(self.courses)
        else:
            out["threshold"] = _num(self.threshold)
        return out


def predicate_from_json(raw: dict) -> Predicate:
    return Predicate(
        attribute=raw["attribute"],
        kind=raw["kind"],
        values=tuple(raw.get("values", ())),
        courses=tuple(raw.get("courses", ())),
        threshold=float(raw.get("threshold", 0.0)),
        negated=bool(raw.get("negated", False)),
    )


@dataclass(frozen=True)
class Rule:
    rule_id: str
    antecedents: tuple[Predicate, ...]
    consequent: str
    expert_id: str = ""

    def to_json(self) -> dict:
        return {
            "rule_id": self.rule_id,
            "expert_id": self.expert_id,
            "consequent": self.consequent,
            "antecedents": [p.to_json() for p in self.antecedents],
        }


@dataclass(frozen=True)
class RuleSet:
    expert_id: str
    rules: tuple[Rule, ...]

    def to_json(self) -> dict:
        return {"expert_id": self.expert_id, "rules": [r.to_json() for r in self.rules]}


def rule_set_from_json(raw: dict) -> RuleSet:
    rules = tuple(
        Rule(
            rule_id=r["rule_id"],
            antecedents=tuple(predicate_from_json(p) for p in r["antecedents"]),
            consequent=r["consequent"],
            expert_id=r.get("expert_id", raw.get("expert_id", "")),
        )
        for r in raw["rules"]
    )
    return RuleSet(expert_id=raw.get("expert_id", ""), rules=rules)


@dataclass(frozen=True)
class AntecedentTrace:
    description: str
    satisfied: bool

    def to_json(self) -> dict:
        return {"description": self.description, "satisfied": self.satisfied}


@dataclass(frozen=True)
class RuleTrace:
    """Satisfaction flags of one rule for one candidate.

    Flags and shared description tuples keep bulk scoring cheap; the
    antecedent objects materialize only when an explanation is rendered.
    """

    rule_id: str
    consequent: str
    descriptions: tuple[str, ...]
    flags: tuple[bool, ...]
    score: int

    @property
    def antecedents(self) -> tuple[AntecedentTrace, ...]:
        return tuple(
            AntecedentTrace(d, f) for d, f in zip(self.descriptions, self.flags)
        )

    @property
    def antecedent_count(self) -> int:
        return len(self.flags)

    @property
    def satisfied_fraction(self) -> float:
        return self.score / len(self.flags) if self.flags else 0.0

    def to_json(self) -> dict:
        return {
            "rule_id": self.rule_id,
            "consequent": self.consequent,
            "score": self.score,
            "antecedent_count": self.antecedent_count,
            "antecedents": [a.to_json() for a in self.antecedents],
        }


@dataclass(frozen=True)
class FiringReport:
    """Per-rule satisfaction trace plus the max score per catalog course."""

    expert_id: str
    rules: tuple[RuleTrace, ...]
    course_scores: dict[str, int]
    best_fraction: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "expert_id": self.expert_id,
            "rules": [r.to_json() for r in self.rules],
            "course_scores": dict(self.course_scores),
        }


def rules_from_questionnaire(q: Questionnaire) -> RuleSet:
    """One rule per row: every requirement becomes one antecedent.

    Rows with no required taught courses simply omit that antecedent, so
    rule numbering follows the row order of the questionnaire.
    """
    rules = []
    for i, row in enumerate(q.rows, start=1):
        antecedents = [
            Predicate("bsc", NOMINAL_IN, values=row.bsc_req),
            Predicate("msc", NOMINAL_IN, values=row.msc_req),
            Predicate("phd", NOMINAL_IN, values=row.phd_req),
        ]
        if row.required_taught:
            antecedents.append(Predicate("taught", SET_CONTAINS_ALL, courses=row.required_taught))
        antecedents.append(Predicate("experience", NUMERIC_GE, threshold=row.min_experience))
        rules.append(Rule(f"r{i}", tuple(antecedents), row.course, q.expert_id))
    return RuleSet(q.expert_id, tuple(rules))


def _merge_path(path: Sequence[Predicate]) -> tuple[Predicate, ...]:
    """Collapse repeated tests on one attribute where conjunction allows it."""
    merged: list[Predicate] = []
    ge_pos: Predicate | None = None
    ge_neg: Predicate | None = None
    contains_pos: Predicate | None = None
    for pred in path:
        if pred.kind == NUMERIC_GE and not pred.negated:
            if ge_pos is None or pred.threshold > ge_pos.threshold:
                ge_pos = pred
        elif pred.kind == NUMERIC_GE:
            if ge_neg is None or pred.threshold < ge_neg.threshold:
                ge_neg = pred
        elif pred.kind == SET_CONTAINS_ALL and not pred.negated:
            if contains_pos is None:
                contains_pos = pred
            else:
                courses = tuple(sorted(set(contains_pos.courses) | set(pred.courses)))
                contains_pos = replace(contains_pos, courses=courses)
        else:
            if pred not in merged:
                merged.append(pred)
    merged.extend(p for p in (contains_pos, ge_pos, ge_neg) if p is not None)
    merged.sort(key=lambda p: (ATTRIBUTE_ORDER.index(p.attribute), p.negated, p.describe()))
    return tuple(merged)


def _branch_predicate(node: DecisionNode, branch: Branch) -> Predicate:
    split = node.split
    if isinstance(split, NominalSplit):
        return Predicate(split.attribute, NOMINAL_IN, values=tuple(branch.outcome))
    if isinstance(split, SetSplit):
        return Predicate("taught", SET_CONTAINS_ALL, courses=split.required, negated=not branch.outcome)
    return Predicate("experience", NUMERIC_GE, threshold=split.threshold, negated=not branch.outcome)


def extract_rules(tree: DecisionTree) -> RuleSet:
    """One rule per leaf; antecedents are the tests along the path to it."""
    rules: list[Rule] = []

    def walk(node, path: list[Predicate]) -> None:
        if isinstance(node, Leaf):
            rules.append(
                Rule(f"r{len(rules) + 1}", _merge_path(path), node.label, tree.expert_id)
            )
            return
        for branch in node.branches:
            walk(branch.child, path + [_branch_predicate(node, branch)])

    walk(tree.root, [])
    return RuleSet(tree.expert_id, tuple(rules))


def firing_score(rule: Rule, candidate: CandidateProfile) -> int:
    """Count of the rule's antecedents the candidate satisfies."""
    return sum(1 for p in rule.antecedents if p.holds_for(candidate))


def rule_matches_sample(rule: Rule, sample: TrainingSample) -> bool:
    """True when a training row satisfies every antecedent of the rule."""
    return all(p.holds_for_sample(sample) for p in rule.antecedents)


def _rule_descriptions(rule: Rule) -> tuple[str, ...]:
    # memoized on the instance: rule sets are compiled once and reused
    cached = rule.__dict__.get("_descriptions")
    if cached is None:
        cached = tuple(p.describe() for p in rule.antecedents)
        object.__setattr__(rule, "_descriptions", cached)
    return cached


def _trace_rule(rule: Rule, candidate: CandidateProfile) -> RuleTrace:
    flags = tuple(p.holds_for(candidate) for p in rule.antecedents)
    return RuleTrace(
        rule.rule_id, rule.consequent, _rule_descriptions(rule), flags, sum(flags)
    )


def course_scores(rules: RuleSet, candidate: CandidateProfile, schema: FacultySchema) -> FiringReport:
    """Score every rule and take, per course, the best score among its rules.

    Courses no rule recommends score 0. ``best_fraction`` keeps, per course,
    the highest satisfied fraction among the rules attaining its best score;
    the recommendation tie-break uses it.
    """
    traces = tuple(_trace_rule(rule, candidate) for rule in rules.rules)
    scores = {course: 0 for course in schema.courses}
    fractions = {course: 0.0 for course in schema.courses}
    for trace in traces:
        if trace.score > scores[trace.consequent]:
            scores[trace.consequent] = trace.score
            fractions[trace.consequent] = trace.satisfied_fraction
        elif trace.score == scores[trace.consequent]:
            fractions[trace.consequent] = max(
                fractions[trace.consequent], trace.satisfied_fraction
            )
    return FiringReport(rules.expert_id, traces, scores, fractions)


def pick_course(
    catalog: Sequence[str],
    scores: dict[str, float],
    fractions: dict[str, float],
) -> str | None:
    """Shared argmax with the normative tie-break chain.

    Highest score wins; ties fall to the highest satisfied fraction, then to
    catalog order. An all-zero score vector yields no recommendation.
    """
    best_key = None
    best_course = None
    for idx, course in enumerate(catalog):
        score = scores.get(course, 0)
        if score <= 0:
            continue
        key = (score, fractions.get(course, 0.0), -idx)
        if best_key is None or key > best_key:
            best_key, best_course = key, course
    return best_course


def recommend_unweighted(
    rules: RuleSet, candidate: CandidateProfile, schema: FacultySchema
) -> tuple[str | None, FiringReport]:
    """Best course by raw firing score, or None when nothing fires at all."""
    report = course_scores(rules, candidate, schema)
    course = pick_course(schema.courses, report.course_scores, report.best_fraction)
    return course, report
