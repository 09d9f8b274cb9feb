"""Accuracy evaluation and a synthetic faculty generator for experiments.

Accuracy is the share of candidates whose recommended course equals the
course they verifiably teach well, reported as a percentage truncated (not
rounded) to two decimals; report averages use the same convention. The
generator draws a hidden ground-truth questionnaire and emits candidates
that just qualify for their labeled course, optionally perturbed to inject
label noise.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, SchemaMismatch
from .rules import recommend_unweighted, rules_from_questionnaire
from .schema import (
    CANDIDATE_CSV_HEADER,
    CandidateProfile,
    ExpertEntry,
    ExpertProfile,
    FacultySchema,
    KnowledgeBaseDoc,
    Questionnaire,
    QuestionnaireRow,
    _candidate_csv_row,
    _match_value,
    parse_candidate,
)
from .voting import compile_rule_sets, recommend_candidate

DATASET_CSV_HEADER = CANDIDATE_CSV_HEADER + ("true_course",)


@dataclass(frozen=True)
class LabeledDataset:
    schema: FacultySchema
    samples: tuple[tuple[CandidateProfile, str], ...]


def accuracy_hundredths(n_correct: int, n_total: int) -> int:
    """Accuracy as integer hundredths of a percent, truncated.

    Integer arithmetic keeps the truncation exact: 26/30 gives 8666, i.e.
    86.66 percent.
    """
    if n_total <= 0:
        raise ValueError("n_total must be > 0")
    if not 0 <= n_correct <= n_total:
        raise ValueError("n_correct must be between 0 and n_total")
    return (10000 * n_correct) // n_total


def accuracy(n_correct: int, n_total: int) -> float:
    """Percentage of correct recommendations, truncated to two decimals."""
    return accuracy_hundredths(n_correct, n_total) / 100.0


@dataclass(frozen=True)
class FacultyResult:
    faculty_name: str
    n_correct: int
    n_total: int
    confusion: dict[tuple[str, str | None], int]

    @property
    def accuracy(self) -> float:
        return accuracy(self.n_correct, self.n_total)

    def to_json(self) -> dict:
        confusion = [
            {"true": t, "predicted": p, "count": self.confusion[(t, p)]}
            for t, p in sorted(self.confusion, key=lambda k: (k[0], k[1] or ""))
        ]
        return {
            "faculty": self.faculty_name,
            "n_correct": self.n_correct,
            "n_total": self.n_total,
            "accuracy": self.accuracy,
            "confusion": confusion,
        }


@dataclass(frozen=True)
class EvalReport:
    results: tuple[FacultyResult, ...]

    @property
    def average(self) -> float:
        hundredths = [accuracy_hundredths(r.n_correct, r.n_total) for r in self.results]
        return (sum(hundredths) // len(hundredths)) / 100.0

    def to_json(self) -> dict:
        return {
            "faculties": [r.to_json() for r in self.results],
            "average": self.average,
        }

    def render(self) -> str:
        lines = [f"{'Faculty':<32}{'N_r':>6}{'N_total':>9}{'Accuracy':>10}"]
        for r in self.results:
            lines.append(
                f"{r.faculty_name:<32}{r.n_correct:>6}{r.n_total:>9}{r.accuracy:>10.2f}"
            )
        lines.append(f"{'Average':<32}{'':>6}{'':>9}{self.average:>10.2f}")
        return "\n".join(lines)


def evaluate(kb: KnowledgeBaseDoc, dataset: LabeledDataset) -> FacultyResult:
    """Run every sample through the full pipeline and count exact matches.

    A sample with no recommendation counts as incorrect.
    """
    if dataset.schema != kb.schema:
        raise SchemaMismatch(
            f"dataset schema {dataset.schema.faculty_name!r} does not match "
            f"KB schema {kb.schema.faculty_name!r}"
        )
    rule_sets = compile_rule_sets(kb)
    correct = 0
    confusion: dict[tuple[str, str | None], int] = {}
    for candidate, label in dataset.samples:
        predicted = recommend_candidate(kb, candidate, rule_sets=rule_sets).final
        confusion[(label, predicted)] = confusion.get((label, predicted), 0) + 1
        if predicted == label:
            correct += 1
    return FacultyResult(kb.schema.faculty_name, correct, len(dataset.samples), confusion)


def _draw_questionnaire(schema: FacultySchema, rng: random.Random) -> Questionnaire:
    rows = []
    exp_cap = max(1, min(8, int(schema.experience_max)))
    for course in schema.courses:
        msc_k = 2 if len(schema.msc_domain) > 1 and rng.random() < 0.3 else 1
        msc_req = set(rng.sample(schema.msc_domain, msc_k))
        taught = {course}
        if len(schema.courses) > 1 and rng.random() < 0.3:
            taught.add(rng.choice([c for c in schema.courses if c != course]))
        rows.append(
            QuestionnaireRow(
                course=course,
                bsc_req=(rng.choice(schema.bsc_domain),),
                msc_req=tuple(v for v in schema.msc_domain if v in msc_req),
                phd_req=(rng.choice(schema.phd_domain),),
                required_taught=tuple(c for c in schema.courses if c in taught),
                min_experience=float(rng.randint(1, exp_cap)),
            )
        )
    return Questionnaire("synth", tuple(rows))


def _qualifying_candidate(
    row: QuestionnaireRow, schema: FacultySchema, rng: random.Random, candidate_id: str
) -> CandidateProfile:
    slack = rng.randint(0, 2)
    return CandidateProfile(
        candidate_id=candidate_id,
        bsc=rng.choice(row.bsc_req),
        msc=rng.choice(row.msc_req),
        phd=rng.choice(row.phd_req),
        taught=row.required_taught,
        experience=min(row.min_experience + slack, schema.experience_max),
    )


def _perturb(
    candidate: CandidateProfile,
    row: QuestionnaireRow,
    schema: FacultySchema,
    rng: random.Random,
) -> CandidateProfile:
    """Break the candidate's fit: flip a degree, cut experience, prune taught."""
    degrees = {"bsc": candidate.bsc, "msc": candidate.msc, "phd": candidate.phd}
    flippable = [
        attr
        for attr in ("bsc", "msc", "phd")
        if set(schema.domain_for(attr)) - set(row.requirement_for(attr))
    ]
    if flippable:
        attr = rng.choice(flippable)
        outside = [v for v in schema.domain_for(attr) if v not in row.requirement_for(attr)]
        degrees[attr] = rng.choice(outside)

    experience = candidate.experience
    if row.min_experience > 0:
        experience = max(0.0, row.min_experience - 1 - rng.randint(0, 2))

    taught = candidate.taught
    if taught:
        dropped = rng.choice(taught)
        taught = tuple(c for c in taught if c != dropped)

    return CandidateProfile(
        candidate_id=candidate.candidate_id,
        bsc=degrees["bsc"],
        msc=degrees["msc"],
        phd=degrees["phd"],
        taught=taught,
        experience=experience,
    )


def synth_generate(
    schema: FacultySchema, n: int, noise: float, seed: int
) -> tuple[LabeledDataset, Questionnaire]:
    """Draw a hidden questionnaire and emit `n` labeled candidates.

    Clean candidates are verified to actually win their label under the
    implied rules (a redraw handles the rare colliding questionnaire), so a
    noise-0 dataset always evaluates to 100.00 against the returned
    questionnaire. With probability `noise` a candidate is perturbed away
    from its row instead. Deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= noise <= 1:
        raise ValueError("noise must be within [0, 1]")
    rng = random.Random(seed)

    for _ in range(64):
        questionnaire = _draw_questionnaire(schema, rng)
        ruleset = rules_from_questionnaire(questionnaire)
        samples: list[tuple[CandidateProfile, str]] = []
        redraw = False
        for k in range(n):
            label = schema.courses[k % len(schema.courses)]
            row = questionnaire.row_for(label)
            candidate = None
            for _attempt in range(8):
                trial = _qualifying_candidate(row, schema, rng, f"c{k:03d}")
                if recommend_unweighted(ruleset, trial, schema)[0] == label:
                    candidate = trial
                    break
            if candidate is None:
                redraw = True
                break
            if rng.random() < noise:
                candidate = _perturb(candidate, row, schema, rng)
            samples.append((candidate, label))
        if not redraw:
            return LabeledDataset(schema, tuple(samples)), questionnaire
    raise RuntimeError("could not draw a collision-free questionnaire for this schema")


def synthetic_kb(
    schema: FacultySchema,
    questionnaire: Questionnaire,
    n_experts: int = 1,
    rule_mode: str = "direct",
) -> KnowledgeBaseDoc:
    """KB with `n_experts` copies of one questionnaire.

    Each expert gets a uniform per-course experience (constant weight per
    expert), so the panel agrees with the plain unweighted recommendation.
    """
    experts = []
    for k in range(n_experts):
        expert_id = f"e{k + 1}"
        q = Questionnaire(expert_id, questionnaire.rows)
        years = 8.0 + 2.0 * k
        profile = ExpertProfile(expert_id, {c: years for c in schema.courses})
        experts.append(ExpertEntry(q, profile))
    return KnowledgeBaseDoc(schema=schema, experts=tuple(experts))


def write_dataset_csv(dataset: LabeledDataset, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(DATASET_CSV_HEADER)
        for candidate, label in dataset.samples:
            writer.writerow(_candidate_csv_row(candidate) + [label])


def load_dataset(path: str | Path, schema: FacultySchema) -> LabeledDataset:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = [h for h in DATASET_CSV_HEADER if h not in (reader.fieldnames or [])]
        if missing:
            raise ParseError(f"{path}: missing CSV columns {missing}")
        samples = []
        problems: list[str] = []
        for line, record in enumerate(reader, start=2):
            label = _match_value(record.get("true_course"), schema.courses)
            if label is None:
                problems.append(f"{path}:{line}: unknown true_course {record.get('true_course')!r}")
            try:
                candidate = parse_candidate(record, schema)
            except ParseError as exc:
                problems.extend(f"{path}:{line}: {p}" for p in exc.problems)
                continue
            if label is not None:
                samples.append((candidate, label))
        if problems:
            raise ParseError(problems)
    return LabeledDataset(schema, tuple(samples))


def dataset_to_json(dataset: LabeledDataset) -> list[dict]:
    return [
        {**candidate.to_json(), "true_course": label}
        for candidate, label in dataset.samples
    ]
