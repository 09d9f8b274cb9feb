"""Faculty schema, questionnaires, candidates and the knowledge-base document.

Everything downstream (tree induction, rule firing, voting) trusts the
invariants enforced here: requirement values belong to the faculty's answer
domains, course references point into the catalog, and all value objects are
immutable after construction.

The knowledge base is persisted as a single JSON file with top-level keys
``schema``, ``experts``, ``weight_config`` and ``rule_mode``; candidates
travel as JSON arrays or CSV with the header
``candidate_id,bsc,msc,phd,taught,experience``.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .errors import ParseError

EXPERIENCE_UNITS = ("years", "semesters")
RULE_MODES = ("direct", "tree")

DEGREE_ATTRIBUTES = ("bsc", "msc", "phd")

#: Raw cell values (after trimming and case-folding) treated as "no degree".
ABSENT_MARKERS = frozenset({"", "null", "none", "-"})

CANDIDATE_CSV_HEADER = ("candidate_id", "bsc", "msc", "phd", "taught", "experience")

#: Environment variable naming a JSON file with default weight-function values.
CONFIG_ENV_VAR = "FACULTAS_CONFIG"


def canon(value: str) -> str:
    """Canonical key for hand-entered text: trimmed and case-folded."""
    return value.strip().casefold()


@dataclass(frozen=True)
class Violation:
    """One invariant violation, with a path to the offending field."""

    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


@dataclass(frozen=True)
class WeightFunctionConfig:
    """Parameters of the expert weighting curve.

    Below ``threshold`` the weight is pinned to ``floor``; from the threshold
    on it follows a Gaussian bump peaking at ``peak`` with width ``spread``.
    """

    threshold: float = 5.0
    floor: float = 0.1
    peak: float = 15.0
    spread: float = 10.0

    def to_json(self) -> dict:
        return {
            "threshold": _num(self.threshold),
            "floor": _num(self.floor),
            "peak": _num(self.peak),
            "spread": _num(self.spread),
        }


@dataclass(frozen=True)
class FacultySchema:
    """Answer domains and course catalog for one faculty."""

    faculty_name: str
    courses: tuple[str, ...]
    bsc_domain: tuple[str, ...]
    msc_domain: tuple[str, ...]
    phd_domain: tuple[str, ...]
    experience_unit: str = "years"
    experience_max: float = 40.0

    def domain_for(self, attribute: str) -> tuple[str, ...]:
        return {
            "bsc": self.bsc_domain,
            "msc": self.msc_domain,
            "phd": self.phd_domain,
        }[attribute]

    def course_index(self, course: str) -> int:
        return self.courses.index(course)

    def to_json(self) -> dict:
        return {
            "faculty_name": self.faculty_name,
            "courses": list(self.courses),
            "bsc_domain": list(self.bsc_domain),
            "msc_domain": list(self.msc_domain),
            "phd_domain": list(self.phd_domain),
            "experience_unit": self.experience_unit,
            "experience_max": _num(self.experience_max),
        }


@dataclass(frozen=True)
class QuestionnaireRow:
    """One expert's requirements for teaching one course.

    Degree requirements are disjunctions (any listed value qualifies);
    ``required_taught`` is a conjunction (all courses must have been taught).
    """

    course: str
    bsc_req: tuple[str, ...]
    msc_req: tuple[str, ...]
    phd_req: tuple[str, ...]
    required_taught: tuple[str, ...]
    min_experience: float

    def requirement_for(self, attribute: str) -> tuple[str, ...]:
        return {
            "bsc": self.bsc_req,
            "msc": self.msc_req,
            "phd": self.phd_req,
        }[attribute]

    def to_json(self) -> dict:
        return {
            "course": self.course,
            "bsc_req": list(self.bsc_req),
            "msc_req": list(self.msc_req),
            "phd_req": list(self.phd_req),
            "required_taught": list(self.required_taught),
            "min_experience": _num(self.min_experience),
        }


@dataclass(frozen=True)
class Questionnaire:
    expert_id: str
    rows: tuple[QuestionnaireRow, ...]

    def row_for(self, course: str) -> QuestionnaireRow:
        for row in self.rows:
            if row.course == course:
                return row
        raise KeyError(course)

    def to_json(self) -> dict:
        return {"expert_id": self.expert_id, "rows": [r.to_json() for r in self.rows]}


@dataclass(frozen=True)
class CandidateProfile:
    """Feature vector of one applicant: degrees, taught courses, experience."""

    candidate_id: str
    bsc: str
    msc: str | None
    phd: str | None
    taught: tuple[str, ...]
    experience: float

    def degree(self, attribute: str) -> str | None:
        return {"bsc": self.bsc, "msc": self.msc, "phd": self.phd}[attribute]

    def to_json(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "bsc": self.bsc,
            "msc": self.msc,
            "phd": self.phd,
            "taught": list(self.taught),
            "experience": _num(self.experience),
        }


@dataclass(frozen=True)
class ExpertProfile:
    """Per-course teaching experience of one expert; missing courses count 0."""

    expert_id: str
    per_course_experience: Mapping[str, float] = field(default_factory=dict)

    def experience_for(self, course: str) -> float:
        return float(self.per_course_experience.get(course, 0.0))

    def to_json(self, catalog: Sequence[str] = ()) -> dict:
        order = [c for c in catalog if c in self.per_course_experience]
        order += [c for c in self.per_course_experience if c not in order]
        return {
            "expert_id": self.expert_id,
            "per_course_experience": {c: _num(self.per_course_experience[c]) for c in order},
        }


@dataclass(frozen=True)
class ExpertEntry:
    questionnaire: Questionnaire
    profile: ExpertProfile

    def to_json(self, catalog: Sequence[str] = ()) -> dict:
        return {
            "questionnaire": self.questionnaire.to_json(),
            "profile": self.profile.to_json(catalog),
        }


@dataclass(frozen=True)
class KnowledgeBaseDoc:
    """The whole persisted knowledge base: schema plus every expert's input.

    ``compiled`` is an optional cache block written by ``facultas build``
    (serialized rule sets, and trees in tree mode). The engine always derives
    rules from the questionnaires, so a stale cache can mislead a reader but
    never a recommendation.
    """

    schema: FacultySchema
    experts: tuple[ExpertEntry, ...]
    weight_config: WeightFunctionConfig = WeightFunctionConfig()
    rule_mode: str = "direct"
    compiled: Mapping[str, Any] | None = None

    def to_json(self) -> dict:
        doc = {
            "schema": self.schema.to_json(),
            "experts": [e.to_json(self.schema.courses) for e in self.experts],
            "weight_config": self.weight_config.to_json(),
            "rule_mode": self.rule_mode,
        }
        if self.compiled is not None:
            doc["compiled"] = self.compiled
        return doc


def _num(x: float) -> int | float:
    """Emit integral floats as ints so serialized files stay tidy."""
    xf = float(x)
    return int(xf) if xf.is_integer() else xf


def _is_number(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


class _Check:
    """Collects violations while a raw document is walked."""

    def __init__(self) -> None:
        self.violations: list[Violation] = []

    def add(self, path: str, message: str) -> None:
        self.violations.append(Violation(path, message))


def _match_value(raw: Any, domain: Sequence[str]) -> str | None:
    """Resolve a hand-entered value to its canonical domain spelling."""
    if not isinstance(raw, str):
        return None
    key = canon(raw)
    for value in domain:
        if canon(value) == key:
            return value
    return None


def _string_list(raw: Any) -> list[str] | None:
    if isinstance(raw, (list, tuple)) and all(isinstance(v, str) for v in raw):
        return list(raw)
    return None


def _build_schema(raw: Any, check: _Check) -> FacultySchema | None:
    if not isinstance(raw, Mapping):
        check.add("schema", "must be an object")
        return None
    ok = True

    name = raw.get("faculty_name", "")
    if not isinstance(name, str):
        check.add("schema.faculty_name", "must be a string")
        name, ok = "", False

    courses = _string_list(raw.get("courses"))
    if courses is None or not courses:
        check.add("schema.courses", "must be a non-empty list of course ids")
        courses, ok = [], False
    else:
        courses = [c.strip() for c in courses]
        seen: set[str] = set()
        for i, c in enumerate(courses):
            if not c:
                check.add(f"schema.courses[{i}]", "empty course id")
                ok = False
            elif ";" in c or "," in c:
                check.add(f"schema.courses[{i}]", f"course id {c!r} may not contain ';' or ','")
                ok = False
            elif canon(c) in seen:
                check.add(f"schema.courses[{i}]", f"duplicate course id {c!r}")
                ok = False
            seen.add(canon(c))

    domains: dict[str, list[str]] = {}
    for attr in DEGREE_ATTRIBUTES:
        key = f"{attr}_domain"
        values = _string_list(raw.get(key))
        if values is None or not values:
            check.add(f"schema.{key}", "must be a non-empty list of values")
            values, ok = [], False
        else:
            values = [v.strip() for v in values]
            seen = set()
            for i, v in enumerate(values):
                if not v:
                    check.add(f"schema.{key}[{i}]", "empty value")
                    ok = False
                elif canon(v) in seen:
                    check.add(f"schema.{key}[{i}]", f"duplicate value {v!r}")
                    ok = False
                seen.add(canon(v))
        domains[attr] = values

    unit = raw.get("experience_unit", "years")
    if unit not in EXPERIENCE_UNITS:
        check.add("schema.experience_unit", f"must be one of {list(EXPERIENCE_UNITS)}")
        unit, ok = "years", False

    exp_max = raw.get("experience_max", 40)
    if not _is_number(exp_max) or exp_max <= 0:
        check.add("schema.experience_max", "must be a number > 0")
        exp_max, ok = 40, False

    if not ok:
        return None
    return FacultySchema(
        faculty_name=name,
        courses=tuple(courses),
        bsc_domain=tuple(domains["bsc"]),
        msc_domain=tuple(domains["msc"]),
        phd_domain=tuple(domains["phd"]),
        experience_unit=unit,
        experience_max=float(exp_max),
    )


def _match_courses(
    raw: Any, schema: FacultySchema, path: str, check: _Check
) -> tuple[str, ...] | None:
    values = _string_list(raw if raw is not None else [])
    if values is None:
        check.add(path, "must be a list of course ids")
        return None
    resolved = []
    ok = True
    for v in values:
        match = _match_value(v, schema.courses)
        if match is None:
            check.add(path, f"unknown course {v.strip()!r}")
            ok = False
        else:
            resolved.append(match)
    if not ok:
        return None
    # canonical order: catalog order, duplicates dropped
    return tuple(c for c in schema.courses if c in set(resolved))


def _build_row(raw: Any, schema: FacultySchema, path: str, check: _Check) -> QuestionnaireRow | None:
    if not isinstance(raw, Mapping):
        check.add(path, "must be an object")
        return None
    ok = True

    course = _match_value(raw.get("course"), schema.courses)
    if course is None:
        check.add(f"{path}.course", f"unknown course {raw.get('course')!r}")
        ok = False

    reqs: dict[str, tuple[str, ...]] = {}
    for attr in DEGREE_ATTRIBUTES:
        key = f"{attr}_req"
        values = _string_list(raw.get(key))
        if values is None or not values:
            check.add(f"{path}.{key}", "must be a non-empty list of values")
            ok = False
            continue
        domain = schema.domain_for(attr)
        resolved = set()
        for v in values:
            match = _match_value(v, domain)
            if match is None:
                check.add(f"{path}.{key}", f"value {v.strip()!r} not in {attr} domain")
                ok = False
            else:
                resolved.add(match)
        reqs[attr] = tuple(v for v in domain if v in resolved)

    taught = _match_courses(raw.get("required_taught", []), schema, f"{path}.required_taught", check)
    if taught is None:
        ok = False

    min_exp = raw.get("min_experience", 0)
    if not _is_number(min_exp) or min_exp < 0:
        check.add(f"{path}.min_experience", "must be a number >= 0")
        ok = False

    if not ok:
        return None
    return QuestionnaireRow(
        course=course,
        bsc_req=reqs["bsc"],
        msc_req=reqs["msc"],
        phd_req=reqs["phd"],
        required_taught=taught,
        min_experience=float(min_exp),
    )


def _build_expert(raw: Any, schema: FacultySchema | None, path: str, check: _Check) -> ExpertEntry | None:
    if not isinstance(raw, Mapping):
        check.add(path, "must be an object with 'questionnaire' and 'profile'")
        return None
    q_raw = raw.get("questionnaire")
    if not isinstance(q_raw, Mapping):
        check.add(f"{path}.questionnaire", "must be an object")
        return None

    expert_id = q_raw.get("expert_id")
    if not isinstance(expert_id, str) or not expert_id.strip():
        check.add(f"{path}.questionnaire.expert_id", "must be a non-empty string")
        return None
    expert_id = expert_id.strip()

    if schema is None:
        return None  # schema errors already reported; row checks impossible

    rows_raw = q_raw.get("rows")
    if not isinstance(rows_raw, list):
        check.add(f"{path}.questionnaire.rows", "must be a list")
        return None
    rows: list[QuestionnaireRow] = []
    ok = True
    for i, row_raw in enumerate(rows_raw):
        row = _build_row(row_raw, schema, f"{path}.questionnaire.rows[{i}]", check)
        if row is None:
            ok = False
        else:
            rows.append(row)

    covered = [r.course for r in rows]
    for course in schema.courses:
        if covered.count(course) > 1:
            check.add(f"{path}.questionnaire.rows", f"more than one row for course {course!r}")
            ok = False
        elif course not in covered and len(rows) == len(rows_raw):
            check.add(f"{path}.questionnaire.rows", f"missing row for course {course!r}")
            ok = False

    profile_raw = raw.get("profile", {"expert_id": expert_id, "per_course_experience": {}})
    profile = None
    if not isinstance(profile_raw, Mapping):
        check.add(f"{path}.profile", "must be an object")
        ok = False
    else:
        pid = profile_raw.get("expert_id", expert_id)
        if pid != expert_id:
            check.add(f"{path}.profile.expert_id", f"does not match questionnaire expert_id {expert_id!r}")
            ok = False
        exp_raw = profile_raw.get("per_course_experience", {})
        if not isinstance(exp_raw, Mapping):
            check.add(f"{path}.profile.per_course_experience", "must be an object")
            ok = False
        else:
            experience: dict[str, float] = {}
            for course_raw, years in exp_raw.items():
                course = _match_value(course_raw, schema.courses)
                if course is None:
                    check.add(
                        f"{path}.profile.per_course_experience",
                        f"unknown course {course_raw!r}",
                    )
                    ok = False
                elif not _is_number(years) or years < 0:
                    check.add(
                        f"{path}.profile.per_course_experience.{course_raw}",
                        "must be a number >= 0",
                    )
                    ok = False
                else:
                    experience[course] = float(years)
            profile = ExpertProfile(expert_id=expert_id, per_course_experience=experience)

    if not ok or profile is None:
        return None
    return ExpertEntry(Questionnaire(expert_id, tuple(rows)), profile)


def _build_weight_config(
    raw: Any, check: _Check, default: WeightFunctionConfig | None = None
) -> WeightFunctionConfig | None:
    if default is None:
        default = _default_weight_config()
    if raw is None:
        return default
    if not isinstance(raw, Mapping):
        check.add("weight_config", "must be an object")
        return None
    values = {}
    ok = True
    for key, fallback in (
        ("threshold", default.threshold),
        ("floor", default.floor),
        ("peak", default.peak),
        ("spread", default.spread),
    ):
        v = raw.get(key, fallback)
        if not _is_number(v):
            check.add(f"weight_config.{key}", "must be a number")
            ok = False
            v = fallback
        values[key] = float(v)
    if values["threshold"] < 0:
        check.add("weight_config.threshold", "must be >= 0")
        ok = False
    if not (0 < values["floor"] <= 1):
        check.add("weight_config.floor", "must be in (0, 1]")
        ok = False
    if values["spread"] <= 0:
        check.add("weight_config.spread", "must be > 0")
        ok = False
    if values["peak"] < values["threshold"]:
        check.add("weight_config.peak", "must be >= threshold")
        ok = False
    if not ok:
        return None
    return WeightFunctionConfig(**values)


def _default_weight_config() -> WeightFunctionConfig:
    """Built-in defaults, overridable via the FACULTAS_CONFIG env file."""
    path = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return WeightFunctionConfig()
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        check = _Check()
        cfg = _build_weight_config(raw, check, default=WeightFunctionConfig())
        if cfg is None or check.violations:
            raise ParseError([f"{CONFIG_ENV_VAR} file {path}: {v}" for v in check.violations])
        return cfg
    except OSError as exc:
        raise ParseError(f"cannot read {CONFIG_ENV_VAR} file {path}: {exc}") from exc


def _build_kb(raw: Any) -> tuple[KnowledgeBaseDoc | None, list[Violation]]:
    check = _Check()
    if not isinstance(raw, Mapping):
        check.add("$", "document must be a JSON object")
        return None, check.violations

    schema = _build_schema(raw.get("schema"), check)

    experts_raw = raw.get("experts")
    entries: list[ExpertEntry] = []
    ok = schema is not None
    if not isinstance(experts_raw, list) or not experts_raw:
        check.add("experts", "empty")
        ok = False
    else:
        seen_ids: set[str] = set()
        for i, expert_raw in enumerate(experts_raw):
            entry = _build_expert(expert_raw, schema, f"experts[{i}]", check)
            if entry is None:
                ok = False
                continue
            if entry.questionnaire.expert_id in seen_ids:
                check.add(f"experts[{i}]", f"duplicate expert_id {entry.questionnaire.expert_id!r}")
                ok = False
            seen_ids.add(entry.questionnaire.expert_id)
            entries.append(entry)

    weight_config = _build_weight_config(raw.get("weight_config"), check)
    if weight_config is None:
        ok = False

    rule_mode = raw.get("rule_mode", "direct")
    if rule_mode not in RULE_MODES:
        check.add("rule_mode", f"must be one of {list(RULE_MODES)}")
        ok = False

    compiled = raw.get("compiled")
    if compiled is not None:
        if not isinstance(compiled, Mapping):
            check.add("compiled", "must be an object")
            ok = False
        elif compiled.get("mode") not in RULE_MODES:
            check.add("compiled.mode", f"must be one of {list(RULE_MODES)}")
            ok = False

    if not ok or schema is None:
        return None, check.violations
    return (
        KnowledgeBaseDoc(
            schema=schema,
            experts=tuple(entries),
            weight_config=weight_config,
            rule_mode=rule_mode,
            compiled=compiled,
        ),
        check.violations,
    )


def validate_kb(raw: Any) -> list[Violation]:
    """Check a raw knowledge-base document; an empty list means valid.

    Total over well-formed JSON: violations are returned as data, never
    raised.
    """
    return _build_kb(raw)[1]


def kb_from_json(raw: Any) -> KnowledgeBaseDoc:
    """Construct a knowledge base from raw JSON, raising on any violation."""
    doc, violations = _build_kb(raw)
    if violations or doc is None:
        raise ParseError([str(v) for v in violations] or ["invalid knowledge base"])
    return doc


def kb_to_json(doc: KnowledgeBaseDoc) -> dict:
    return doc.to_json()


def load_kb(path: str | Path) -> KnowledgeBaseDoc:
    with open(path, encoding="utf-8") as fh:
        return kb_from_json(json.load(fh))


def save_kb(doc: KnowledgeBaseDoc, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc.to_json(), fh, indent=2)
        fh.write("\n")


def with_weight_config(doc: KnowledgeBaseDoc, cfg: WeightFunctionConfig) -> KnowledgeBaseDoc:
    """Copy of the KB with an overridden weight config (what-if evaluation)."""
    return replace(doc, weight_config=cfg)


def parse_candidate(raw: Mapping[str, Any], schema: FacultySchema) -> CandidateProfile:
    """Normalize one external candidate record against the faculty schema.

    Degree values are matched case- and whitespace-insensitively; an empty
    cell or a marker like "Null" means the degree is absent. Raises
    ParseError listing every problem found.
    """
    problems: list[str] = []

    candidate_id = raw.get("candidate_id")
    if not isinstance(candidate_id, str) or not candidate_id.strip():
        problems.append("candidate_id: missing")
        candidate_id = ""
    else:
        candidate_id = candidate_id.strip()

    degrees: dict[str, str | None] = {}
    for attr in DEGREE_ATTRIBUTES:
        value = raw.get(attr)
        if value is None or (isinstance(value, str) and canon(value) in ABSENT_MARKERS):
            degrees[attr] = None
            if attr == "bsc":
                problems.append("bsc: missing (a bachelor's field is required)")
            continue
        match = _match_value(value, schema.domain_for(attr))
        if match is None:
            problems.append(f"{attr}: value {str(value).strip()!r} not in {attr} domain")
            degrees[attr] = None
        else:
            degrees[attr] = match

    taught_raw = raw.get("taught", [])
    if isinstance(taught_raw, str):
        taught_raw = [part for part in taught_raw.split(";") if part.strip()]
    taught: set[str] = set()
    if not isinstance(taught_raw, (list, tuple)):
        problems.append("taught: must be a list or ';'-separated string of course ids")
    else:
        for item in taught_raw:
            match = _match_value(item, schema.courses)
            if match is None:
                problems.append(f"taught: unknown course {str(item).strip()!r}")
            else:
                taught.add(match)

    experience_raw = raw.get("experience")
    experience = 0.0
    if isinstance(experience_raw, str):
        try:
            experience_raw = float(experience_raw)
        except ValueError:
            pass
    if not _is_number(experience_raw):
        problems.append("experience: must be a number")
    elif experience_raw < 0:
        problems.append("experience: must be >= 0")
    else:
        experience = float(experience_raw)

    if problems:
        raise ParseError(problems)
    return CandidateProfile(
        candidate_id=candidate_id,
        bsc=degrees["bsc"],
        msc=degrees["msc"],
        phd=degrees["phd"],
        taught=tuple(c for c in schema.courses if c in taught),
        experience=experience,
    )


def read_candidates_csv(path: str | Path, schema: FacultySchema) -> list[CandidateProfile]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = [h for h in CANDIDATE_CSV_HEADER if h not in (reader.fieldnames or [])]
        if missing:
            raise ParseError(f"{path}: missing CSV columns {missing}")
        out = []
        problems = []
        for line, record in enumerate(reader, start=2):
            try:
                out.append(parse_candidate(record, schema))
            except ParseError as exc:
                problems.extend(f"{path}:{line}: {p}" for p in exc.problems)
        if problems:
            raise ParseError(problems)
    return out


def read_candidates_json(path: str | Path, schema: FacultySchema) -> list[CandidateProfile]:
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if isinstance(raw, Mapping):
        raw = [raw]
    if not isinstance(raw, list):
        raise ParseError(f"{path}: expected a JSON array of candidate records")
    problems: list[str] = []
    out = []
    for i, record in enumerate(raw):
        if not isinstance(record, Mapping):
            problems.append(f"{path}[{i}]: not an object")
            continue
        try:
            out.append(parse_candidate(record, schema))
        except ParseError as exc:
            problems.extend(f"{path}[{i}]: {p}" for p in exc.problems)
    if problems:
        raise ParseError(problems)
    return out


def load_candidates(path: str | Path, schema: FacultySchema) -> list[CandidateProfile]:
    """Dispatch on extension: .csv or .json candidate batches."""
    if str(path).lower().endswith(".csv"):
        return read_candidates_csv(path, schema)
    return read_candidates_json(path, schema)


def write_candidates_csv(candidates: Iterable[CandidateProfile], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CANDIDATE_CSV_HEADER)
        for c in candidates:
            writer.writerow(_candidate_csv_row(c))


def _candidate_csv_row(c: CandidateProfile) -> list[str]:
    return [
        c.candidate_id,
        c.bsc,
        c.msc or "",
        c.phd or "",
        ";".join(c.taught),
        f"{_num(c.experience)}",
    ]


def schema_from_json(raw: Any) -> FacultySchema:
    """Parse a bare schema object (or the schema block of a KB document)."""
    if isinstance(raw, Mapping) and "schema" in raw and "faculty_name" not in raw:
        raw = raw["schema"]
    check = _Check()
    schema = _build_schema(raw, check)
    if schema is None:
        raise ParseError([str(v) for v in check.violations] or ["invalid schema"])
    return schema


def load_schema(path: str | Path) -> FacultySchema:
    with open(path, encoding="utf-8") as fh:
        return schema_from_json(json.load(fh))
