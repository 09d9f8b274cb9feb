import json
from pathlib import Path

import pytest

from facultas.schema import load_kb, parse_candidate

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

KB_PATH = FIXTURES / "computer_science.kb.json"
APPLICANT_CSV = FIXTURES / "applicant.csv"
SCHEMA_PATH = FIXTURES / "schema_computer_science.json"


@pytest.fixture(scope="session")
def table1_raw() -> dict:
    return json.loads(KB_PATH.read_text())


@pytest.fixture(scope="session")
def table1_kb():
    return load_kb(KB_PATH)


@pytest.fixture(scope="session")
def schema(table1_kb):
    return table1_kb.schema


@pytest.fixture(scope="session")
def questionnaire(table1_kb):
    return table1_kb.experts[0].questionnaire


@pytest.fixture(scope="session")
def worked_candidate(schema):
    """The fully worked example: scores 5/3/1/4/1 over the bundled rules."""
    return parse_candidate(
        {
            "candidate_id": "a1",
            "bsc": "Software",
            "msc": "Artificial Intelligence",
            "phd": "Artificial Intelligence",
            "taught": "AI;DB;AD",
            "experience": 4,
        },
        schema,
    )
