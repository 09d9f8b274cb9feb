"""Rule-based weighted expert system for matching instructors to courses.

Expert questionnaires are compiled into rules (directly, or via induced
decision trees), candidates are scored by how many rule antecedents they
satisfy, expert opinions are weighted by relevant teaching experience, and a
majority vote across experts produces the final, fully traceable
recommendation.
"""

from .errors import FacultasError, ParseError, SchemaMismatch
from .evaluation import (
    EvalReport,
    FacultyResult,
    LabeledDataset,
    accuracy,
    evaluate,
    load_dataset,
    synth_generate,
    synthetic_kb,
    write_dataset_csv,
)
from .induction import (
    DecisionTree,
    TrainingSample,
    build_id3,
    classify,
    classify_trace,
    entropy,
    information_gain,
    samples_from_questionnaire,
    tree_from_questionnaire,
)
from .rules import (
    FiringReport,
    Predicate,
    Rule,
    RuleSet,
    course_scores,
    extract_rules,
    firing_score,
    recommend_unweighted,
    rules_from_questionnaire,
)
from .schema import (
    CandidateProfile,
    ExpertEntry,
    ExpertProfile,
    FacultySchema,
    KnowledgeBaseDoc,
    Questionnaire,
    QuestionnaireRow,
    Violation,
    WeightFunctionConfig,
    kb_from_json,
    kb_to_json,
    load_candidates,
    load_kb,
    parse_candidate,
    save_kb,
    validate_kb,
)
from .voting import (
    CourseSelection,
    ExpertVote,
    FinalRecommendation,
    compile_rule_sets,
    majority_vote,
    recommend_candidate,
    select_instructor_for_course,
)
from .weighting import expert_weight, recommend_weighted

__version__ = "0.1.0"
