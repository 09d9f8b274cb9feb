"""Decision-tree induction over questionnaire rows (one training sample per course).

Classic top-down induction by information gain. Nominal attributes split
multi-way on the distinct observed answer sets (a disjunctive answer like
"Algorithm Designing or Artificial Intelligence" is one outcome); the
taught-course attribute splits on binary contains-all tests; experience
splits on binary >= tests with thresholds at midpoints of adjacent observed
values. All tie-breaks are total orders so identical inputs always yield
structurally identical trees.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .schema import CandidateProfile, FacultySchema, Questionnaire, _num

ATTRIBUTE_ORDER = ("bsc", "msc", "phd", "taught", "experience")
NOMINAL_ATTRIBUTES = ("bsc", "msc", "phd")


@dataclass(frozen=True)
class TrainingSample:
    """One questionnaire row viewed as a labeled sample."""

    bsc: tuple[str, ...]
    msc: tuple[str, ...]
    phd: tuple[str, ...]
    taught: tuple[str, ...]
    experience: float
    label: str

    def nominal(self, attribute: str) -> tuple[str, ...]:
        return {"bsc": self.bsc, "msc": self.msc, "phd": self.phd}[attribute]


def samples_from_questionnaire(q: Questionnaire) -> list[TrainingSample]:
    return [
        TrainingSample(
            bsc=row.bsc_req,
            msc=row.msc_req,
            phd=row.phd_req,
            taught=row.required_taught,
            experience=row.min_experience,
            label=row.course,
        )
        for row in q.rows
    ]


@dataclass(frozen=True)
class NominalSplit:
    attribute: str

    def describe(self) -> str:
        return self.attribute


@dataclass(frozen=True)
class SetSplit:
    required: tuple[str, ...]
    attribute: str = "taught"

    def describe(self) -> str:
        return f"taught includes {'+'.join(self.required)}"


@dataclass(frozen=True)
class NumericSplit:
    threshold: float
    attribute: str = "experience"

    def describe(self) -> str:
        return f"experience >= {self.threshold:g}"


SplitTest = NominalSplit | SetSplit | NumericSplit


@dataclass(frozen=True)
class Leaf:
    label: str


@dataclass(frozen=True)
class Branch:
    outcome: tuple[str, ...] | bool  # value set for nominal splits, bool otherwise
    child: "DecisionNode | Leaf"


@dataclass(frozen=True)
class DecisionNode:
    split: SplitTest
    branches: tuple[Branch, ...]
    majority: str  # fallback label for observations no branch covers


@dataclass(frozen=True)
class DecisionTree:
    expert_id: str
    root: DecisionNode | Leaf


def entropy(labels: Sequence[str]) -> float:
    """Shannon entropy of a label multiset, in bits."""
    if not labels:
        raise ValueError("entropy of an empty label set is undefined")
    total = len(labels)
    return -sum(
        (count / total) * math.log2(count / total) for count in Counter(labels).values()
    )


def _sample_side(sample: TrainingSample, split: SplitTest):
    if isinstance(split, NominalSplit):
        return sample.nominal(split.attribute)
    if isinstance(split, SetSplit):
        return set(split.required) <= set(sample.taught)
    return sample.experience >= split.threshold


def _partition(samples: Sequence[TrainingSample], split: SplitTest) -> dict:
    groups: dict = {}
    for sample in samples:
        groups.setdefault(_sample_side(sample, split), []).append(sample)
    return groups


def information_gain(samples: Sequence[TrainingSample], split: SplitTest) -> float:
    """Reduction in label entropy achieved by the split's partition.

    Binary splits must have both sides populated; a nominal split over a
    constant attribute simply yields gain 0.
    """
    if not samples:
        raise ValueError("information_gain needs at least one sample")
    groups = _partition(samples, split)
    if not isinstance(split, NominalSplit) and len(groups) < 2:
        raise ValueError(f"degenerate split: {split.describe()} leaves one side empty")
    total = len(samples)
    child = sum(
        (len(part) / total) * entropy([s.label for s in part]) for part in groups.values()
    )
    return entropy([s.label for s in samples]) - child


def _split_info(samples: Sequence[TrainingSample], split: SplitTest) -> float:
    groups = _partition(samples, split)
    total = len(samples)
    return -sum(
        (len(part) / total) * math.log2(len(part) / total) for part in groups.values()
    )


def _candidate_splits(
    samples: Sequence[TrainingSample], available_nominals: frozenset[str]
) -> Iterator[SplitTest]:
    for attr in NOMINAL_ATTRIBUTES:
        if attr in available_nominals and len({s.nominal(attr) for s in samples}) >= 2:
            yield NominalSplit(attr)

    observed = {s.taught for s in samples if s.taught}
    members = sorted({c for taught in observed for c in taught})
    candidates = {tuple(sorted(t)) for t in observed} | {(c,) for c in members}
    for required in sorted(candidates):
        split = SetSplit(required)
        if len(_partition(samples, split)) == 2:
            yield split

    values = sorted({s.experience for s in samples})
    for low, high in zip(values, values[1:]):
        yield NumericSplit((low + high) / 2)


def _majority(labels: Sequence[str], catalog: Sequence[str]) -> str:
    counts = Counter(labels)
    best = max(counts.values())
    return min((l for l, c in counts.items() if c == best), key=catalog.index)


def _attr_index(split: SplitTest) -> int:
    return ATTRIBUTE_ORDER.index(split.attribute)


def build_id3(
    samples: Sequence[TrainingSample],
    schema: FacultySchema,
    expert_id: str = "",
    use_gain_ratio: bool = False,
) -> DecisionTree:
    """Grow a tree by recursively taking the best-scoring split.

    Stops on pure partitions or when no candidate split has positive score;
    such leaves take the majority label, ties resolved by catalog order.
    """
    if not samples:
        raise ValueError("cannot build a tree from zero samples")

    def grow(subset: Sequence[TrainingSample], available: frozenset[str]):
        labels = [s.label for s in subset]
        if len(set(labels)) == 1:
            return Leaf(labels[0])

        scored = []
        for split in _candidate_splits(subset, available):
            gain = information_gain(subset, split)
            if use_gain_ratio:
                info = _split_info(subset, split)
                gain = gain / info if info > 0 else 0.0
            if gain > 0:
                scored.append((-gain, _attr_index(split), split.describe(), split))
        if not scored:
            return Leaf(_majority(labels, schema.courses))

        scored.sort(key=lambda item: item[:3])
        best = scored[0][3]
        remaining = available - {best.attribute} if isinstance(best, NominalSplit) else available
        groups = _partition(subset, best)
        if isinstance(best, NominalSplit):
            outcomes = sorted(groups, key=lambda o: (len(o), o))
        else:
            outcomes = [True, False]
        branches = tuple(Branch(o, grow(groups[o], remaining)) for o in outcomes)
        return DecisionNode(split=best, branches=branches, majority=_majority(labels, schema.courses))

    return DecisionTree(expert_id=expert_id, root=grow(list(samples), frozenset(NOMINAL_ATTRIBUTES)))


def tree_from_questionnaire(
    q: Questionnaire, schema: FacultySchema, use_gain_ratio: bool = False
) -> DecisionTree:
    return build_id3(samples_from_questionnaire(q), schema, q.expert_id, use_gain_ratio)


def classify(tree: DecisionTree, candidate: CandidateProfile) -> str:
    return classify_trace(tree, candidate)[0]


def classify_trace(tree: DecisionTree, candidate: CandidateProfile) -> tuple[str, list[str]]:
    """Walk the tree for a candidate, returning the label and the path taken.

    A candidate whose degree is absent, or whose value matches no branch,
    stops at that node's majority label; the trace records the fallback.
    """
    trace: list[str] = []
    node = tree.root
    while isinstance(node, DecisionNode):
        split = node.split
        if isinstance(split, NominalSplit):
            value = candidate.degree(split.attribute)
            branch = None
            if value is not None:
                branch = next((b for b in node.branches if value in b.outcome), None)
            if branch is None:
                reason = "absent" if value is None else f"{value!r} matches no branch"
                trace.append(f"{split.attribute} {reason}: fallback to majority {node.majority}")
                return node.majority, trace
            trace.append(f"{split.attribute} = {value} -> [{' | '.join(branch.outcome)}]")
        else:
            side = (
                set(split.required) <= set(candidate.taught)
                if isinstance(split, SetSplit)
                else candidate.experience >= split.threshold
            )
            branch = next(b for b in node.branches if b.outcome is side)
            trace.append(f"{split.describe()} -> {side}")
        node = branch.child
    trace.append(f"leaf {node.label}")
    return node.label, trace


def classify_sample(tree: DecisionTree, sample: TrainingSample) -> str:
    """Route a training sample the same way induction partitioned it."""
    node = tree.root
    while isinstance(node, DecisionNode):
        side = _sample_side(sample, node.split)
        branch = next((b for b in node.branches if b.outcome == side), None)
        if branch is None:
            return node.majority
        node = branch.child
    return node.label


def leaves(tree: DecisionTree) -> list[Leaf]:
    found: list[Leaf] = []

    def walk(node) -> None:
        if isinstance(node, Leaf):
            found.append(node)
        else:
            for branch in node.branches:
                walk(branch.child)

    walk(tree.root)
    return found


def tree_to_json(tree: DecisionTree) -> dict:
    def encode(node) -> dict:
        if isinstance(node, Leaf):
            return {"kind": "leaf", "course": node.label}
        split = node.split
        out: dict = {"kind": "split", "attribute": split.attribute, "majority": node.majority}
        if isinstance(split, NominalSplit):
            out["test"] = "nominal"
            out["branches"] = [
                {"values": list(b.outcome), "child": encode(b.child)} for b in node.branches
            ]
        else:
            if isinstance(split, SetSplit):
                out["test"] = "set_contains_all"
                out["courses"] = list(split.required)
            else:
                out["test"] = "numeric_ge"
                out["threshold"] = _num(split.threshold)
            out["branches"] = [
                {"outcome": b.outcome, "child": encode(b.child)} for b in node.branches
            ]
        return out

    return {"expert_id": tree.expert_id, "root": encode(tree.root)}


def tree_from_json(raw: dict) -> DecisionTree:
    def decode(node_raw: dict):
        if node_raw["kind"] == "leaf":
            return Leaf(node_raw["course"])
        test = node_raw["test"]
        if test == "nominal":
            split: SplitTest = NominalSplit(node_raw["attribute"])
            branches = tuple(
                Branch(tuple(b["values"]), decode(b["child"])) for b in node_raw["branches"]
            )
        else:
            if test == "set_contains_all":
                split = SetSplit(tuple(node_raw["courses"]))
            else:
                split = NumericSplit(float(node_raw["threshold"]))
            branches = tuple(
                Branch(bool(b["outcome"]), decode(b["child"])) for b in node_raw["branches"]
            )
        return DecisionNode(split=split, branches=branches, majority=node_raw["majority"])

    return DecisionTree(expert_id=raw.get("expert_id", ""), root=decode(raw["root"]))
