"""Command-line interface.

Exit codes: 0 on success, 1 when validation fails (invalid KB, bad candidate
records, schema mismatch), 2 on usage errors. Results go to stdout,
diagnostics to stderr; --json switches every subcommand to the same payload
shapes the HTTP service uses.
"""

from __future__ import annotations

import json
import sys
from dataclasses import replace

import click

from .errors import FacultasError, ParseError
from .evaluation import (
    EvalReport,
    dataset_to_json,
    evaluate,
    load_dataset,
    synth_generate,
    synthetic_kb,
    write_dataset_csv,
)
from .induction import tree_from_questionnaire, tree_to_json
from .rules import extract_rules, rules_from_questionnaire
from .schema import (
    KnowledgeBaseDoc,
    load_candidates,
    load_schema,
    save_kb,
    validate_kb,
)
from .voting import recommend_candidate, select_instructor_for_course


def _echo_json(payload) -> None:
    click.echo(json.dumps(payload, indent=2))


def _load_kb_checked(path: str) -> KnowledgeBaseDoc:
    """Load a KB file; print the validation report and exit 1 on any problem."""
    from .schema import kb_from_json

    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        click.echo(f"{path}: {exc}", err=True)
        sys.exit(1)
    except json.JSONDecodeError as exc:
        click.echo(f"{path}: invalid JSON: {exc}")
        sys.exit(1)
    violations = validate_kb(raw)
    if violations:
        for violation in violations:
            click.echo(str(violation))
        sys.exit(1)
    return kb_from_json(raw)


def _fail(exc: FacultasError) -> None:
    if isinstance(exc, ParseError):
        for problem in exc.problems:
            click.echo(problem)
    else:
        click.echo(str(exc))
    sys.exit(1)


@click.group()
@click.version_option(package_name="facultas")
def main() -> None:
    """Rule-based weighted expert system for instructor assignment."""


@main.command()
@click.argument("kb_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report.")
def validate(kb_file: str, as_json: bool) -> None:
    """Check a knowledge-base file against every schema invariant."""
    try:
        with open(kb_file, encoding="utf-8") as fh:
            raw = json.load(fh)
        violations = [str(v) for v in validate_kb(raw)]
    except OSError as exc:
        click.echo(f"{kb_file}: {exc}", err=True)
        sys.exit(1)
    except json.JSONDecodeError as exc:
        violations = [f"$: invalid JSON: {exc}"]
    if as_json:
        _echo_json({"valid": not violations, "violations": violations})
    elif violations:
        for line in violations:
            click.echo(line)
    else:
        click.echo("OK")
    sys.exit(1 if violations else 0)


@main.command()
@click.argument("kb_file", type=click.Path())
@click.option("--mode", type=click.Choice(["direct", "tree"]), default="direct", show_default=True)
@click.option("--gain-ratio", is_flag=True, help="Score tree splits by gain ratio instead of gain.")
@click.option("--out", type=click.Path(), default=None, help="Write here instead of in place.")
@click.option("--json", "as_json", is_flag=True)
def build(kb_file: str, mode: str, gain_ratio: bool, out: str | None, as_json: bool) -> None:
    """Compile rule sets (and trees, in tree mode) and cache them in the KB file."""
    kb = _load_kb_checked(kb_file)
    compiled: dict = {"mode": mode, "gain_ratio": gain_ratio, "rule_sets": []}
    if mode == "tree":
        compiled["trees"] = []
    for entry in kb.experts:
        if mode == "tree":
            tree = tree_from_questionnaire(entry.questionnaire, kb.schema, gain_ratio)
            compiled["trees"].append(tree_to_json(tree))
            rule_set = extract_rules(tree)
        else:
            rule_set = rules_from_questionnaire(entry.questionnaire)
        compiled["rule_sets"].append(rule_set.to_json())

    rebuilt = replace(kb, rule_mode=mode, compiled=compiled)
    save_kb(rebuilt, out or kb_file)
    total_rules = sum(len(rs["rules"]) for rs in compiled["rule_sets"])
    if as_json:
        _echo_json({"mode": mode, "experts": len(kb.experts), "rules": total_rules})
    else:
        click.echo(f"compiled {len(kb.experts)} expert(s) in {mode} mode: {total_rules} rules")


def _format_weight(x: float) -> str:
    return f"{x:g}"


def _explain_lines(rec) -> list[str]:
    lines = []
    counts = " ".join(f"{c}={n}" for c, n in rec.vote_counts.items()) or "(none)"
    lines.append(f"  votes: {counts}")
    if rec.tie_break:
        lines.append(f"  resolved by: {rec.tie_break}")
    for vote in rec.votes:
        lines.append(f"  expert {vote.expert_id} -> {vote.recommended or '(none)'}")
        lines.append(
            "    weights: "
            + " ".join(f"{c}={_format_weight(w)}" for c, w in vote.weights.items())
        )
        lines.append(
            "    weighted: "
            + " ".join(f"{c}={_format_weight(s)}" for c, s in vote.weighted_scores.items())
        )
        for rule in vote.firing.rules:
            lines.append(
                f"    {rule.rule_id} -> {rule.consequent}  score {rule.score}/{rule.antecedent_count}"
            )
            for ant in rule.antecedents:
                mark = "x" if ant.satisfied else " "
                lines.append(f"      [{mark}] {ant.description}")
    return lines


@main.command()
@click.argument("kb_file", type=click.Path())
@click.argument("candidates_file", type=click.Path())
@click.option("--explain", is_flag=True, help="Print per-expert rule traces.")
@click.option("--weights", type=click.Choice(["on", "off"]), default="on", show_default=True)
@click.option("--json", "as_json", is_flag=True)
def recommend(kb_file: str, candidates_file: str, explain: bool, weights: str, as_json: bool) -> None:
    """Recommend a course for every candidate in the batch."""
    kb = _load_kb_checked(kb_file)
    try:
        candidates = load_candidates(candidates_file, kb.schema)
    except FacultasError as exc:
        _fail(exc)
    results = [recommend_candidate(kb, c, use_weights=weights == "on") for c in candidates]
    if as_json:
        _echo_json([r.to_json() for r in results])
        return
    for rec in results:
        click.echo(f"{rec.candidate_id} -> {rec.final or '(none)'}")
        if explain:
            for line in _explain_lines(rec):
                click.echo(line)


@main.command()
@click.argument("kb_file", type=click.Path())
@click.argument("candidates_file", type=click.Path())
@click.option("--course", required=True, help="Course to staff.")
@click.option("--weights", type=click.Choice(["on", "off"]), default="on", show_default=True)
@click.option("--json", "as_json", is_flag=True)
def assign(kb_file: str, candidates_file: str, course: str, weights: str, as_json: bool) -> None:
    """Pick the candidate recommended for a course by the most experts."""
    kb = _load_kb_checked(kb_file)
    try:
        candidates = load_candidates(candidates_file, kb.schema)
        selection = select_instructor_for_course(
            kb, course, candidates, use_weights=weights == "on"
        )
    except FacultasError as exc:
        _fail(exc)
    except ValueError as exc:
        click.echo(str(exc))
        sys.exit(1)
    if as_json:
        _echo_json(selection.to_json())
        return
    click.echo(f"{selection.course}: {selection.selected or '(none)'}")
    for standing in selection.standings:
        click.echo(
            f"  {standing.candidate_id}: {standing.votes_for_course} vote(s), "
            f"score {_format_weight(standing.summed_weighted_score)}"
        )


@main.command("evaluate")
@click.argument("kb_file", type=click.Path())
@click.argument("dataset_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
def evaluate_cmd(kb_file: str, dataset_file: str, as_json: bool) -> None:
    """Score the KB's recommendations against a labeled dataset."""
    kb = _load_kb_checked(kb_file)
    try:
        dataset = load_dataset(dataset_file, kb.schema)
        result = evaluate(kb, dataset)
    except FacultasError as exc:
        _fail(exc)
    report = EvalReport((result,))
    if as_json:
        _echo_json(report.to_json())
    else:
        click.echo(report.render())


@main.command()
@click.argument("schema_file", type=click.Path())
@click.option("-n", "count", type=int, required=True, help="Number of samples.")
@click.option("--noise", type=float, default=0.0, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--experts", type=int, default=1, show_default=True, help="Experts in the written KB.")
@click.option("--dataset-out", type=click.Path(), default=None, help="Write samples as CSV.")
@click.option("--kb-out", type=click.Path(), default=None, help="Write a ready-to-evaluate KB.")
@click.option("--json", "as_json", is_flag=True, help="Dump the full bundle to stdout.")
def synth(
    schema_file: str,
    count: int,
    noise: float,
    seed: int,
    experts: int,
    dataset_out: str | None,
    kb_out: str | None,
    as_json: bool,
) -> None:
    """Generate a synthetic labeled dataset plus the questionnaire implying it."""
    try:
        schema = load_schema(schema_file)
        dataset, questionnaire = synth_generate(schema, count, noise, seed)
    except FacultasError as exc:
        _fail(exc)
    except ValueError as exc:
        click.echo(str(exc))
        sys.exit(1)
    if dataset_out:
        write_dataset_csv(dataset, dataset_out)
    if kb_out:
        save_kb(synthetic_kb(schema, questionnaire, experts), kb_out)
    if as_json:
        _echo_json(
            {
                "n": count,
                "noise": noise,
                "seed": seed,
                "questionnaire": questionnaire.to_json(),
                "dataset": dataset_to_json(dataset),
            }
        )
        return
    click.echo(f"generated {count} sample(s) (noise {noise:g}, seed {seed})")
    if dataset_out:
        click.echo(f"dataset: {dataset_out}")
    if kb_out:
        click.echo(f"kb ({experts} expert(s)): {kb_out}")


@main.command()
@click.argument("kb_file", type=click.Path())
@click.option("--addr", default="127.0.0.1:8000", show_default=True, help="host:port to bind.")
def serve(kb_file: str, addr: str) -> None:
    """Serve the KB over HTTP for the decision-support UI."""
    _load_kb_checked(kb_file)
    host, _, port = addr.rpartition(":")
    if not host or not port.isdigit():
        raise click.UsageError(f"--addr must look like host:port, got {addr!r}")
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(kb_file), host=host, port=int(port))


if __name__ == "__main__":
    main()
