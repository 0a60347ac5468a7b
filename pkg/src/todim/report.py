"""Report rendering for evaluations, method comparisons, and sweeps.

Two formats everywhere: ``table`` for people, ``json`` for machines.
Tables display at two decimals, with whole numbers printed bare ("0",
"1").  JSON carries full precision and is canonically encoded, so the
same evaluation always produces the same bytes; the HTTP service returns
exactly these payloads.
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from .engine import Evaluation, RankingResult
from .io import canonical_json

FORMATS = ("table", "json")


def round2(value: float) -> str:
    """Two-decimal display; whole numbers print without decimals."""
    rounded = round(value, 2)
    if rounded == int(rounded):
        return str(int(rounded))
    return f"{rounded:.2f}"


def ranks_from_order(order: Sequence[int], count: int) -> tuple[int, ...]:
    """Per-alternative 1-based rank, in input order."""
    ranks = [0] * count
    for position, index in enumerate(order):
        ranks[index] = position + 1
    return tuple(ranks)


def _aligned(rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [row[0].ljust(widths[0])]
        cells += [row[c].rjust(widths[c]) for c in range(1, len(row))]
        lines.append(("  " + "  ".join(cells)).rstrip())
    return lines


def _matrix_rows(names: Sequence[str], matrix: Sequence[Sequence[float]]) -> list[list[str]]:
    rows = [[""] + list(names)]
    for name, row in zip(names, matrix):
        rows.append([name] + [round2(v) for v in row])
    return rows


def _order_names(ranking: RankingResult, names: Sequence[str]) -> list[str]:
    return [names[i] for i in ranking.order]


def evaluation_payload(evaluation: Evaluation, notes: Iterable[str] = ()) -> dict[str, Any]:
    """Full-precision JSON-ready view of one evaluation."""
    problem = evaluation.problem
    ranking = evaluation.ranking
    weights = evaluation.weights
    return {
        "method": ranking.method,
        "lambda": ranking.lam,
        "alternatives": list(problem.alternatives),
        "criteria": [{"name": c.name, "kind": c.kind} for c in problem.criteria],
        "weights": {
            "values": list(weights.weights),
            "relative": list(weights.relative),
            "reference": weights.reference,
            "relative_sum": weights.relative_sum,
        },
        "dominance": {
            "per_criterion": [[list(row) for row in m] for m in evaluation.breakdown.per_criterion],
            "aggregate": [list(row) for row in evaluation.breakdown.aggregate],
            "sums": list(evaluation.breakdown.sums),
        },
        "overall": list(ranking.overall),
        "order": _order_names(ranking, problem.alternatives),
        "ranks": list(ranks_from_order(ranking.order, problem.alternative_count)),
        "footnotes": list(notes),
    }


def emit_report(
    evaluation: Evaluation,
    format: str = "table",
    notes: Iterable[str] = (),
    title: str | None = None,
) -> str:
    """Render one evaluation; see module docstring for the two formats."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    if format == "json":
        return canonical_json(evaluation_payload(evaluation, notes))

    problem = evaluation.problem
    names = problem.alternatives
    ranking = evaluation.ranking
    lines: list[str] = []
    if title:
        lines += [title, ""]
    lines.append(f"method: {ranking.method}    lambda: {ranking.lam:g}")
    lines.append("")
    lines.append("weights")
    weight_rows = [["criterion", "weight", "relative"]]
    for j, criterion in enumerate(problem.criteria):
        weight_rows.append(
            [criterion.name, round2(evaluation.weights.weights[j]), round2(evaluation.weights.relative[j])]
        )
    lines += _aligned(weight_rows)
    lines.append("")
    for j, criterion in enumerate(problem.criteria):
        lines.append(f"dominance under {criterion.name} ({criterion.kind})")
        lines += _aligned(_matrix_rows(names, evaluation.breakdown.per_criterion[j]))
        lines.append("")
    lines.append("aggregate dominance")
    lines += _aligned(_matrix_rows(names, evaluation.breakdown.aggregate))
    lines.append("")
    lines.append("overall: " + " ".join(round2(v) for v in ranking.overall))
    lines.append("ranking: " + " > ".join(_order_names(ranking, names)))
    notes = list(notes)
    if notes:
        lines.append("")
        lines.append("notes")
        lines += [f"  - {note}" for note in notes]
    return "\n".join(lines) + "\n"


def comparison_payload(
    labels: Sequence[str], evaluations: Sequence[Evaluation]
) -> dict[str, Any]:
    names = evaluations[0].problem.alternatives
    results = []
    for label, evaluation in zip(labels, evaluations):
        ranking = evaluation.ranking
        results.append(
            {
                "label": label,
                "method": ranking.method,
                "lambda": ranking.lam,
                "overall": list(ranking.overall),
                "order": _order_names(ranking, names),
                "ranks": list(ranks_from_order(ranking.order, len(names))),
            }
        )
    return {"alternatives": list(names), "results": results}


def emit_comparison(
    labels: Sequence[str], evaluations: Sequence[Evaluation], format: str = "table"
) -> str:
    """Side-by-side rank table, one column per evaluated input."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    first = evaluations[0].problem.alternatives
    for evaluation in evaluations[1:]:
        if evaluation.problem.alternatives != first:
            raise ValueError("compared problems must share alternative names")
    if format == "json":
        return canonical_json(comparison_payload(labels, evaluations))
    rows = [["alternative"] + list(labels)]
    all_ranks = [
        ranks_from_order(e.ranking.order, len(first)) for e in evaluations
    ]
    for i, name in enumerate(first):
        rows.append([name] + [str(ranks[i]) for ranks in all_ranks])
    lines = _aligned(rows)
    lines.append("")
    for label, evaluation in zip(labels, evaluations):
        lines.append(f"ranking ({label}): " + " > ".join(_order_names(evaluation.ranking, first)))
    return "\n".join(lines) + "\n"


def _change_points(
    results: Sequence[RankingResult], names: Sequence[str]
) -> list[dict[str, Any]]:
    changes = []
    for previous, current in zip(results, results[1:]):
        if previous.order != current.order:
            changes.append(
                {
                    "lambda": current.lam,
                    "from": _order_names(previous, names),
                    "to": _order_names(current, names),
                }
            )
    return changes


def sweep_payload(results: Sequence[RankingResult], names: Sequence[str]) -> dict[str, Any]:
    return {
        "alternatives": list(names),
        "results": [
            {
                "lambda": r.lam,
                "overall": list(r.overall),
                "order": _order_names(r, names),
                "ranks": list(ranks_from_order(r.order, len(names))),
            }
            for r in results
        ],
        "change_points": _change_points(results, names),
    }


def emit_sweep(
    results: Sequence[RankingResult], names: Sequence[str], format: str = "table"
) -> str:
    """One row per attenuation value plus a summary of order changes."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    if format == "json":
        return canonical_json(sweep_payload(results, names))
    rows = [["lambda", "overall", "order"]]
    for r in results:
        rows.append(
            [
                f"{r.lam:g}",
                " ".join(round2(v) for v in r.overall),
                " > ".join(_order_names(r, names)),
            ]
        )
    lines = _aligned(rows)
    lines.append("")
    changes = _change_points(results, names)
    if not changes:
        lines.append("order changes: none")
    else:
        for change in changes:
            lines.append(
                "order change at lambda {:g}: {} -> {}".format(
                    change["lambda"], " > ".join(change["from"]), " > ".join(change["to"])
                )
            )
    return "\n".join(lines) + "\n"
