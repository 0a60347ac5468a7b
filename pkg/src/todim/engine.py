"""Prospect-theoretic dominance engine.

For every ordered pair of alternatives and every criterion, the engine
asks two questions: which alternative wins on that criterion, and by how
much.  The answer feeds an asymmetric value function: wins contribute
``sqrt(relative_weight * gap / relative_sum)``, losses contribute the
reciprocal-weighted root scaled down by the loss attenuation factor.
Cost criteria flip which side counts as the win.  Summing over criteria
and then over opponents gives each alternative a raw dominance sum,
which is min-max normalized into the overall ranking value.

The three assessment modes differ only in how "which wins" and "by how
much" are computed:

* probabilistic hesitant: score/spread comparison, product-aligned mean
  absolute distance;
* plain hesitant: score/spread comparison on the cells as given,
  distance on column-padded sorted degrees;
* crisp: signed difference, with cost columns negated up front.

Cells in a column are padded to the deepest cell of that column before
any distance is taken, so every pair in a column is measured on a common
entry count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import NonPositiveLambda, TooFewAlternatives
from .phf import TOLERANCE
from .problem import DecisionProblem
from .weights import WeightVector, derive_weights, perturbed_vector

Matrix = tuple[tuple[float, ...], ...]

# Wire names for the pipelines, as used by the CLI and the service.
METHOD_BY_MODE = {"phf": "phf", "hf": "hf", "crisp": "classical"}
MODE_BY_METHOD = {method: mode for mode, method in METHOD_BY_MODE.items()}

PairFn = Callable[[int, int, int], tuple[int, float]]


@dataclass(frozen=True)
class DominanceBreakdown:
    """Per-criterion dominance matrices plus their aggregate."""

    per_criterion: tuple[Matrix, ...]
    aggregate: Matrix
    sums: tuple[float, ...]


@dataclass(frozen=True)
class RankingResult:
    """Normalized ranking values and the induced order (best first)."""

    overall: tuple[float, ...]
    order: tuple[int, ...]
    method: str
    lam: float


@dataclass(frozen=True)
class Evaluation:
    """Everything one evaluation produced."""

    problem: DecisionProblem
    weights: WeightVector
    breakdown: DominanceBreakdown
    ranking: RankingResult


def _sign(score_a: float, var_a: float, score_b: float, var_b: float) -> int:
    ds = score_a - score_b
    if abs(ds) > TOLERANCE:
        return 1 if ds > 0 else -1
    dv = var_a - var_b
    if abs(dv) > TOLERANCE:
        # Equal expectation: the steadier cell wins.
        return 1 if dv < 0 else -1
    return 0


def _prepare_phf(problem: DecisionProblem) -> PairFn:
    n, m = problem.alternative_count, problem.criterion_count
    stats: list[list[tuple[float, float]]] = [[(0.0, 0.0)] * m for _ in range(n)]
    products: list[list[tuple[float, ...]]] = [[()] * m for _ in range(n)]
    depths: list[int] = [0] * m
    for j in range(m):
        column = [problem.assessments[i][j].normalized() for i in range(n)]
        depth = max(cell.count for cell in column)
        depths[j] = depth
        for i, cell in enumerate(column):
            stats[i][j] = (cell.score(), cell.variance())
            aligned = cell.padded(depth).ordered()
            products[i][j] = tuple(d * p for d, p in aligned.entries)

    def pair(j: int, i: int, k: int) -> tuple[int, float]:
        sa, va = stats[i][j]
        sb, vb = stats[k][j]
        sign = _sign(sa, va, sb, vb)
        if sign == 0:
            return 0, 0.0
        gaps = (abs(x - y) for x, y in zip(products[i][j], products[k][j]))
        return sign, math.fsum(gaps) / depths[j]

    return pair


def _prepare_hf(problem: DecisionProblem) -> PairFn:
    n, m = problem.alternative_count, problem.criterion_count
    stats: list[list[tuple[float, float]]] = [[(0.0, 0.0)] * m for _ in range(n)]
    aligned: list[list[tuple[float, ...]]] = [[()] * m for _ in range(n)]
    depths: list[int] = [0] * m
    for j in range(m):
        column = [problem.assessments[i][j] for i in range(n)]
        depth = max(cell.count for cell in column)
        depths[j] = depth
        for i, cell in enumerate(column):
            # Comparison uses the cell as given; padding would shift its spread.
            stats[i][j] = (cell.score(), cell.variance())
            aligned[i][j] = tuple(sorted(cell.padded(depth).degrees))

    def pair(j: int, i: int, k: int) -> tuple[int, float]:
        sa, va = stats[i][j]
        sb, vb = stats[k][j]
        sign = _sign(sa, va, sb, vb)
        if sign == 0:
            return 0, 0.0
        gaps = (abs(x - y) for x, y in zip(aligned[i][j], aligned[k][j]))
        return sign, math.fsum(gaps) / depths[j]

    return pair


def _prepare_crisp(problem: DecisionProblem) -> PairFn:
    # Cost columns are negated here, so every remaining comparison is
    # higher-is-better.
    values = [
        [
            -float(cell) if crit.kind == "cost" else float(cell)
            for cell, crit in zip(row, problem.criteria)
        ]
        for row in problem.assessments
    ]

    def pair(j: int, i: int, k: int) -> tuple[int, float]:
        diff = values[i][j] - values[k][j]
        if abs(diff) <= TOLERANCE:
            return 0, 0.0
        return (1 if diff > 0 else -1), abs(diff)

    return pair


_PREPARE = {"phf": _prepare_phf, "hf": _prepare_hf, "crisp": _prepare_crisp}


def _dominance(sign: int, d: float, rel_j: float, rel_sum: float, lam: float, benefit: bool) -> float:
    if sign == 0 or d <= 0.0:
        return 0.0
    gain = (sign > 0) if benefit else (sign < 0)
    if gain:
        return math.sqrt(rel_j * d / rel_sum)
    return -math.sqrt(rel_sum * d / rel_j) / lam


def _criterion_matrix(
    pair: PairFn, j: int, n: int, rel_j: float, rel_sum: float, lam: float, benefit: bool
) -> Matrix:
    rows = []
    for i in range(n):
        row = []
        for k in range(n):
            if i == k:
                row.append(0.0)
                continue
            sign, d = pair(j, i, k)
            row.append(_dominance(sign, d, rel_j, rel_sum, lam, benefit))
        rows.append(tuple(row))
    return tuple(rows)


def evaluate(
    problem: DecisionProblem,
    *,
    lam: Optional[float] = None,
    weights: Optional[WeightVector] = None,
    parallel: bool = False,
) -> Evaluation:
    """Evaluate a problem and rank its alternatives.

    ``lam`` overrides the problem's loss attenuation factor and
    ``weights`` overrides weight derivation (used by sensitivity probes).
    ``parallel=True`` computes the per-criterion matrices on a thread
    pool; results are bit-identical to the sequential path because each
    criterion's arithmetic is independent and recombined in input order.
    """
    n, m = problem.alternative_count, problem.criterion_count
    if n < 2:
        raise TooFewAlternatives(f"ranking needs at least two alternatives, got {n}")
    lam = problem.lam if lam is None else float(lam)
    if lam <= 0.0:
        raise NonPositiveLambda(f"loss attenuation must be positive, got {lam}")
    vector = derive_weights(problem.weights) if weights is None else weights
    if len(vector.relative) != m:
        raise ValueError(f"weight vector covers {len(vector.relative)} criteria, expected {m}")

    pair = _PREPARE[problem.mode](problem)
    crisp = problem.mode == "crisp"

    def one(j: int) -> Matrix:
        # The crisp path bakes cost handling into the negated values.
        benefit = True if crisp else problem.criteria[j].kind == "benefit"
        return _criterion_matrix(pair, j, n, vector.relative[j], vector.relative_sum, lam, benefit)

    if parallel:
        with ThreadPoolExecutor() as pool:
            per_criterion = tuple(pool.map(one, range(m)))
    else:
        per_criterion = tuple(one(j) for j in range(m))

    aggregate = tuple(
        tuple(math.fsum(per_criterion[j][i][k] for j in range(m)) for k in range(n))
        for i in range(n)
    )
    sums = tuple(math.fsum(row) for row in aggregate)
    lo, hi = min(sums), max(sums)
    if hi == lo:
        overall = (1.0,) * n
    else:
        overall = tuple((s - lo) / (hi - lo) for s in sums)
    order = tuple(sorted(range(n), key=lambda i: (-overall[i], i)))
    ranking = RankingResult(overall, order, METHOD_BY_MODE[problem.mode], lam)
    return Evaluation(problem, vector, DominanceBreakdown(per_criterion, aggregate, sums), ranking)


def sweep_lambda(
    problem: DecisionProblem, lambdas: Sequence[float], *, parallel: bool = False
) -> tuple[RankingResult, ...]:
    """Evaluate the problem once per attenuation value, in the order given."""
    values = [float(lam) for lam in lambdas]
    for lam in values:
        if lam <= 0.0:
            raise NonPositiveLambda(f"loss attenuation must be positive, got {lam}")
    vector = derive_weights(problem.weights)
    return tuple(
        evaluate(problem, lam=lam, weights=vector, parallel=parallel).ranking for lam in values
    )


def perturb_weight(
    problem: DecisionProblem, index: int, delta: float, *, lam: Optional[float] = None
) -> tuple[WeightVector, RankingResult]:
    """Nudge one raw criterion weight and re-rank under the nudged vector."""
    vector = perturbed_vector(problem.weights, index, delta)
    return vector, evaluate(problem, lam=lam, weights=vector).ranking
