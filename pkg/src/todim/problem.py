"""Decision problem model: alternatives, criteria, assessments, weights.

A problem is immutable once constructed and is validated on
construction, so downstream code can assume shape coherence: one
assessment row per alternative, one cell and one weight element per
criterion, and cell types that match the declared mode.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .errors import MethodMismatch, NonPositiveLambda
from .hf import HesitantElement
from .phf import ProbabilisticHesitantElement
from .weights import MODES, WeightSpecification

Cell = Union[ProbabilisticHesitantElement, HesitantElement, float]

KINDS = ("benefit", "cost")

DEFAULT_LOSS_ATTENUATION = 2.25


@dataclass(frozen=True)
class Criterion:
    """A named criterion, either rewarded ("benefit") or penalized ("cost")."""

    name: str
    kind: str = "benefit"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"criterion kind must be one of {KINDS}, got {self.kind!r}")


@dataclass(frozen=True)
class DecisionProblem:
    """One ranking problem over ``len(alternatives)`` assessment rows.

    ``lam`` is the loss attenuation factor: values above one dampen the
    penalty attached to pairwise losses.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[Criterion, ...]
    mode: str
    assessments: tuple[tuple[Cell, ...], ...]
    weights: WeightSpecification
    lam: float = DEFAULT_LOSS_ATTENUATION

    def __post_init__(self) -> None:
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(
            self, "assessments", tuple(tuple(row) for row in self.assessments)
        )
        object.__setattr__(self, "lam", float(self.lam))
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.alternatives:
            raise ValueError("problem needs at least one alternative")
        if not self.criteria:
            raise ValueError("problem needs at least one criterion")
        if len(self.assessments) != len(self.alternatives):
            raise ValueError(
                f"{len(self.alternatives)} alternatives but {len(self.assessments)} assessment rows"
            )
        for i, row in enumerate(self.assessments):
            if len(row) != len(self.criteria):
                raise ValueError(
                    f"assessment row {i} has {len(row)} cells, expected {len(self.criteria)}"
                )
            for j, cell in enumerate(row):
                self._check_cell(cell, i, j)
        if self.weights.mode != self.mode:
            raise ValueError(
                f"weight mode {self.weights.mode!r} does not match problem mode {self.mode!r}"
            )
        if len(self.weights.elements) != len(self.criteria):
            raise ValueError(
                f"{len(self.criteria)} criteria but {len(self.weights.elements)} weight elements"
            )
        if self.lam <= 0.0:
            raise NonPositiveLambda(f"loss attenuation must be positive, got {self.lam}")

    def _check_cell(self, cell: Cell, i: int, j: int) -> None:
        where = f"assessment[{i}][{j}]"
        if self.mode == "phf" and not isinstance(cell, ProbabilisticHesitantElement):
            raise TypeError(f"{where} is not probabilistic hesitant")
        if self.mode == "hf" and not isinstance(cell, HesitantElement):
            raise TypeError(f"{where} is not hesitant")
        if self.mode == "crisp" and isinstance(
            cell, (ProbabilisticHesitantElement, HesitantElement)
        ):
            raise TypeError(f"{where} is not a crisp number")

    @property
    def alternative_count(self) -> int:
        return len(self.alternatives)

    @property
    def criterion_count(self) -> int:
        return len(self.criteria)

    def with_lambda(self, lam: float) -> "DecisionProblem":
        return replace(self, lam=lam)


def strip_probabilities(problem: DecisionProblem) -> DecisionProblem:
    """Convert a probabilistic problem to its plain hesitant shadow.

    Drops the probability weights from every assessment cell and weight
    element, keeping the degree multisets in input order.  Useful for
    asking how much the probability information changes the ranking.
    """
    if problem.mode != "phf":
        raise MethodMismatch("only probabilistic problems can drop probabilities")
    rows = tuple(
        tuple(HesitantElement(cell.degrees) for cell in row) for row in problem.assessments
    )
    spec = WeightSpecification(
        "hf", tuple(HesitantElement(el.degrees) for el in problem.weights.elements)
    )
    return DecisionProblem(
        alternatives=problem.alternatives,
        criteria=problem.criteria,
        mode="hf",
        assessments=rows,
        weights=spec,
        lam=problem.lam,
    )
