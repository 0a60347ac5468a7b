"""Criterion weight derivation.

Weights can be stated three ways, matching the assessment modes:

* probabilistic hesitant elements, reduced to their expected degree and
  then normalized to sum to one;
* plain hesitant elements, reduced to their mean degree and used as-is;
* crisp numbers, renormalized (with a warning) when they do not sum to
  one.

Every mode ends in the same place: a :class:`WeightVector` holding the
derived weights plus the ratios of each weight to the largest one.  The
dominance kernel consumes only those ratios, so the pipelines stay
scale-free.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import NonPositiveWeight
from .hf import HesitantElement
from .phf import TOLERANCE, ProbabilisticHesitantElement

WeightElement = Union[ProbabilisticHesitantElement, HesitantElement, float]

MODES = ("phf", "hf", "crisp")


@dataclass(frozen=True)
class WeightSpecification:
    """Per-criterion weight inputs, one element per criterion."""

    mode: str
    elements: tuple[WeightElement, ...]

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown weight mode {self.mode!r}")
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError("weight specification needs at least one element")


@dataclass(frozen=True)
class WeightVector:
    """Derived weights together with their ratios to the largest weight.

    ``weights`` is on the scale native to the mode: normalized to sum
    one for probabilistic and crisp inputs, raw mean scores for plain
    hesitant inputs.  ``relative[j]`` is ``weights[j] / weights[reference]``
    where ``reference`` is the index of the largest weight (lowest index
    on ties), so ``relative[reference]`` is exactly one.
    """

    weights: tuple[float, ...]
    relative: tuple[float, ...]
    reference: int
    relative_sum: float


def raw_weights(spec: WeightSpecification) -> tuple[float, ...]:
    """Reduce the weight elements to one raw number per criterion."""
    raw: list[float] = []
    for j, el in enumerate(spec.elements):
        if spec.mode == "phf":
            if not isinstance(el, ProbabilisticHesitantElement):
                raise TypeError(f"weight element {j} is not probabilistic hesitant")
            raw.append(el.normalized().score())
        elif spec.mode == "hf":
            if not isinstance(el, HesitantElement):
                raise TypeError(f"weight element {j} is not hesitant")
            raw.append(el.score())
        else:
            if isinstance(el, (ProbabilisticHesitantElement, HesitantElement)):
                raise TypeError(f"weight element {j} is not a crisp number")
            raw.append(float(el))
    return tuple(raw)


def vector_from_raw(mode: str, raw: Sequence[float]) -> WeightVector:
    """Build a :class:`WeightVector` from raw per-criterion weights."""
    for j, w in enumerate(raw):
        if w <= 0.0:
            raise NonPositiveWeight(f"weight {j} is {w}, must be positive")
    if mode == "hf":
        base = tuple(float(w) for w in raw)
    else:
        total = math.fsum(raw)
        base = tuple(w / total for w in raw)
    reference = 0
    for j in range(1, len(base)):
        if base[j] > base[reference]:
            reference = j
    relative = tuple(w / base[reference] for w in base)
    return WeightVector(base, relative, reference, math.fsum(relative))


def derive_weights(spec: WeightSpecification) -> WeightVector:
    """Derive the weight vector for a specification in any mode."""
    raw = raw_weights(spec)
    if spec.mode == "crisp":
        total = math.fsum(raw)
        if abs(total - 1.0) > TOLERANCE:
            warnings.warn(
                f"crisp weights sum to {total:.6g}, renormalizing to 1",
                UserWarning,
                stacklevel=2,
            )
    return vector_from_raw(spec.mode, raw)


def perturbed_vector(spec: WeightSpecification, index: int, delta: float) -> WeightVector:
    """Re-derive the vector after adding ``delta`` to one raw weight."""
    raw = list(raw_weights(spec))
    if not 0 <= index < len(raw):
        raise IndexError(f"criterion index {index} out of range")
    raw[index] += delta
    if raw[index] <= 0.0:
        raise NonPositiveWeight(
            f"perturbing weight {index} by {delta} leaves {raw[index]}, must stay positive"
        )
    return vector_from_raw(spec.mode, raw)
