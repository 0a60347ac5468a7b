"""Probabilistic hesitant assessment elements.

An element records one panel assessment of an alternative against a
criterion as a small multiset of ``(degree, probability)`` entries: each
degree is a candidate satisfaction value and its probability weight says
how much support that value got.  Probability weights may arrive
incomplete, so they are renormalized to sum to one before any statistic
is computed.  Renormalization scales every weight by the same factor and
therefore never reorders entries.

Three conventions used throughout:

* entries are ranked by the product ``probability * degree``, with the
  bare degree breaking ties and equal pairs keeping input order;
* padding is optimistic: it repeats the largest degree with probability
  zero, which changes no statistic but aligns entry counts;
* comparisons prefer the higher expected degree and, when expectations
  tie, the lower spread.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    EmptyElement,
    NegativeDegree,
    NegativeProbability,
    ProbabilityMassExceedsOne,
    TargetTooSmall,
    UnnormalizedProbabilities,
    ZeroProbabilityMass,
)

# Shared tolerance for probability-mass checks and comparison ties.
TOLERANCE = 1e-9


class Ordering(enum.IntEnum):
    """Result of a three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class ProbabilisticHesitantElement:
    """Immutable multiset of ``(degree, probability)`` entries."""

    entries: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        coerced = tuple((float(d), float(p)) for d, p in self.entries)
        if not coerced:
            raise EmptyElement("element needs at least one entry")
        for d, p in coerced:
            if d < 0.0:
                raise NegativeDegree(f"degree {d} is negative")
            if p < 0.0:
                raise NegativeProbability(f"probability {p} is negative")
        object.__setattr__(self, "entries", coerced)

    @classmethod
    def of(cls, pairs: Iterable[tuple[float, float]]) -> "ProbabilisticHesitantElement":
        return cls(tuple(pairs))

    @property
    def count(self) -> int:
        return len(self.entries)

    @property
    def degrees(self) -> tuple[float, ...]:
        return tuple(d for d, _ in self.entries)

    @property
    def probabilities(self) -> tuple[float, ...]:
        return tuple(p for _, p in self.entries)

    def probability_mass(self) -> float:
        return math.fsum(p for _, p in self.entries)

    def is_normalized(self) -> bool:
        return abs(self.probability_mass() - 1.0) <= TOLERANCE

    def normalized(self) -> "ProbabilisticHesitantElement":
        """Scale probability weights so they sum to one.

        Raises if the weights already overshoot one (beyond tolerance) or
        are all zero.  Elements that are normalized already are returned
        unchanged.
        """
        mass = self.probability_mass()
        if mass > 1.0 + TOLERANCE:
            raise ProbabilityMassExceedsOne(f"probability mass {mass} exceeds 1")
        if abs(mass - 1.0) <= TOLERANCE:
            return self
        if mass <= 0.0:
            raise ZeroProbabilityMass("cannot normalize zero probability mass")
        return ProbabilisticHesitantElement(tuple((d, p / mass) for d, p in self.entries))

    def padded(self, target: int) -> "ProbabilisticHesitantElement":
        """Append ``(max degree, 0.0)`` entries until ``target`` entries.

        Zero-probability copies of the best degree leave the score and
        variance untouched; they exist only to align entry counts.
        """
        if target < self.count:
            raise TargetTooSmall(f"cannot pad {self.count} entries down to {target}")
        if target == self.count:
            return self
        best = max(self.degrees)
        filler = ((best, 0.0),) * (target - self.count)
        return ProbabilisticHesitantElement(self.entries + filler)

    def ordered(self, reverse: bool = False) -> "ProbabilisticHesitantElement":
        """Sort entries by ``probability * degree``, then by degree.

        The sort is stable, so equal pairs keep their input order.
        ``reverse=True`` sorts the products descending.
        """
        ranked = sorted(self.entries, key=lambda e: (e[0] * e[1], e[0]), reverse=reverse)
        return ProbabilisticHesitantElement(tuple(ranked))

    def score(self) -> float:
        """Expected degree under the probability weights."""
        if not self.is_normalized():
            raise UnnormalizedProbabilities("score needs normalized probabilities")
        return math.fsum(d * p for d, p in self.entries)

    def variance(self) -> float:
        """Probability-weighted squared deviation from the score."""
        if not self.is_normalized():
            raise UnnormalizedProbabilities("variance needs normalized probabilities")
        s = self.score()
        return math.fsum(p * (d - s) ** 2 for d, p in self.entries)


def compare(a: ProbabilisticHesitantElement, b: ProbabilisticHesitantElement) -> Ordering:
    """Rank two elements by score, breaking ties with lower variance."""
    a = a.normalized()
    b = b.normalized()
    ds = a.score() - b.score()
    if abs(ds) > TOLERANCE:
        return Ordering.GREATER if ds > 0 else Ordering.LESS
    dv = a.variance() - b.variance()
    if abs(dv) > TOLERANCE:
        # Equal expectation: the steadier element wins.
        return Ordering.GREATER if dv < 0 else Ordering.LESS
    return Ordering.EQUAL


def distance(
    a: ProbabilisticHesitantElement,
    b: ProbabilisticHesitantElement,
    reverse: bool = False,
) -> float:
    """Mean absolute gap between aligned ``probability * degree`` products.

    Both elements are normalized, padded to a common entry count, and
    ranked in the same direction before entries are matched up.
    """
    a = a.normalized()
    b = b.normalized()
    n = max(a.count, b.count)
    a = a.padded(n).ordered(reverse)
    b = b.padded(n).ordered(reverse)
    gaps = (abs(da * pa - db * pb) for (da, pa), (db, pb) in zip(a.entries, b.entries))
    return math.fsum(gaps) / n
