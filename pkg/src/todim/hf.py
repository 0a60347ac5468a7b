"""Hesitant assessment elements: candidate degrees without probabilities.

The plain hesitant form keeps every candidate degree an assessment panel
produced, weighting them equally.  Its statistics intentionally differ
from the probabilistic form: the spread measure divides the root of the
squared deviations by the entry count, so padding an element *does*
change its spread.  Comparisons therefore always use the elements as
given, while distances pad to a common entry count first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyElement, NegativeDegree, TargetTooSmall
from .phf import TOLERANCE, Ordering


@dataclass(frozen=True)
class HesitantElement:
    """Immutable multiset of candidate satisfaction degrees."""

    degrees: tuple[float, ...]

    def __post_init__(self) -> None:
        coerced = tuple(float(d) for d in self.degrees)
        if not coerced:
            raise EmptyElement("element needs at least one degree")
        for d in coerced:
            if d < 0.0:
                raise NegativeDegree(f"degree {d} is negative")
        object.__setattr__(self, "degrees", coerced)

    @classmethod
    def of(cls, degrees: Iterable[float]) -> "HesitantElement":
        return cls(tuple(degrees))

    @property
    def count(self) -> int:
        return len(self.degrees)

    def padded(self, target: int) -> "HesitantElement":
        """Repeat the largest degree until the element has ``target`` entries."""
        if target < self.count:
            raise TargetTooSmall(f"cannot pad {self.count} degrees down to {target}")
        if target == self.count:
            return self
        filler = (max(self.degrees),) * (target - self.count)
        return HesitantElement(self.degrees + filler)

    def score(self) -> float:
        """Arithmetic mean of the degrees."""
        return math.fsum(self.degrees) / self.count

    def variance(self) -> float:
        """Root of the summed squared deviations, divided by the count."""
        s = self.score()
        return math.sqrt(math.fsum((d - s) ** 2 for d in self.degrees)) / self.count


def compare(a: HesitantElement, b: HesitantElement) -> Ordering:
    """Rank two elements by score, breaking ties with lower spread.

    Works on the elements exactly as given: padding first would shift
    the spread measure and can flip the tiebreak.
    """
    ds = a.score() - b.score()
    if abs(ds) > TOLERANCE:
        return Ordering.GREATER if ds > 0 else Ordering.LESS
    dv = a.variance() - b.variance()
    if abs(dv) > TOLERANCE:
        return Ordering.GREATER if dv < 0 else Ordering.LESS
    return Ordering.EQUAL


def distance(a: HesitantElement, b: HesitantElement) -> float:
    """Mean absolute gap between degrees after padding and sorting both."""
    n = max(a.count, b.count)
    xs = sorted(a.padded(n).degrees)
    ys = sorted(b.padded(n).degrees)
    return math.fsum(abs(x - y) for x, y in zip(xs, ys)) / n
