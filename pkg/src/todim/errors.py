"""Exception taxonomy for the todim package.

Every exception raised on purpose by this package derives from
:class:`TodimError`, so callers can catch one type at an API boundary.
Subclasses are grouped by the layer that raises them: element algebra,
weight derivation, problem evaluation, and document handling.
"""

from __future__ import annotations


class TodimError(Exception):
    """Base class for all errors raised by this package."""


class ElementError(TodimError):
    """An assessment element violates one of its invariants."""


class EmptyElement(ElementError):
    """An element was constructed with no entries."""


class NegativeDegree(ElementError):
    """A satisfaction degree is negative."""


class NegativeProbability(ElementError):
    """A probability weight is negative."""


class ZeroProbabilityMass(ElementError):
    """All probability weights are zero, so normalization is undefined."""


class ProbabilityMassExceedsOne(ElementError):
    """The probability weights sum to more than one."""


class UnnormalizedProbabilities(ElementError):
    """An operation that requires normalized probabilities got raw ones."""


class TargetTooSmall(ElementError):
    """A padding target is smaller than the element's entry count."""


class WeightError(TodimError):
    """A criterion weight violates one of its invariants."""


class NonPositiveWeight(WeightError):
    """A criterion weight is zero or negative."""


class ProblemError(TodimError):
    """A decision problem cannot be evaluated as stated."""


class NonPositiveLambda(ProblemError):
    """The loss attenuation factor is zero or negative."""


class TooFewAlternatives(ProblemError):
    """Ranking needs at least two alternatives."""


class MethodMismatch(ProblemError):
    """The requested method does not match the problem's assessment mode."""


class DocumentError(TodimError):
    """A problem document cannot be read."""


class ProblemSyntaxError(DocumentError):
    """The document is not well-formed JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(DocumentError):
    """The document parses as JSON but has the wrong shape.

    ``path`` points at the offending field, for example
    ``assessments[2][0].p``.
    """

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.reason = message
        self.path = path


class ValidationError(DocumentError):
    """The document is well-shaped but semantically inconsistent."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.reason = message
        self.path = path
