"""Prospect-theory ranking of alternatives under hesitant assessments.

The package ranks a finite set of alternatives against weighted criteria
using pairwise gain/loss dominance, in three assessment modes: crisp
numbers, hesitant degree multisets, and probability-weighted degree
multisets.  See the README for the file format, CLI, and HTTP service.
"""

from .engine import (
    DominanceBreakdown,
    Evaluation,
    RankingResult,
    evaluate,
    perturb_weight,
    sweep_lambda,
)
from .errors import TodimError
from .hf import HesitantElement
from .io import ProblemDocument, load_document, load_fixture, parse, save_document, serialize
from .phf import Ordering, ProbabilisticHesitantElement
from .problem import Criterion, DecisionProblem, strip_probabilities
from .weights import WeightSpecification, WeightVector, derive_weights

__version__ = "0.1.0"

__all__ = [
    "Criterion",
    "DecisionProblem",
    "DominanceBreakdown",
    "Evaluation",
    "HesitantElement",
    "Ordering",
    "ProbabilisticHesitantElement",
    "ProblemDocument",
    "RankingResult",
    "TodimError",
    "WeightSpecification",
    "WeightVector",
    "derive_weights",
    "evaluate",
    "load_document",
    "load_fixture",
    "parse",
    "perturb_weight",
    "save_document",
    "serialize",
    "strip_probabilities",
    "sweep_lambda",
    "__version__",
]
