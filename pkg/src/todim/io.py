"""Problem documents: parsing, validation, canonical serialization.

Documents are JSON objects with a fixed key set (``schema_version``,
``mode``, ``alternatives``, ``criteria``, ``assessments``, ``weights``,
optional ``lambda`` and ``metadata``).  Validation errors carry the path
of the offending field, for example ``assessments[2][0].p``, so callers
can surface precise messages.

Serialization is canonical: sorted keys, two-space indent, a trailing
newline, and every optional field that has a default written out
explicitly.  Serializing a parsed document therefore reproduces the
same bytes, which the CLI and the service rely on for deterministic
output.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import ProblemSyntaxError, SchemaError, ValidationError
from .hf import HesitantElement
from .phf import TOLERANCE, ProbabilisticHesitantElement
from .problem import DEFAULT_LOSS_ATTENUATION, KINDS, Cell, Criterion, DecisionProblem
from .weights import MODES, WeightSpecification

SCHEMA_VERSION = 1
FILE_SUFFIX = ".todim.json"

_ROOT_KEYS = {
    "schema_version",
    "mode",
    "alternatives",
    "criteria",
    "assessments",
    "weights",
    "lambda",
    "metadata",
}
_REQUIRED_KEYS = _ROOT_KEYS - {"lambda", "metadata"}


@dataclass(frozen=True)
class ProblemDocument:
    """A decision problem plus its free-form metadata."""

    problem: DecisionProblem
    metadata: dict[str, Any] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def title(self) -> str | None:
        title = self.metadata.get("title")
        return title if isinstance(title, str) else None

    def notes(self) -> list[str]:
        notes = self.metadata.get("notes", [])
        return list(notes) if isinstance(notes, list) else []


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError("expected an object", path)
    return value


def _array(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError("expected an array", path)
    return value


def _string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError("expected a string", path)
    return value


def _number(value: Any, path: str) -> float:
    if not _is_number(value):
        raise SchemaError("expected a number", path)
    number = float(value)
    if not math.isfinite(number):
        raise ValidationError("must be finite", path)
    return number


def _phf_element(value: Any, path: str) -> ProbabilisticHesitantElement:
    items = _array(value, path)
    if not items:
        raise ValidationError("needs at least one entry", path)
    entries = []
    for t, item in enumerate(items):
        here = f"{path}[{t}]"
        entry = _object(item, here)
        unknown = set(entry) - {"d", "p"}
        if unknown:
            raise SchemaError(f"unknown keys {sorted(unknown)}", here)
        for key in ("d", "p"):
            if key not in entry:
                raise SchemaError(f"missing key {key!r}", here)
        degree = _number(entry["d"], f"{here}.d")
        probability = _number(entry["p"], f"{here}.p")
        if degree < 0.0:
            raise ValidationError("degree must be non-negative", f"{here}.d")
        if probability < 0.0:
            raise ValidationError("probability must be non-negative", f"{here}.p")
        entries.append((degree, probability))
    mass = math.fsum(p for _, p in entries)
    if mass > 1.0 + TOLERANCE:
        raise ValidationError(f"probability mass {mass:.9g} exceeds 1", path)
    if mass <= 0.0:
        raise ValidationError("probability mass must be positive", path)
    return ProbabilisticHesitantElement(tuple(entries))


def _hf_element(value: Any, path: str) -> HesitantElement:
    items = _array(value, path)
    if not items:
        raise ValidationError("needs at least one degree", path)
    degrees = []
    for t, item in enumerate(items):
        degree = _number(item, f"{path}[{t}]")
        if degree < 0.0:
            raise ValidationError("degree must be non-negative", f"{path}[{t}]")
        degrees.append(degree)
    return HesitantElement(tuple(degrees))


def _cell(mode: str, value: Any, path: str) -> Cell:
    if mode == "phf":
        return _phf_element(value, path)
    if mode == "hf":
        return _hf_element(value, path)
    return _number(value, path)


def _alternatives(value: Any) -> tuple[str, ...]:
    items = _array(value, "alternatives")
    if not items:
        raise ValidationError("needs at least one alternative", "alternatives")
    names = []
    for i, item in enumerate(items):
        name = _string(item, f"alternatives[{i}]")
        if not name:
            raise ValidationError("name must not be empty", f"alternatives[{i}]")
        if name in names:
            raise ValidationError(f"duplicate alternative {name!r}", f"alternatives[{i}]")
        names.append(name)
    return tuple(names)


def _criteria(value: Any) -> tuple[Criterion, ...]:
    items = _array(value, "criteria")
    if not items:
        raise ValidationError("needs at least one criterion", "criteria")
    criteria = []
    seen = set()
    for j, item in enumerate(items):
        here = f"criteria[{j}]"
        entry = _object(item, here)
        unknown = set(entry) - {"name", "kind"}
        if unknown:
            raise SchemaError(f"unknown keys {sorted(unknown)}", here)
        if "name" not in entry:
            raise SchemaError("missing key 'name'", here)
        name = _string(entry["name"], f"{here}.name")
        if not name:
            raise ValidationError("name must not be empty", f"{here}.name")
        if name in seen:
            raise ValidationError(f"duplicate criterion {name!r}", f"{here}.name")
        seen.add(name)
        kind = entry.get("kind", "benefit")
        kind = _string(kind, f"{here}.kind")
        if kind not in KINDS:
            raise ValidationError(f"kind must be one of {list(KINDS)}", f"{here}.kind")
        criteria.append(Criterion(name, kind))
    return tuple(criteria)


def parse_document(text: str) -> ProblemDocument:
    """Parse and validate one problem document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemSyntaxError(str(exc), exc.lineno, exc.colno) from None
    return document_from_data(data)


def document_from_data(data: Any) -> ProblemDocument:
    """Validate an already-decoded document object."""
    root = _object(data, "")
    unknown = set(root) - _ROOT_KEYS
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}")
    missing = _REQUIRED_KEYS - set(root)
    if missing:
        raise SchemaError(f"missing keys {sorted(missing)}")

    version = root["schema_version"]
    if not isinstance(version, int) or isinstance(version, bool):
        raise SchemaError("expected an integer", "schema_version")
    if version != SCHEMA_VERSION:
        raise ValidationError(f"unsupported schema_version {version}", "schema_version")

    mode = _string(root["mode"], "mode")
    if mode not in MODES:
        raise ValidationError(f"mode must be one of {list(MODES)}", "mode")

    alternatives = _alternatives(root["alternatives"])
    criteria = _criteria(root["criteria"])
    n, m = len(alternatives), len(criteria)

    rows = _array(root["assessments"], "assessments")
    if len(rows) != n:
        raise ValidationError(f"expected {n} rows, got {len(rows)}", "assessments")
    assessments = []
    for i, row in enumerate(rows):
        cells = _array(row, f"assessments[{i}]")
        if len(cells) != m:
            raise ValidationError(f"expected {m} cells, got {len(cells)}", f"assessments[{i}]")
        assessments.append(
            tuple(_cell(mode, cell, f"assessments[{i}][{j}]") for j, cell in enumerate(cells))
        )

    raw_weights = _array(root["weights"], "weights")
    if len(raw_weights) != m:
        raise ValidationError(f"expected {m} elements, got {len(raw_weights)}", "weights")
    elements = []
    for j, item in enumerate(raw_weights):
        element = _cell(mode, item, f"weights[{j}]")
        if mode == "crisp" and element <= 0.0:
            raise ValidationError("weight must be positive", f"weights[{j}]")
        elements.append(element)

    lam = DEFAULT_LOSS_ATTENUATION
    if "lambda" in root:
        lam = _number(root["lambda"], "lambda")
        if lam <= 0.0:
            raise ValidationError("must be positive", "lambda")

    metadata: dict[str, Any] = {}
    if "metadata" in root:
        metadata = dict(_object(root["metadata"], "metadata"))
        if "title" in metadata:
            _string(metadata["title"], "metadata.title")
        if "notes" in metadata:
            notes = _array(metadata["notes"], "metadata.notes")
            for i, note in enumerate(notes):
                _string(note, f"metadata.notes[{i}]")

    problem = DecisionProblem(
        alternatives=alternatives,
        criteria=criteria,
        mode=mode,
        assessments=tuple(assessments),
        weights=WeightSpecification(mode, tuple(elements)),
        lam=lam,
    )
    return ProblemDocument(problem, metadata)


def parse(text: str) -> DecisionProblem:
    return parse_document(text).problem


def _cell_payload(mode: str, cell: Cell) -> Any:
    if mode == "phf":
        return [{"d": d, "p": p} for d, p in cell.entries]
    if mode == "hf":
        return list(cell.degrees)
    return cell


def document_payload(document: ProblemDocument) -> dict[str, Any]:
    """Plain-dict form of a document, ready for JSON encoding."""
    problem = document.problem
    payload: dict[str, Any] = {
        "schema_version": document.schema_version,
        "mode": problem.mode,
        "alternatives": list(problem.alternatives),
        "criteria": [{"name": c.name, "kind": c.kind} for c in problem.criteria],
        "assessments": [
            [_cell_payload(problem.mode, cell) for cell in row] for row in problem.assessments
        ],
        "weights": [_cell_payload(problem.mode, el) for el in problem.weights.elements],
        "lambda": problem.lam,
    }
    if document.metadata:
        payload["metadata"] = document.metadata
    return payload


def canonical_json(payload: Any) -> str:
    """Encode with sorted keys, two-space indent, and a trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def serialize_document(document: ProblemDocument) -> str:
    return canonical_json(document_payload(document))


def serialize(problem: DecisionProblem) -> str:
    return serialize_document(ProblemDocument(problem))


def load_document(path: str | Path) -> ProblemDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def save_document(document: ProblemDocument, path: str | Path) -> None:
    Path(path).write_text(serialize_document(document), encoding="utf-8")


def _fixture_file(name: str) -> str:
    return name if name.endswith(FILE_SUFFIX) else name + FILE_SUFFIX


def fixture_names() -> tuple[str, ...]:
    """Names of the bundled example documents."""
    base = resources.files(__package__) / "fixtures"
    return tuple(
        sorted(
            entry.name[: -len(FILE_SUFFIX)]
            for entry in base.iterdir()
            if entry.name.endswith(FILE_SUFFIX)
        )
    )


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled example document."""
    candidate = resources.files(__package__) / "fixtures" / _fixture_file(name)
    path = Path(str(candidate))
    if not path.is_file():
        raise FileNotFoundError(f"no bundled fixture named {name!r}")
    return path


def load_fixture(name: str) -> ProblemDocument:
    return parse_document(fixture_path(name).read_text(encoding="utf-8"))
