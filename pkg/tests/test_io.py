"""Problem document parsing, validation paths, and canonical output."""

import json
import math

import pytest

from todim.engine import evaluate
from todim.errors import (
    ProblemSyntaxError,
    SchemaError,
    ValidationError,
)
from todim.io import (
    FILE_SUFFIX,
    SCHEMA_VERSION,
    ProblemDocument,
    canonical_json,
    document_from_data,
    document_payload,
    fixture_names,
    fixture_path,
    load_document,
    load_fixture,
    parse,
    parse_document,
    save_document,
    serialize,
    serialize_document,
)
from todim.problem import strip_probabilities


def minimal_data():
    return {
        "schema_version": 1,
        "mode": "crisp",
        "alternatives": ["A1", "A2"],
        "criteria": [{"name": "C1", "kind": "benefit"}],
        "assessments": [[0.8], [0.4]],
        "weights": [1.0],
    }


def phf_data():
    return {
        "schema_version": 1,
        "mode": "phf",
        "alternatives": ["A1", "A2"],
        "criteria": [{"name": "C1"}],
        "assessments": [
            [[{"d": 0.9, "p": 0.5}, {"d": 0.4, "p": 0.5}]],
            [[{"d": 0.6, "p": 1.0}]],
        ],
        "weights": [[{"d": 0.5, "p": 1.0}]],
    }


def raises_at(exc_type, path, data):
    with pytest.raises(exc_type) as info:
        document_from_data(data)
    assert info.value.path == path, (info.value.path, str(info.value))
    return info.value


# ---------------------------------------------------------------------------
# bundled fixtures
# ---------------------------------------------------------------------------


def test_fixture_listing():
    names = fixture_names()
    assert set(names) == {"case_study_phf", "case_study_hf"}
    for name in names:
        path = fixture_path(name)
        assert path.name == name + FILE_SUFFIX
        assert path.is_file()
    assert fixture_path("case_study_phf.todim.json") == fixture_path("case_study_phf")
    with pytest.raises(FileNotFoundError):
        fixture_path("no_such_problem")


def test_phf_fixture_cells(phf_document):
    problem = phf_document.problem
    assert problem.mode == "phf"
    assert problem.alternatives == ("A1", "A2", "A3", "A4")
    assert tuple(c.name for c in problem.criteria) == ("C1", "C2", "C3", "C4")
    assert all(c.kind == "benefit" for c in problem.criteria)
    assert problem.lam == 2.25
    assert problem.assessments[0][0].entries == ((55.0, 0.22), (68.0, 0.51), (73.0, 0.27))
    # Parsing keeps raw probabilities: this cell's mass is 0.96 and must
    # not be renormalized until the engine needs it.
    a2c4 = problem.assessments[1][3]
    assert a2c4.probability_mass() == pytest.approx(0.96, abs=1e-12)
    assert not a2c4.is_normalized()


def test_hf_fixture_cells(hf_document):
    problem = hf_document.problem
    assert problem.mode == "hf"
    assert problem.assessments[0][0].degrees == (55.0, 68.0, 73.0)
    assert problem.assessments[1][2].degrees == (60.0, 73.0, 85.0)
    assert problem.weights.mode == "hf"
    assert problem.weights.elements[0].degrees == (0.34, 0.40)


def test_fixture_metadata(phf_document, hf_document):
    assert phf_document.schema_version == SCHEMA_VERSION
    assert phf_document.title()
    notes = phf_document.notes()
    assert len(notes) == 2
    assert any("0.43" in note for note in notes)
    assert hf_document.title()


def test_fixture_files_are_canonical():
    for name in fixture_names():
        text = fixture_path(name).read_text(encoding="utf-8")
        assert serialize_document(parse_document(text)) == text
        assert text.endswith("\n")


def test_stripping_probabilities_recovers_hf_fixture(phf_document, hf_document):
    assert strip_probabilities(phf_document.problem) == hf_document.problem


# ---------------------------------------------------------------------------
# round trips
# ---------------------------------------------------------------------------


def test_serialize_parse_round_trip(phf_document, hf_document):
    for document in (phf_document, hf_document):
        again = parse_document(serialize_document(document))
        assert again.problem == document.problem
        assert again.metadata == document.metadata
        base = evaluate(document.problem)
        redo = evaluate(again.problem)
        assert base.breakdown == redo.breakdown
        assert base.ranking == redo.ranking


def test_problem_level_round_trip():
    problem = parse(json.dumps(minimal_data()))
    assert parse(serialize(problem)) == problem


def test_save_and_load_document(tmp_path, phf_document):
    target = tmp_path / "copy.todim.json"
    save_document(phf_document, target)
    assert load_document(target).problem == phf_document.problem
    assert target.read_text(encoding="utf-8") == serialize_document(phf_document)


def test_canonical_json_shape():
    text = canonical_json({"b": 1, "a": [1.5, "x"]})
    assert text == '{\n  "a": [\n    1.5,\n    "x"\n  ],\n  "b": 1\n}\n'
    with pytest.raises(ValueError):
        canonical_json({"bad": float("nan")})


def test_payload_always_carries_lambda_and_kind():
    document = parse_document(json.dumps(minimal_data()))
    payload = document_payload(document)
    assert payload["lambda"] == 2.25
    assert payload["criteria"][0]["kind"] == "benefit"
    assert "metadata" not in payload
    assert payload["schema_version"] == SCHEMA_VERSION


def test_default_schema_version():
    document = parse_document(json.dumps(minimal_data()))
    assert ProblemDocument(document.problem, {}).schema_version == SCHEMA_VERSION


# ---------------------------------------------------------------------------
# syntax and shape errors
# ---------------------------------------------------------------------------


def test_syntax_error_carries_position():
    with pytest.raises(ProblemSyntaxError) as info:
        parse_document('{"schema_version": 1,\n  "mode": }')
    assert info.value.line == 2
    assert isinstance(info.value.column, int)


def test_root_must_be_object():
    raises_at(SchemaError, "", [1, 2])


def test_unknown_root_key():
    data = minimal_data()
    data["extra"] = True
    with pytest.raises(SchemaError) as info:
        document_from_data(data)
    assert "extra" in str(info.value)


@pytest.mark.parametrize(
    "key", ["schema_version", "mode", "alternatives", "criteria", "assessments", "weights"]
)
def test_each_required_key(key):
    data = minimal_data()
    del data[key]
    with pytest.raises(SchemaError) as info:
        document_from_data(data)
    assert key in str(info.value)


def test_schema_version_checks():
    data = minimal_data()
    data["schema_version"] = True
    raises_at(SchemaError, "schema_version", data)
    data["schema_version"] = 2
    err = raises_at(ValidationError, "schema_version", data)
    assert "unsupported" in err.reason


def test_mode_checks():
    data = minimal_data()
    data["mode"] = "fuzzy"
    raises_at(ValidationError, "mode", data)
    data["mode"] = 3
    raises_at(SchemaError, "mode", data)


def test_alternative_checks():
    data = minimal_data()
    data["alternatives"] = []
    raises_at(ValidationError, "alternatives", data)
    data["alternatives"] = ["A1", ""]
    raises_at(ValidationError, "alternatives[1]", data)
    data["alternatives"] = ["A1", "A1"]
    err = raises_at(ValidationError, "alternatives[1]", data)
    assert "duplicate" in err.reason
    data["alternatives"] = ["A1", 2]
    raises_at(SchemaError, "alternatives[1]", data)


def test_criterion_checks():
    data = minimal_data()
    data["criteria"] = []
    raises_at(ValidationError, "criteria", data)
    data["criteria"] = [{"kind": "benefit"}]
    raises_at(SchemaError, "criteria[0]", data)
    data["criteria"] = [{"name": "C1", "sense": "up"}]
    raises_at(SchemaError, "criteria[0]", data)
    data["criteria"] = [{"name": "C1", "kind": "neutral"}]
    raises_at(ValidationError, "criteria[0].kind", data)
    data["criteria"] = [{"name": "C1"}, {"name": "C1"}]
    data["assessments"] = [[0.8, 0.1], [0.4, 0.2]]
    data["weights"] = [0.5, 0.5]
    raises_at(ValidationError, "criteria[1].name", data)


def test_kind_defaults_to_benefit():
    data = minimal_data()
    data["criteria"] = [{"name": "C1"}]
    document = document_from_data(data)
    assert document.problem.criteria[0].kind == "benefit"


def test_assessment_shape_checks():
    data = minimal_data()
    data["assessments"] = [[0.8]]
    err = raises_at(ValidationError, "assessments", data)
    assert "expected 2 rows" in err.reason
    data = minimal_data()
    data["assessments"] = [[0.8, 0.2], [0.4]]
    raises_at(ValidationError, "assessments[0]", data)
    data = minimal_data()
    data["assessments"] = [[0.8], "whoops"]
    raises_at(SchemaError, "assessments[1]", data)
    data = minimal_data()
    data["assessments"] = [[0.8], [True]]
    raises_at(SchemaError, "assessments[1][0]", data)


def test_phf_element_checks():
    data = phf_data()
    data["assessments"][0][0] = []
    raises_at(ValidationError, "assessments[0][0]", data)
    data = phf_data()
    data["assessments"][0][0][1]["q"] = 1
    raises_at(SchemaError, "assessments[0][0][1]", data)
    data = phf_data()
    del data["assessments"][0][0][1]["p"]
    raises_at(SchemaError, "assessments[0][0][1]", data)
    data = phf_data()
    data["assessments"][0][0][1]["p"] = -0.1
    raises_at(ValidationError, "assessments[0][0][1].p", data)
    data = phf_data()
    data["assessments"][0][0][0]["d"] = -5
    raises_at(ValidationError, "assessments[0][0][0].d", data)
    data = phf_data()
    data["assessments"][0][0][0]["p"] = 0.9
    err = raises_at(ValidationError, "assessments[0][0]", data)
    assert "exceeds 1" in err.reason
    data = phf_data()
    data["assessments"][1][0] = [{"d": 0.6, "p": 0.0}]
    err = raises_at(ValidationError, "assessments[1][0]", data)
    assert "mass must be positive" in err.reason
    data = phf_data()
    data["assessments"][0][0][0]["d"] = True
    raises_at(SchemaError, "assessments[0][0][0].d", data)


def test_partial_mass_is_accepted():
    data = phf_data()
    data["assessments"][0][0] = [{"d": 0.9, "p": 0.3}, {"d": 0.4, "p": 0.3}]
    document = document_from_data(data)
    cell = document.problem.assessments[0][0]
    assert math.isclose(cell.probability_mass(), 0.6)


def test_hf_element_checks():
    data = minimal_data()
    data["mode"] = "hf"
    data["assessments"] = [[[0.8, 0.6]], [[]]]
    data["weights"] = [[0.5]]
    raises_at(ValidationError, "assessments[1][0]", data)
    data["assessments"] = [[[0.8, 0.6]], [[-0.4]]]
    raises_at(ValidationError, "assessments[1][0][0]", data)
    data["assessments"] = [[[0.8, 0.6]], [["x"]]]
    raises_at(SchemaError, "assessments[1][0][0]", data)


def test_nonfinite_numbers_are_rejected():
    # Python's json module happily reads NaN and Infinity literals, so
    # the validator has to refuse them explicitly.
    text = json.dumps(minimal_data()).replace("0.8", "NaN")
    with pytest.raises(ValidationError) as info:
        parse_document(text)
    assert "finite" in info.value.reason
    text = json.dumps(minimal_data()).replace("0.8", "Infinity")
    with pytest.raises(ValidationError):
        parse_document(text)


def test_weight_checks():
    data = minimal_data()
    data["weights"] = [0.5, 0.5]
    err = raises_at(ValidationError, "weights", data)
    assert "expected 1" in err.reason
    data = minimal_data()
    data["weights"] = [0.0]
    err = raises_at(ValidationError, "weights[0]", data)
    assert "positive" in err.reason
    data = minimal_data()
    data["weights"] = [-2.0]
    raises_at(ValidationError, "weights[0]", data)
    data = phf_data()
    data["weights"] = [[{"d": 0.5, "p": 1.7}]]
    raises_at(ValidationError, "weights[0]", data)


def test_lambda_checks():
    data = minimal_data()
    data["lambda"] = 0
    raises_at(ValidationError, "lambda", data)
    data["lambda"] = "2.25"
    raises_at(SchemaError, "lambda", data)
    data["lambda"] = 3.5
    assert document_from_data(data).problem.lam == 3.5
    del data["lambda"]
    assert document_from_data(data).problem.lam == 2.25


def test_metadata_checks():
    data = minimal_data()
    data["metadata"] = "note"
    raises_at(SchemaError, "metadata", data)
    data["metadata"] = {"title": 3}
    raises_at(SchemaError, "metadata.title", data)
    data["metadata"] = {"notes": "not a list"}
    raises_at(SchemaError, "metadata.notes", data)
    data["metadata"] = {"notes": ["fine", 4]}
    raises_at(SchemaError, "metadata.notes[1]", data)
    data["metadata"] = {"title": "T", "notes": ["a"], "owner": "me"}
    document = document_from_data(data)
    assert document.title() == "T"
    assert document.metadata["owner"] == "me"
