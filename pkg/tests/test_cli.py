"""End-to-end command tests through click's in-process runner."""

import json
import socket

import pytest
from click.testing import CliRunner

import todim.engine
from todim.cli import main
from todim.io import fixture_path, load_fixture, serialize_document

PHF = str(fixture_path("case_study_phf"))
HF = str(fixture_path("case_study_hf"))


def run(args, env=None):
    return CliRunner().invoke(main, args, env=env, catch_exceptions=False)


def text_of(result):
    try:
        return result.output + result.stderr
    except ValueError:
        return result.output


def test_version_banner():
    result = run(["--version"])
    assert result.exit_code == 0
    assert "todim" in result.output


def test_evaluate_table():
    result = run(["evaluate", "--input", PHF])
    assert result.exit_code == 0
    assert "ranking: A2 > A3 > A4 > A1" in result.output
    assert "overall: 0 1 0.40 0.34" in result.output
    # Document title and footnotes ride along in the table view.
    assert result.output.splitlines()[0] == load_fixture("case_study_phf").title()
    assert "0.43" in result.output


def test_evaluate_json_is_deterministic():
    first = run(["evaluate", "--input", PHF, "--output", "json"])
    second = run(["evaluate", "--input", PHF, "--output", "json"])
    assert first.exit_code == 0
    assert first.output == second.output
    payload = json.loads(first.output)
    assert payload["order"] == ["A2", "A3", "A4", "A1"]
    assert payload["overall"][2] == 0.4025375998233545


def test_evaluate_hf_json_overall():
    result = run(["evaluate", "--input", HF, "--output", "json", "--method", "hf"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert abs(payload["overall"][2] - 0.77) <= 0.01
    assert abs(payload["overall"][3] - 0.47) <= 0.01


def test_evaluate_lambda_override():
    result = run(["evaluate", "--input", PHF, "--lambda", "5", "--output", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["lambda"] == 5.0


def test_evaluate_method_mismatch_exits_2():
    result = run(["evaluate", "--input", PHF, "--method", "hf"])
    assert result.exit_code == 2
    assert "does not match" in text_of(result)


def test_evaluate_missing_file_exits_2(tmp_path):
    result = run(["evaluate", "--input", str(tmp_path / "nope.todim.json")])
    assert result.exit_code == 2


def test_evaluate_invalid_document_exits_2(tmp_path):
    bad = tmp_path / "bad.todim.json"
    bad.write_text("{", encoding="utf-8")
    result = run(["evaluate", "--input", str(bad)])
    assert result.exit_code == 2
    assert "error:" in text_of(result)


def test_evaluate_nonpositive_lambda_exits_2():
    result = run(["evaluate", "--input", PHF, "--lambda", "0"])
    assert result.exit_code == 2


def test_internal_errors_exit_1(monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("wedged")

    monkeypatch.setattr(todim.engine, "evaluate", boom)
    result = run(["evaluate", "--input", PHF])
    assert result.exit_code == 1
    assert "internal error: wedged" in text_of(result)


def test_compare_with_other_document():
    result = run(["compare", "--input", PHF, "--other", HF])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].split() == ["alternative", "phf", "hf"]
    assert lines[1].split() == ["A1", "4", "4"]
    assert "ranking (phf): A2 > A3 > A4 > A1" in result.output
    assert "ranking (hf): A2 > A3 > A4 > A1" in result.output


def test_compare_with_stripped_probabilities():
    result = run(["compare", "--input", PHF, "--strip-probabilities"])
    assert result.exit_code == 0
    assert "hf" in result.output.splitlines()[0].split()
    assert "ranking (hf): A2 > A3 > A4 > A1" in result.output


def test_compare_same_method_labels():
    result = run(["compare", "--input", HF, "--other", HF])
    assert result.exit_code == 0
    assert result.output.splitlines()[0].split() == ["alternative", "hf:1", "hf:2"]


def test_compare_flag_exclusivity():
    both = run(["compare", "--input", PHF, "--other", HF, "--strip-probabilities"])
    assert both.exit_code == 2
    neither = run(["compare", "--input", PHF])
    assert neither.exit_code == 2
    assert "exactly one" in text_of(neither)


def test_compare_requires_shared_alternatives(tmp_path):
    document = load_fixture("case_study_hf")
    import dataclasses

    from todim.io import ProblemDocument

    renamed = dataclasses.replace(
        document.problem, alternatives=("B1", "B2", "B3", "B4")
    )
    other = tmp_path / "renamed.todim.json"
    other.write_text(serialize_document(ProblemDocument(renamed, {})), encoding="utf-8")
    result = run(["compare", "--input", PHF, "--other", str(other)])
    assert result.exit_code == 2
    assert "share alternative names" in text_of(result)


def test_sweep_single_value():
    result = run(["sweep", "--input", PHF, "--lambda-range", "2.25:2.25:1"])
    assert result.exit_code == 0
    lines = [line for line in result.output.splitlines() if line]
    assert lines[0].split()[0] == "lambda"
    assert len(lines) == 3  # header, one row, change summary
    assert "order changes: none" in result.output


def test_sweep_inclusive_grid():
    result = run(["sweep", "--input", PHF, "--lambda-range", "0.5:5:0.5", "--output", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    lams = [entry["lambda"] for entry in payload["results"]]
    assert len(lams) == 10
    assert lams[0] == 0.5
    assert lams[-1] == 5.0
    assert payload["change_points"] == []


@pytest.mark.parametrize(
    "spec",
    ["1:2", "a:b:c", "0:2:1", "1:2:0", "5:1:1", "-1:2:0.5"],
)
def test_sweep_bad_ranges_exit_2(spec):
    result = run(["sweep", "--input", PHF, "--lambda-range", spec])
    assert result.exit_code == 2


def test_sweep_method_mismatch_exits_2():
    result = run(["sweep", "--input", PHF, "--lambda-range", "1:2:1", "--method", "classical"])
    assert result.exit_code == 2


def _capture_uvicorn(monkeypatch):
    import uvicorn

    calls = []

    def fake_run(app, host, port, log_level):
        calls.append({"host": host, "port": port, "log_level": log_level})

    monkeypatch.setattr(uvicorn, "run", fake_run)
    return calls


def test_serve_default_port(monkeypatch):
    calls = _capture_uvicorn(monkeypatch)
    result = run(["serve"], env={"TODIM_PORT": ""})
    assert result.exit_code == 0
    assert calls == [{"host": "127.0.0.1", "port": 8080, "log_level": "info"}]


def test_serve_port_from_environment(monkeypatch):
    calls = _capture_uvicorn(monkeypatch)
    result = run(["serve"], env={"TODIM_PORT": "9123"})
    assert result.exit_code == 0
    assert calls[0]["port"] == 9123


def test_serve_flag_beats_environment(monkeypatch):
    calls = _capture_uvicorn(monkeypatch)
    result = run(["serve", "--port", "9200"], env={"TODIM_PORT": "9123"})
    assert result.exit_code == 0
    assert calls[0]["port"] == 9200


def test_serve_rejects_bad_environment_port(monkeypatch):
    calls = _capture_uvicorn(monkeypatch)
    result = run(["serve"], env={"TODIM_PORT": "late"})
    assert result.exit_code == 2
    assert calls == []


def test_serve_occupied_port_exits_1(monkeypatch):
    calls = _capture_uvicorn(monkeypatch)
    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as holder:
        holder.bind(("127.0.0.1", 0))
        holder.listen(1)
        port = holder.getsockname()[1]
        result = run(["serve", "--port", str(port)])
    assert result.exit_code == 1
    assert f"cannot bind 127.0.0.1:{port}" in text_of(result)
    assert calls == []
