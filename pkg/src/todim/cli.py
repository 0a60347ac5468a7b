"""Command-line front door: evaluate, compare, sweep, serve.

Exit codes: 0 success, 2 anything wrong with the input (unreadable
files, schema or validation failures, bad flags), 1 internal errors.
"""

from __future__ import annotations

import functools
import os
import socket
import sys
from pathlib import Path

import click

from . import __version__, engine, io, report
from .engine import METHOD_BY_MODE
from .errors import MethodMismatch, TodimError
from .io import ProblemDocument
from .problem import strip_probabilities

METHODS = tuple(METHOD_BY_MODE.values())
DEFAULT_PORT = 8080


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except click.ClickException:
            raise
        except (TodimError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except Exception as exc:
            click.echo(f"internal error: {exc}", err=True)
            sys.exit(1)

    return wrapper


def _resolve_method(document: ProblemDocument, method: str | None) -> str:
    expected = METHOD_BY_MODE[document.problem.mode]
    if method is not None and method != expected:
        raise MethodMismatch(
            f"method {method!r} does not match the document's {expected!r} problem"
        )
    return expected


_input_option = click.option(
    "--input",
    "input_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Problem document (*.todim.json).",
)
_method_option = click.option(
    "--method",
    type=click.Choice(METHODS),
    default=None,
    help="Must match the document's mode; inferred when omitted.",
)
_lambda_option = click.option(
    "--lambda",
    "lam",
    type=float,
    default=None,
    help="Loss attenuation override (default: the document's value).",
)
_output_option = click.option(
    "--output",
    type=click.Choice(report.FORMATS),
    default="table",
    show_default=True,
    help="Report format.",
)


@click.group()
@click.version_option(version=__version__, prog_name="todim")
def main() -> None:
    """Rank alternatives by prospect-theoretic pairwise dominance."""


@main.command()
@_input_option
@_method_option
@_lambda_option
@_output_option
@_guarded
def evaluate(input_path: Path, method: str | None, lam: float | None, output: str) -> None:
    """Evaluate one problem document and print its report."""
    document = io.load_document(input_path)
    _resolve_method(document, method)
    evaluation = engine.evaluate(document.problem, lam=lam)
    text = report.emit_report(
        evaluation, format=output, notes=document.notes(), title=document.title()
    )
    click.echo(text, nl=False)


@main.command()
@_input_option
@click.option(
    "--other",
    "other_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Second problem document to rank side by side.",
)
@click.option(
    "--strip-probabilities",
    "strip_flag",
    is_flag=True,
    help="Compare against the input's own probability-free twin.",
)
@_lambda_option
@_output_option
@_guarded
def compare(
    input_path: Path,
    other_path: Path | None,
    strip_flag: bool,
    lam: float | None,
    output: str,
) -> None:
    """Rank the same alternatives under two inputs and tabulate the ranks."""
    if (other_path is None) == (not strip_flag):
        raise click.UsageError("give exactly one of --other or --strip-probabilities")
    first = io.load_document(input_path)
    if other_path is not None:
        second_problem = io.load_document(other_path).problem
    else:
        second_problem = strip_probabilities(first.problem)
    problems = [first.problem, second_problem]
    if problems[0].alternatives != problems[1].alternatives:
        raise click.UsageError("compared problems must share alternative names")
    evaluations = [engine.evaluate(p, lam=lam) for p in problems]
    labels = [METHOD_BY_MODE[p.mode] for p in problems]
    if labels[0] == labels[1]:
        labels = [f"{labels[0]}:1", f"{labels[1]}:2"]
    click.echo(report.emit_comparison(labels, evaluations, format=output), nl=False)


def _parse_lambda_range(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise click.UsageError(f"--lambda-range must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise click.UsageError(f"--lambda-range must be numeric, got {text!r}") from None
    if start <= 0.0:
        raise click.UsageError("--lambda-range start must be positive")
    if step <= 0.0:
        raise click.UsageError("--lambda-range step must be positive")
    if stop < start:
        raise click.UsageError("--lambda-range stop must not be less than start")
    count = int((stop - start) / step + 1e-9) + 1
    return [start + k * step for k in range(count)]


@main.command()
@_input_option
@_method_option
@click.option(
    "--lambda-range",
    "lambda_range",
    required=True,
    help="Inclusive sweep start:stop:step, for example 0.5:5:0.5.",
)
@_output_option
@_guarded
def sweep(input_path: Path, method: str | None, lambda_range: str, output: str) -> None:
    """Re-rank under a range of loss attenuation values."""
    values = _parse_lambda_range(lambda_range)
    document = io.load_document(input_path)
    _resolve_method(document, method)
    results = engine.sweep_lambda(document.problem, values)
    click.echo(
        report.emit_sweep(results, document.problem.alternatives, format=output), nl=False
    )


@main.command()
@click.option("--port", type=int, default=None, help=f"Defaults to TODIM_PORT, then {DEFAULT_PORT}.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--static",
    "static_dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Directory of built UI assets (default: frontend/dist if present).",
)
def serve(port: int | None, host: str, static_dir: Path | None) -> None:
    """Run the HTTP evaluation service until interrupted."""
    if port is None:
        env = os.environ.get("TODIM_PORT", "")
        if env:
            try:
                port = int(env)
            except ValueError:
                raise click.UsageError(f"TODIM_PORT must be an integer, got {env!r}") from None
        else:
            port = DEFAULT_PORT
    if static_dir is None:
        default_static = Path("frontend") / "dist"
        if default_static.is_dir():
            static_dir = default_static
    try:
        with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as probe:
            probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
            probe.bind((host, port))
    except OSError as exc:
        click.echo(f"error: cannot bind {host}:{port}: {exc}", err=True)
        sys.exit(1)

    import uvicorn

    from .service import create_app

    try:
        uvicorn.run(create_app(static_dir), host=host, port=port, log_level="info")
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
