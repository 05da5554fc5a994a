from pathlib import Path

import click

from cli.commands._output import emit_report
from cli.options import report_options, split_metrics, weight_options, weight_spec
from core.errors import DuplicateRunError
from evaluation import io
from evaluation.analysis import evaluate_suite


def _run_argument(value: str) -> tuple[str, Path]:
    name, sep, location = value.partition("=")
    if not sep or not name.strip() or not location:
        raise click.BadParameter(f"expected NAME=PATH, got {value!r}", param_hint="--run")
    return name.strip(), Path(location)


@click.command()
@click.option(
    "--run",
    "run_args",
    multiple=True,
    required=True,
    metavar="NAME=PATH",
    help="A run: predictions or confusion-matrix CSV. Repeat for every run.",
)
@weight_options
@report_options
def compare(
    run_args: tuple[str, ...],
    weights_file: Path | None,
    scheme: str | None,
    assignments: tuple[str, ...],
    fill: str | None,
    criteria: tuple[str, ...],
    metrics: str,
    fmt: str,
    output: Path | None,
    decimals: int,
) -> None:
    """Score several classifiers on one test set, rank them and list metric disagreements."""
    sources = [_run_argument(value) for value in run_args]
    if len(sources) < 2:
        raise click.UsageError("compare needs at least 2 runs")
    names = [name for name, _ in sources]
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise DuplicateRunError(f"duplicate run names: {', '.join(duplicates)}")
    spec = weight_spec(weights_file, scheme, assignments, fill, criteria)
    runs = [io.read_run(name, path) for name, path in sources]
    report = evaluate_suite(runs, spec, split_metrics(metrics))
    emit_report(report, fmt, output, decimals)
